"""Additive 0-cycles with modulus and their class maps.

A generator is (f(t), b_1..b_(n-1)) with f(0) a unit of F and the b's
nonzero.  Its Milnor class is the relative symbol
{f(0)^(-1) f(t) mod t^(m+1), b_1..b_(n-1)}; its de Rham-Witt image is
phi(gamma_inv of the same unit, b's).  The two routes are linked by the
diagonal c_i = -(1/i) omega_i coming from the log-derivative identity
log gamma(a) = - sum_j ghost(a)_j t^j / j.

Parametrized curves (g_0..g_n) over F(u) supply boundaries: faces are cut
at the rational zeros and poles of the cube coordinates g_1..g_n, with
multiplicities ord_c(g_i), and the class of a boundary vanishes.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (FaceDegenerate, NonRationalBoundary, NonRationalSupport,
                     NotAdmissible)
from .forms import CanonRelForm, DiffForm
from .milnorfield import UPoly, Valuation, base_context
from .relmilnor import RelMilnorClass, RelSymbol, normal_form, restrict_class
from .scalars import Context, FieldElem
from .trunc import TruncElem
from .witt import gamma_inv
from .drw import DRWForm, phi


class CycleGen:
    """A scaled 0-cycle generator (f(t), b_1..b_(n-1)). Immutable."""

    __slots__ = ("ctx", "f", "bs", "coef")

    def __init__(self, f, bs, coef=1):
        f = tuple(f)
        if not f:
            raise ValueError("f needs at least the constant coefficient")
        ctx = f[0].ctx
        for c in f:
            ctx.check(c.ctx)
        bs = tuple(bs)
        for b in bs:
            ctx.check(b.ctx)
        self.ctx = ctx
        self.f = f
        self.bs = bs
        self.coef = Fraction(coef)

    @property
    def degree(self):
        """The cycle-group degree n; the generator has n-1 cube coordinates."""
        return len(self.bs) + 1

    def scale(self, c):
        return CycleGen(self.f, self.bs, self.coef * Fraction(c))

    def is_admissible(self):
        return not self.f[0].is_zero() and all(not b.is_zero() for b in self.bs)

    def unit(self, m: int) -> TruncElem:
        """f(0)^(-1) f(t) mod t^(m+1), the principal unit the classes see."""
        if not self.is_admissible():
            raise NotAdmissible("f(0) = 0 or a face coordinate is 0")
        inv0 = self.f[0].inv()
        coeffs = [self.ctx.one]
        for i in range(1, m + 1):
            coeffs.append(self.f[i] * inv0 if i < len(self.f) else self.ctx.zero)
        return TruncElem(self.ctx, m, coeffs)

    def __repr__(self):
        fstr = " + ".join("(%s)t^%d" % (c, i) for i, c in enumerate(self.f)
                          if not c.is_zero())
        return "%s*[(%s; %s)]" % (self.coef, fstr or "0",
                                  ", ".join(str(b) for b in self.bs))

    def to_json(self):
        return {"f": [c.to_json() for c in self.f],
                "bs": [b.to_json() for b in self.bs],
                "coef": "%s/%s" % (self.coef.numerator, self.coef.denominator)}

    @classmethod
    def from_json(cls, ctx, data):
        p, q = data["coef"].split("/")
        return cls([FieldElem.from_json(ctx, c) for c in data["f"]],
                   [FieldElem.from_json(ctx, b) for b in data["bs"]],
                   Fraction(int(p), int(q)))


def check_admissible(z: CycleGen, m: int) -> bool:
    return z.is_admissible()


def _as_sum(zs):
    return [zs] if isinstance(zs, CycleGen) else list(zs)


def cyc_milnor(zs, m: int) -> RelMilnorClass:
    """The relative Milnor class of a generator sum at level m."""
    zs = _as_sum(zs)
    n = zs[0].degree
    ctx = zs[0].ctx
    total = RelMilnorClass.zero(ctx, n, m)
    for z in zs:
        if z.degree != n:
            raise ValueError("mixed degrees in one cycle sum")
        entries = [z.unit(m)]
        entries.extend(TruncElem.constant(b, m) for b in z.bs)
        total = total + normal_form(RelSymbol(entries, z.coef))
    return total


def cycle_to_drw(zs, m: int) -> DRWForm:
    """The de Rham-Witt form of a generator sum: phi(gamma_inv(unit), bs)."""
    zs = _as_sum(zs)
    n = zs[0].degree
    ctx = zs[0].ctx
    total = DRWForm.zero(ctx, n - 1, m)
    for z in zs:
        a = gamma_inv(z.unit(m))
        total = total + phi(a, z.bs).scale(z.coef)
    return total


def drw_to_milnor_diagonal(omega: DRWForm) -> RelMilnorClass:
    """The invertible diagonal c_i = -(1/i) omega_i between ghost and
    canonical coordinates."""
    comps = [w.scale(Fraction(-1, i)) for i, w in enumerate(omega.comps, start=1)]
    return RelMilnorClass(omega.degree + 1,
                          CanonRelForm(omega.ctx, omega.degree, omega.level, comps))


def milnor_to_drw_diagonal(xi: RelMilnorClass) -> DRWForm:
    """Inverse of the diagonal: omega_i = -i * c_i."""
    comps = [w.scale(-i) for i, w in enumerate(xi.canon.comps, start=1)]
    return DRWForm(xi.ctx, xi.canon.degree, xi.level, comps)


def tower_compat(zs, m_big: int, m_small: int) -> bool:
    """Whether restriction of the level-m_big class gives the level-m_small
    class; true for every admissible sum."""
    if m_small > m_big:
        raise ValueError("levels out of order")
    return (restrict_class(cyc_milnor(zs, m_big), m_small)
            == cyc_milnor(zs, m_small))


class ParamCurve:
    """A parametrized curve u -> (g_0(u); g_1(u)..g_n(u)) over F(u); g_0 is
    the t-coordinate, the rest are cube coordinates. Immutable."""

    __slots__ = ("ctx", "upos", "gs")

    def __init__(self, ctx, upos, gs):
        gs = tuple(gs)
        if len(gs) < 2:
            raise ValueError("need g_0 and at least one cube coordinate")
        for g in gs:
            ctx.check(g.ctx)
            if g.is_zero():
                raise ValueError("coordinates must be nonzero functions")
        self.ctx = ctx
        self.upos = upos
        self.gs = gs

    @property
    def degree(self):
        return len(self.gs) - 1

    def __repr__(self):
        return "Curve(%s)" % "; ".join(str(g) for g in self.gs)


def _support_points(curve: ParamCurve, which):
    """Rational points where some g_i (i in which) has a zero or pole, as
    Valuations (infinity included), plus the non-rational factor report."""
    ctx, upos = curve.ctx, curve.upos
    base = base_context(ctx, upos)
    seen = {}
    points = []
    nonrational = []
    include_inf = False
    for i in which:
        g = curve.gs[i]
        num = UPoly.from_poly(base, g.frac.numer, upos)
        den = UPoly.from_poly(base, g.frac.denom, upos)
        if num.degree() != den.degree():
            include_inf = True
        for poly in (g.frac.numer, g.frac.denom):
            _, factors = poly.factor_list()
            for fac, _mult in factors:
                fu = UPoly.from_poly(base, fac, upos)
                d = fu.degree()
                if d == 0:
                    continue
                if d >= 2:
                    nonrational.append(str(fac))
                    continue
                c = -fu.coeffs.get(0, base.zero) / fu.coeffs[1]
                if ("fin", c) not in seen:
                    seen[("fin", c)] = True
                    points.append(Valuation.finite(ctx, upos, c))
    if include_inf:
        points.append(Valuation.infinity(ctx, upos))
    return points, nonrational


def boundary(curve: ParamCurve, m: int):
    """The boundary sum_(i>=1) (-1)^i (del_i^inf - del_i^0) as a list of
    CycleGen, cutting the curve at the rational zeros and poles of each
    cube coordinate with multiplicity ord_c(g_i)."""
    n = curve.degree
    points, nonrational = _support_points(curve, range(1, n + 1))
    if nonrational:
        raise NonRationalBoundary("cube coordinates vanish outside rational "
                                  "points: %s" % nonrational)
    out = []
    one = base_context(curve.ctx, curve.upos).one
    for v in points:
        data = [v.ord_residue(g) for g in curve.gs]
        hot = [i for i in range(1, n + 1) if data[i][0] != 0]
        if not hot:
            continue
        # points escaping to t = infinity lie outside A^1: no face there
        if data[0][0] < 0:
            continue
        if data[0][0] > 0:
            raise NotAdmissible("face point meets the divisor t = 0 at %s" % v)
        if len(hot) > 1:
            raise FaceDegenerate("two cube coordinates degenerate at %s" % v)
        i = hot[0]
        ord_i = data[i][0]
        # a cube coordinate equal to 1 puts the point outside the cube
        if any(data[j][1] == one for j in range(1, n + 1) if j != i):
            continue
        f0 = data[0][1]
        bs = [data[j][1] for j in range(1, n + 1) if j != i]
        f = [f0.ctx.one, -f0.inv()]
        # del_i^0 carries +ord, del_i^inf carries -ord; total sign
        # (-1)^i (del^inf - del^0) = (-1)^(i+1) * ord on the 0-side
        coef = (-1) ** (i + 1) * ord_i
        out.append(CycleGen(f, bs, coef))
    return out


def _factor_multiplicity(poly, fac):
    """Multiplicity of the irreducible polynomial fac in poly."""
    k = 0
    while poly:
        q, r = divmod(poly, fac)
        if r:
            break
        k += 1
        poly = q
    return k


def _ord_at_factor(g: FieldElem, fac) -> int:
    """ord of g at the closed point cut out by the irreducible fac; exact
    for any closed point, rational or not, since only factor
    multiplicities enter."""
    return (_factor_multiplicity(g.frac.numer, fac)
            - _factor_multiplicity(g.frac.denom, fac))


def _u_degree(base, poly, upos):
    return UPoly.from_poly(base, poly, upos).degree()


def modulus_check_curve(curve: ParamCurve, m: int) -> bool:
    """The modulus inequality at every zero of the t-coordinate (closed
    points of any degree, infinity included):
    sum_i ord_c(g_i - 1) >= (m+1) * ord_c(g_0)."""
    ctx, upos = curve.ctx, curve.upos
    base = base_context(ctx, upos)
    one = ctx.one
    g0 = curve.gs[0]
    checks = []
    _, factors = g0.frac.numer.factor_list()
    for fac, mult in factors:
        if _u_degree(base, fac, upos) == 0:
            continue
        # numerator and denominator are coprime, so ord(g_0) here = mult
        ords = []
        for g in curve.gs[1:]:
            diff = g - one
            ords.append(None if diff.is_zero() else _ord_at_factor(diff, fac))
        checks.append((mult, ords))
    d0_inf = (_u_degree(base, g0.frac.denom, upos)
              - _u_degree(base, g0.frac.numer, upos))
    if d0_inf > 0:
        ords = []
        for g in curve.gs[1:]:
            diff = g - one
            if diff.is_zero():
                ords.append(None)
            else:
                ords.append(_u_degree(base, diff.frac.denom, upos)
                            - _u_degree(base, diff.frac.numer, upos))
        checks.append((d0_inf, ords))
    for d0, ords in checks:
        if any(o is None for o in ords):
            continue  # some g_i = 1 identically: ord infinite, holds
        if sum(ords) < (m + 1) * d0:
            return False
    return True


def verify_boundary_vanishing(curve: ParamCurve, m: int):
    """Check that the Milnor class of the boundary vanishes at level m.
    Returns (ok, evidence); requires the modulus inequality."""
    if not modulus_check_curve(curve, m):
        return False, {"modulus": False}
    gens = boundary(curve, m)
    if not gens:
        return True, {"modulus": True, "boundary": "empty"}
    cls = cyc_milnor(gens, m)
    return cls.is_zero(), {"modulus": True,
                           "boundary_terms": len(gens),
                           "class_zero": cls.is_zero()}
