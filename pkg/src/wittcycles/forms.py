"""Kahler differential forms over F and over the truncated ring F_m.

A differential n-form is a sparse association from strictly increasing
index subsets S of the variable list (|S| = n) to field coefficients of
dx_S.  Forms over F_m = F[t]/(t^(m+1)) are kept in the split shape

    base  +  sum_i t^i (x) omega_i  +  sum_i t^i dt ^ eta_i ,

with t^(m+1) = 0 and t^m dt = 0 enforced by the index ranges.  dt is kept
leftmost in dt-terms; wedging a p-form past dt from the left contributes
the sign (-1)^p.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotRelative, ZeroArgument
from .scalars import Context, FieldElem


def _merge_sign(s, t):
    """Sign of sorting the concatenation s + t of two strictly increasing
    index tuples; None when they intersect."""
    inversions = 0
    for a in s:
        for b in t:
            if a == b:
                return None, None
            if a > b:
                inversions += 1
    merged = tuple(sorted(s + t))
    return merged, (-1) ** inversions


class DiffForm:
    """A differential form of fixed degree over Q(x1..xr). Immutable.

    Degree -1 is allowed and forced to be the zero form; it appears as the
    dt-part of degree-0 forms over F_m.
    """

    __slots__ = ("ctx", "degree", "coeffs")

    def __init__(self, ctx, degree, coeffs=None):
        self.ctx = ctx
        self.degree = degree
        clean = {}
        if coeffs and degree >= 0:
            for subset, value in coeffs.items():
                if value.is_zero():
                    continue
                subset = tuple(subset)
                if len(subset) != degree or list(subset) != sorted(set(subset)):
                    raise ValueError("bad index subset %r for degree %d" % (subset, degree))
                if subset and (subset[0] < 0 or subset[-1] >= ctx.r):
                    raise ValueError("index subset %r out of range" % (subset,))
                clean[subset] = value
        self.coeffs = clean

    @classmethod
    def zero(cls, ctx, degree):
        return cls(ctx, degree)

    @classmethod
    def scalar(cls, value: FieldElem):
        """A 0-form from a field element."""
        return cls(value.ctx, 0, {(): value})

    def as_scalar(self) -> FieldElem:
        if self.degree != 0:
            raise ValueError("not a 0-form")
        return self.coeffs.get((), self.ctx.zero)

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, DiffForm) and self.ctx == other.ctx
                and self.degree == other.degree and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.ctx, self.degree, frozenset(self.coeffs.items())))

    def __add__(self, other):
        self._check(other)
        coeffs = dict(self.coeffs)
        for subset, value in other.coeffs.items():
            coeffs[subset] = coeffs.get(subset, self.ctx.zero) + value
        return DiffForm(self.ctx, self.degree, coeffs)

    def __neg__(self):
        return DiffForm(self.ctx, self.degree,
                        {s: -v for s, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if isinstance(c, (int, Fraction)):
            c = self.ctx.rational(c)
        return DiffForm(self.ctx, self.degree,
                        {s: c * v for s, v in self.coeffs.items()})

    def _check(self, other):
        self.ctx.check(other.ctx)
        if self.degree != other.degree:
            raise ValueError("degree mismatch %d vs %d" % (self.degree, other.degree))

    def wedge(self, other):
        self.ctx.check(other.ctx)
        degree = self.degree + other.degree
        if self.degree < 0 or other.degree < 0 or degree > self.ctx.r:
            return DiffForm(self.ctx, max(degree, -1) if degree < 0 else degree)
        coeffs = {}
        for s, a in self.coeffs.items():
            for t, b in other.coeffs.items():
                merged, sign = _merge_sign(s, t)
                if merged is None:
                    continue
                term = a * b if sign == 1 else -(a * b)
                coeffs[merged] = coeffs.get(merged, self.ctx.zero) + term
        return DiffForm(self.ctx, degree, coeffs)

    def d(self):
        """Exterior differential."""
        coeffs = {}
        for subset, value in self.coeffs.items():
            for i in range(self.ctx.r):
                dv = value.diff(i)
                if dv.is_zero():
                    continue
                merged, sign = _merge_sign((i,), subset)
                if merged is None:
                    continue
                term = dv if sign == 1 else -dv
                coeffs[merged] = coeffs.get(merged, self.ctx.zero) + term
        return DiffForm(self.ctx, self.degree + 1, coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for subset in sorted(self.coeffs):
            basis = "^".join("d%s" % self.ctx.names[i] for i in subset)
            coef = "(%s)" % self.coeffs[subset]
            parts.append(coef + ("*" + basis if basis else ""))
        return " + ".join(parts)

    def to_json(self):
        return [[list(s), v.to_json()] for s, v in sorted(self.coeffs.items())]

    @classmethod
    def from_json(cls, ctx, degree, data):
        coeffs = {tuple(s): FieldElem.from_json(ctx, v) for s, v in data}
        return cls(ctx, degree, coeffs)


def wedge(a: DiffForm, b: DiffForm) -> DiffForm:
    return a.wedge(b)


def d(a: DiffForm) -> DiffForm:
    return a.d()


def dlog(u: FieldElem) -> DiffForm:
    """du/u as a 1-form; rejects u = 0.  dlog(c) = 0 for rational c."""
    if u.is_zero():
        raise ZeroArgument("dlog(0)")
    ctx = u.ctx
    coeffs = {}
    for i in range(ctx.r):
        du = u.diff(i)
        if not du.is_zero():
            coeffs[(i,)] = du / u
    return DiffForm(ctx, 1, coeffs)


def dlog_wedge(values) -> DiffForm:
    """dlog(v1) ^ ... ^ dlog(vk); the empty product is the 0-form 1."""
    values = list(values)
    if not values:
        raise ValueError("need a context to build the empty dlog product")
    total = DiffForm.scalar(values[0].ctx.one)
    for v in values:
        total = total.wedge(dlog(v))
    return total


class FormOnTrunc:
    """A k-form over F_m in the split t-power representation. Immutable."""

    __slots__ = ("ctx", "degree", "level", "base", "poly", "dt")

    def __init__(self, ctx, degree, level, base=None, poly=None, dt=None):
        if level < 1:
            raise ValueError("level must be >= 1")
        self.ctx = ctx
        self.degree = degree
        self.level = level
        zero_k = DiffForm.zero(ctx, degree)
        zero_k1 = DiffForm.zero(ctx, degree - 1)
        self.base = base if base is not None else zero_k
        self.poly = tuple(poly) if poly is not None else (zero_k,) * level
        self.dt = tuple(dt) if dt is not None else (zero_k1,) * level
        if len(self.poly) != level or len(self.dt) != level:
            raise ValueError("component count must equal the level")
        for w in (self.base,) + self.poly:
            if w.degree != degree:
                raise ValueError("degree mismatch in t-power parts")
        for w in self.dt:
            if w.degree != degree - 1:
                raise ValueError("degree mismatch in dt parts")

    @classmethod
    def zero(cls, ctx, degree, level):
        return cls(ctx, degree, level)

    @classmethod
    def from_base(cls, base: DiffForm, level):
        return cls(base.ctx, base.degree, level, base=base)

    def is_zero(self):
        return (self.base.is_zero() and all(w.is_zero() for w in self.poly)
                and all(w.is_zero() for w in self.dt))

    def is_relative(self):
        return self.base.is_zero()

    def __eq__(self, other):
        return (isinstance(other, FormOnTrunc) and self.ctx == other.ctx
                and self.degree == other.degree and self.level == other.level
                and self.base == other.base and self.poly == other.poly
                and self.dt == other.dt)

    def __add__(self, other):
        self._check(other)
        return FormOnTrunc(self.ctx, self.degree, self.level,
                           self.base + other.base,
                           [a + b for a, b in zip(self.poly, other.poly)],
                           [a + b for a, b in zip(self.dt, other.dt)])

    def __neg__(self):
        return FormOnTrunc(self.ctx, self.degree, self.level, -self.base,
                           [-w for w in self.poly], [-w for w in self.dt])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return FormOnTrunc(self.ctx, self.degree, self.level, self.base.scale(c),
                           [w.scale(c) for w in self.poly],
                           [w.scale(c) for w in self.dt])

    def _check(self, other):
        self.ctx.check(other.ctx)
        if self.level != other.level:
            raise ValueError("level mismatch %d vs %d" % (self.level, other.level))
        if self.degree != other.degree:
            raise ValueError("degree mismatch")

    def _tpart(self, i):
        """Coefficient of t^i (x) -, i = 0..m."""
        return self.base if i == 0 else self.poly[i - 1]

    def wedge(self, other):
        self.ctx.check(other.ctx)
        if self.level != other.level:
            raise ValueError("level mismatch")
        m = self.level
        p, q = self.degree, other.degree
        degree = p + q
        zero_k = DiffForm.zero(self.ctx, degree)
        zero_k1 = DiffForm.zero(self.ctx, degree - 1)
        tparts = [zero_k for _ in range(m + 1)]
        dtparts = [zero_k1 for _ in range(m)]
        for i in range(m + 1):
            a = self._tpart(i)
            if a.is_zero():
                continue
            for j in range(m + 1 - i):
                b = other._tpart(j)
                if not b.is_zero():
                    tparts[i + j] = tparts[i + j] + a.wedge(b)
            # t^i (x) a  ^  t^j dt ^ eta  =  (-1)^p t^(i+j) dt ^ (a ^ eta)
            for j in range(m - i):
                eta = other.dt[j]
                if not eta.is_zero():
                    term = a.wedge(eta)
                    if p % 2:
                        term = -term
                    dtparts[i + j] = dtparts[i + j] + term
        for i in range(m):
            eta = self.dt[i]
            if eta.is_zero():
                continue
            for j in range(m - i):
                b = other._tpart(j)
                if not b.is_zero():
                    dtparts[i + j] = dtparts[i + j] + eta.wedge(b)
        return FormOnTrunc(self.ctx, degree, m, tparts[0], tparts[1:], dtparts)

    def d(self):
        """Differential with d(t^i) = i t^(i-1) dt and t^m dt = 0."""
        m = self.level
        base = self.base.d()
        poly = [w.d() for w in self.poly]
        dt = []
        for i in range(m):
            term = -self.dt[i].d()
            if i + 1 <= m:
                term = term + self.poly[i].scale(i + 1)
            dt.append(term)
        return FormOnTrunc(self.ctx, self.degree + 1, m, base, poly, dt)

    def restrict(self, level):
        if level > self.level:
            raise ValueError("cannot restrict upward")
        return FormOnTrunc(self.ctx, self.degree, level, self.base,
                           self.poly[:level], self.dt[:level])

    def __repr__(self):
        parts = []
        if not self.base.is_zero():
            parts.append("[%s]" % self.base)
        for i, w in enumerate(self.poly, start=1):
            if not w.is_zero():
                parts.append("t^%d(x)[%s]" % (i, w))
        for i, w in enumerate(self.dt):
            if not w.is_zero():
                parts.append("t^%d dt^[%s]" % (i, w))
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        return {"degree": self.degree, "level": self.level,
                "base": self.base.to_json(),
                "poly": [w.to_json() for w in self.poly],
                "dt": [w.to_json() for w in self.dt]}

    @classmethod
    def from_json(cls, ctx, data):
        n, m = data["degree"], data["level"]
        return cls(ctx, n, m,
                   DiffForm.from_json(ctx, n, data["base"]),
                   [DiffForm.from_json(ctx, n, w) for w in data["poly"]],
                   [DiffForm.from_json(ctx, n - 1, w) for w in data["dt"]])


def trunc_wedge(a: FormOnTrunc, b: FormOnTrunc) -> FormOnTrunc:
    return a.wedge(b)


def trunc_d(a: FormOnTrunc) -> FormOnTrunc:
    return a.d()


class CanonRelForm:
    """Canonical representative (c_1..c_m) of a relative class in
    t F_m (x) Omega^n_F. Immutable."""

    __slots__ = ("ctx", "degree", "level", "comps")

    def __init__(self, ctx, degree, level, comps):
        self.ctx = ctx
        self.degree = degree
        self.level = level
        self.comps = tuple(comps)
        if len(self.comps) != level:
            raise ValueError("need exactly %d components" % level)
        for w in self.comps:
            if w.degree != degree:
                raise ValueError("component degree mismatch")

    @classmethod
    def zero(cls, ctx, degree, level):
        return cls(ctx, degree, level, (DiffForm.zero(ctx, degree),) * level)

    def is_zero(self):
        return all(w.is_zero() for w in self.comps)

    def __eq__(self, other):
        return (isinstance(other, CanonRelForm) and self.ctx == other.ctx
                and self.degree == other.degree and self.level == other.level
                and self.comps == other.comps)

    def __add__(self, other):
        self.ctx.check(other.ctx)
        if (self.degree, self.level) != (other.degree, other.level):
            raise ValueError("shape mismatch")
        return CanonRelForm(self.ctx, self.degree, self.level,
                            [a + b for a, b in zip(self.comps, other.comps)])

    def __neg__(self):
        return CanonRelForm(self.ctx, self.degree, self.level,
                            [-w for w in self.comps])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return CanonRelForm(self.ctx, self.degree, self.level,
                            [w.scale(c) for w in self.comps])

    def embed(self) -> FormOnTrunc:
        """The representative sum_i t^i (x) c_i as a relative form on F_m."""
        return FormOnTrunc(self.ctx, self.degree, self.level, poly=self.comps)

    def restrict(self, level):
        if level > self.level:
            raise ValueError("cannot restrict upward")
        return CanonRelForm(self.ctx, self.degree, level, self.comps[:level])

    def __repr__(self):
        return "(" + ", ".join(str(w) for w in self.comps) + ")"

    def to_json(self):
        return {"degree": self.degree, "level": self.level,
                "comps": [w.to_json() for w in self.comps]}

    @classmethod
    def from_json(cls, ctx, data):
        return cls(ctx, data["degree"], data["level"],
                   [DiffForm.from_json(ctx, data["degree"], w) for w in data["comps"]])


def reduce_mod_exact(alpha: FormOnTrunc) -> CanonRelForm:
    """Project a relative form onto its canonical representative in
    t F_m (x) Omega^n, killing exactly the exact forms d(Omega~^(n-1)):

        c_i = omega_i - (1/i) d(eta_(i-1)),   i = 1..m.

    Division by i is valid because every coefficient space is a Q-vector
    space (characteristic zero only)."""
    if not alpha.is_relative():
        raise NotRelative("form has a nonzero t^0 part")
    comps = []
    for i in range(1, alpha.level + 1):
        comps.append(alpha.poly[i - 1] - alpha.dt[i - 1].d().scale(Fraction(1, i)))
    return CanonRelForm(alpha.ctx, alpha.degree, alpha.level, comps)
