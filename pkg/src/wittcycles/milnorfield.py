"""Milnor K-theory symbol calculus over F and over F(u).

Symbols are opaque presentations: equality in the K-group is never
decided here.  Instead the module provides realization oracles (the dlog
form, tame symbols at rational valuations), the boundary of the Gersten
complex in one variable, Weil reciprocity checking, and the two rewriting
procedures for symbols near a discrete valuation: the two-entry identity

    {1+as, 1+bt} = -{1 + ab/(1+as) st, -as(1+bt)}   (or 0 when
    1 + (1+bt)as = 0)

and the filtration rewriting that moves any symbol with
sum ord(y_i - 1) >= m into (1 + pi^m R) K^M_n(F).

A designated variable of the context plays the role of u (or of the
uniformizer pi); valuations are the finite rational points u = c, the
point at infinity, and the pi-adic one (the finite point c = 0).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (DegenerateBranch, HypothesisViolated, NonRationalPoint,
                     NoUnitEntry, ZeroEntry)
from .forms import DiffForm, dlog
from .scalars import Context, FieldElem


# -- contexts with a designated variable -------------------------------

def base_context(ctx: Context, upos: int) -> Context:
    """The context with the designated variable removed."""
    return Context(ctx.names[:upos] + ctx.names[upos + 1:])


def _from_terms(ctx, terms):
    """Sum of (monomial, rational-coefficient) terms as a field element."""
    total = ctx.zero
    for mon, coef in terms:
        term = ctx.rational(Fraction(int(coef.numerator), int(coef.denominator)))
        for i, e in enumerate(mon):
            if e:
                term = term * ctx.var(i) ** e
        total = total + term
    return total


def lift_elem(ctx: Context, a: FieldElem, upos: int) -> FieldElem:
    """A base-field element viewed in the extended context."""
    def up(terms):
        return [(mon[:upos] + (0,) + mon[upos:], coef) for mon, coef in terms]
    num = _from_terms(ctx, up(a.frac.numer.terms()))
    den = _from_terms(ctx, up(a.frac.denom.terms()))
    return num / den


class UPoly:
    """A polynomial in the designated variable with coefficients in the
    base field, used for exact valuation arithmetic."""

    __slots__ = ("base", "coeffs")

    def __init__(self, base, coeffs):
        self.base = base
        self.coeffs = {e: c for e, c in coeffs.items() if not c.is_zero()}

    @classmethod
    def from_poly(cls, base, poly, upos):
        buckets = {}
        for mon, coef in poly.terms():
            e = mon[upos]
            bmon = mon[:upos] + mon[upos + 1:]
            buckets.setdefault(e, []).append((bmon, coef))
        return cls(base, {e: _from_terms(base, ts) for e, ts in buckets.items()})

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return max(self.coeffs) if self.coeffs else -1

    def low_degree(self):
        return min(self.coeffs) if self.coeffs else -1

    def eval(self, c: FieldElem) -> FieldElem:
        total = self.base.zero
        for e in range(self.degree(), -1, -1):
            total = total * c + self.coeffs.get(e, self.base.zero)
        return total

    def div_linear(self, c: FieldElem):
        """Quotient and remainder on synthetic division by (u - c)."""
        d = self.degree()
        if d < 0:
            return UPoly(self.base, {}), self.base.zero
        q = {}
        acc = self.coeffs.get(d, self.base.zero)
        for e in range(d, 0, -1):
            q[e - 1] = acc
            acc = acc * c + self.coeffs.get(e - 1, self.base.zero)
        return UPoly(self.base, q), acc

    def root_multiplicity(self, c: FieldElem):
        """(k, stripped) with self = (u-c)^k * stripped, stripped(c) != 0."""
        k = 0
        cur = self
        while not cur.is_zero():
            q, rem = cur.div_linear(c)
            if not rem.is_zero():
                break
            k += 1
            cur = q
        return k, cur

    def reversed(self):
        """Coefficient reversal by the exact degree: v^deg * self(1/v)."""
        d = self.degree()
        return UPoly(self.base, {d - e: c for e, c in self.coeffs.items()})


# -- symbols and valuations ---------------------------------------------

class FieldSymbol:
    """A scaled Milnor symbol {y_1..y_n} of nonzero field elements; the
    empty symbol (n = 0) stands for its coefficient in Z or Q. Immutable."""

    __slots__ = ("ctx", "entries", "coef")

    def __init__(self, ctx, entries, coef=1):
        entries = tuple(entries)
        for y in entries:
            ctx.check(y.ctx)
            if y.is_zero():
                raise ZeroEntry("symbol entry is zero")
        self.ctx = ctx
        self.entries = entries
        self.coef = Fraction(coef)

    @property
    def degree(self):
        return len(self.entries)

    def scale(self, c):
        return FieldSymbol(self.ctx, self.entries, self.coef * Fraction(c))

    def __repr__(self):
        return "%s*{%s}" % (self.coef, ", ".join(str(y) for y in self.entries))

    def to_json(self):
        return {"coef": "%s/%s" % (self.coef.numerator, self.coef.denominator),
                "entries": [y.to_json() for y in self.entries]}

    @classmethod
    def from_json(cls, ctx, data):
        p, q = data["coef"].split("/")
        return cls(ctx, [FieldElem.from_json(ctx, y) for y in data["entries"]],
                   Fraction(int(p), int(q)))


def collect_terms(terms):
    """Merge symbols with identical entry tuples and drop zero terms.
    Presentation-level bookkeeping only, not K-group equality."""
    order = []
    acc = {}
    ctx = None
    for sym in terms:
        ctx = sym.ctx
        if sym.entries not in acc:
            order.append(sym.entries)
            acc[sym.entries] = Fraction(0)
        acc[sym.entries] += sym.coef
    return [FieldSymbol(ctx, e, acc[e]) for e in order if acc[e] != 0]


class Valuation:
    """A rational discrete valuation of F(u) over F: the finite point
    u = c (with c = 0 doubling as the pi-adic valuation of the local ring
    at the designated variable) or the point at infinity."""

    __slots__ = ("ctx", "upos", "kind", "point", "base")

    def __init__(self, ctx, upos, kind, point=None):
        if kind not in ("finite", "infinity"):
            raise ValueError("unknown valuation kind %r" % kind)
        self.ctx = ctx
        self.upos = upos
        self.kind = kind
        self.base = base_context(ctx, upos)
        if kind == "finite":
            point = self.base.elem(point)
            if not point.ctx == self.base:
                raise NonRationalPoint("point must lie in the base field")
        self.point = point

    @classmethod
    def finite(cls, ctx, upos, c):
        return cls(ctx, upos, "finite", c)

    @classmethod
    def infinity(cls, ctx, upos):
        return cls(ctx, upos, "infinity")

    def key(self):
        return ("inf",) if self.kind == "infinity" else ("fin", self.point)

    def __repr__(self):
        u = self.ctx.names[self.upos]
        if self.kind == "infinity":
            return "(%s = infinity)" % u
        return "(%s = %s)" % (u, self.point)

    def ord_residue(self, f: FieldElem):
        """(ord(f), residue of the unit part f * uniformizer^(-ord))."""
        self.ctx.check(f.ctx)
        if f.is_zero():
            raise ZeroEntry("valuation of zero")
        num = UPoly.from_poly(self.base, f.frac.numer, self.upos)
        den = UPoly.from_poly(self.base, f.frac.denom, self.upos)
        if self.kind == "infinity":
            ord_ = den.degree() - num.degree()
            residue = num.reversed().eval(self.base.zero) / den.reversed().eval(self.base.zero)
            return ord_, residue
        c = self.point
        a, num = num.root_multiplicity(c)
        b, den = den.root_multiplicity(c)
        return a - b, num.eval(c) / den.eval(c)

    def ord(self, f: FieldElem) -> int:
        return self.ord_residue(f)[0]


def dlog_realization(terms) -> DiffForm:
    """The form sum coef * dlog(y_1)^..^dlog(y_n) of a symbol sum; the
    canonical sound (but not complete) equality oracle."""
    if isinstance(terms, FieldSymbol):
        terms = [terms]
    terms = list(terms)
    if not terms:
        raise ValueError("empty symbol sum has no context")
    ctx = terms[0].ctx
    n = terms[0].degree
    total = DiffForm.zero(ctx, n)
    for sym in terms:
        if sym.degree != n:
            raise ValueError("mixed degrees in one symbol sum")
        w = DiffForm.scalar(ctx.rational(sym.coef))
        for y in sym.entries:
            w = w.wedge(dlog(y))
        total = total + w
    return total


def tame_symbol(v: Valuation, sym: FieldSymbol):
    """Gersten boundary of one symbol at a rational valuation, as a formal
    sum of symbols over the residue field F.

    Each entry is split as pi^a * w; the symbol is expanded multilinearly,
    repeated uniformizers are removed with {pi, pi} = {pi, -1}, and a
    single leading pi is contracted, leaving the residues of the units."""
    data = [v.ord_residue(y) for y in sym.entries]
    hot = [i for i, (a, _) in enumerate(data) if a != 0]
    out = []
    for mask in range(1, 1 << len(hot)):
        S = [hot[k] for k in range(len(hot)) if mask >> k & 1]
        mult = 1
        for i in S:
            mult *= data[i][0]
        items = []
        for i in range(len(data)):
            items.append(None if i in S else data[i][1])  # None marks pi
        sign = 1
        while True:
            pis = [p for p, it in enumerate(items) if it is None]
            if len(pis) < 2:
                break
            i, j = pis[0], pis[1]
            items.pop(j)
            items.insert(i + 1, v.base.rational(-1))
            sign *= (-1) ** (j - i - 1)
        p = items.index(None)
        sign *= (-1) ** p
        items.pop(p)
        out.append(FieldSymbol(v.base, items, sym.coef * mult * sign))
    return out


def _rational_support(syms, upos):
    """All rational points of the u-line where some entry has a zero or a
    pole, whether to include infinity, and the non-rational factors."""
    ctx = syms[0].ctx
    base = base_context(ctx, upos)
    points = {}
    nonrational = []
    include_inf = False
    for sym in syms:
        for y in sym.entries:
            num = UPoly.from_poly(base, y.frac.numer, upos)
            den = UPoly.from_poly(base, y.frac.denom, upos)
            if num.degree() != den.degree():
                include_inf = True
            for poly in (y.frac.numer, y.frac.denom):
                _, factors = poly.factor_list()
                for fac, _mult in factors:
                    fu = UPoly.from_poly(base, fac, upos)
                    d = fu.degree()
                    if d == 0:
                        continue
                    if d == 1:
                        c = -fu.coeffs.get(0, base.zero) / fu.coeffs[1]
                        points.setdefault(("fin", c), c)
                    else:
                        nonrational.append(str(fac))
    return list(points.values()), include_inf, nonrational


def gersten_boundary(terms, upos):
    """Tame symbols of a symbol sum over F(u) at every rational point of
    its support (infinity included); returns (list of (Valuation, symbol
    sum), list of non-rational factors)."""
    if isinstance(terms, FieldSymbol):
        terms = [terms]
    terms = list(terms)
    ctx = terms[0].ctx
    points, include_inf, nonrational = _rational_support(terms, upos)
    out = []
    for c in points:
        v = Valuation.finite(ctx, upos, c)
        parts = []
        for sym in terms:
            parts.extend(tame_symbol(v, sym))
        if parts:
            out.append((v, parts))
    # with non-rational support the point enumeration is incomplete, so
    # only the sound finite rational points are returned and infinity is
    # left out; individual values remain available via tame_symbol
    if include_inf and not nonrational:
        v = Valuation.infinity(ctx, upos)
        parts = []
        for sym in terms:
            parts.extend(tame_symbol(v, sym))
        if parts:
            out.append((v, parts))
    return out, nonrational


def _zero_by_realizations(terms, depth):
    """Necessary-condition test that a symbol sum over F vanishes: zero
    dlog form, and zero boundary recursively in every variable.  Returns
    (consistent, evidence)."""
    terms = list(terms)
    evidence = {}
    if not terms:
        return True, evidence
    ctx = terms[0].ctx
    n = terms[0].degree
    if n == 0:
        total = sum((s.coef for s in terms), Fraction(0))
        return total == 0, {"coefficient_sum": str(total)}
    form = dlog_realization(terms)
    evidence["dlog_zero"] = form.is_zero()
    ok = form.is_zero()
    if depth > 0:
        for i in range(ctx.r):
            bnd, nonrational = gersten_boundary(terms, i)
            if nonrational:
                evidence["var_%s" % ctx.names[i]] = "skipped: non-rational support"
                continue
            sub_ok = True
            for v, parts in bnd:
                good, _ = _zero_by_realizations(parts, depth - 1)
                sub_ok = sub_ok and good
            evidence["var_%s" % ctx.names[i]] = sub_ok
            ok = ok and sub_ok
    return ok, evidence


def weil_reciprocity_check(terms, upos):
    """Sum the Gersten boundary of a symbol sum over F(u) across all
    rational points including infinity and verify the total vanishes
    under the realization oracles.  Requires fully rational support."""
    from .errors import NonRationalSupport
    if isinstance(terms, FieldSymbol):
        terms = [terms]
    terms = list(terms)
    bnd, nonrational = gersten_boundary(terms, upos)
    if nonrational:
        raise NonRationalSupport("support outside rational points: %s" % nonrational)
    total = []
    for _v, parts in bnd:
        total.extend(parts)
    if not total:
        return True, {"boundary": "empty"}
    ok, evidence = _zero_by_realizations(total, depth=terms[0].ctx.r)
    evidence["points"] = [str(v) for v, _ in bnd]
    return ok, evidence


def elem_identity_instance(a, b, s, tau):
    """Both sides of the two-entry identity {1+as, 1+bt} =
    -{1 + ab/(1+as) st, -as(1+bt)}; raises DegenerateBranch in the
    1 + (1+bt)as = 0 case, where the left side alone is zero."""
    ctx = a.ctx
    for val in (a, b, s, tau):
        if val.is_zero():
            raise ZeroEntry("identity inputs must be nonzero")
    one = ctx.one
    lhs1, lhs2 = one + a * s, one + b * tau
    if lhs1.is_zero() or lhs2.is_zero():
        raise ZeroEntry("1+as and 1+bt must be nonzero")
    if (one + lhs2 * a * s).is_zero():
        raise DegenerateBranch("1 + (1+bt)as = 0: left side is zero")
    rhs1 = one + (a * b / lhs1) * s * tau
    rhs2 = -(a * s * lhs2)
    if rhs1.is_zero():
        raise ZeroEntry("right-hand entry vanished")
    lhs = FieldSymbol(ctx, [lhs1, lhs2], 1)
    rhs = FieldSymbol(ctx, [rhs1, rhs2], -1)
    return lhs, rhs


def rewrite_filtration(sym: FieldSymbol, m: int, upos: int, rational_coeffs=True):
    """Rewrite a symbol with sum ord_pi(y_i - 1) >= m as a formal sum of
    pairs (w, residual symbol) with ord_pi(w - 1) >= m, following the
    two-entry identity inductively.  With rational coefficients the
    residual entries are additionally cleared of pi-powers using
    {w, pi} = -(1/e){w, -u0} where w = 1 + u0 pi^e.

    Returns a list of (w: FieldElem, residual: FieldSymbol) pairs whose
    coefficients live on the residual symbols; the represented class is
    sum coef * {w, residual entries...}."""
    ctx = sym.ctx
    pi = ctx.var(upos)
    v = Valuation.finite(ctx, upos, base_context(ctx, upos).zero)

    def lift0(c):
        return lift_elem(ctx, c, upos)

    def ord_pi(f):
        return v.ord(f)

    def recurse(entries, coef):
        entries = list(entries)
        one = ctx.one
        if any((y - one).is_zero() for y in entries):
            return []
        ms = [ord_pi(y - one) for y in entries]
        # early exit: an entry already lies in 1 + pi^m
        for i, mi in enumerate(ms):
            if mi >= m:
                rest = entries[:i] + entries[i + 1:]
                return [(entries[i], FieldSymbol(ctx, rest, coef * (-1) ** i))]
        if len(entries) == 1:
            raise HypothesisViolated("single entry below the filtration level")
        # front entry must be a unit of the local ring
        front = None
        for i, y in enumerate(entries):
            if ms[i] >= 0 and ord_pi(y) == 0:
                front = i
                break
        if front is None:
            raise NoUnitEntry("no entry is a unit of the local ring")
        if front != 0:
            coef = coef * (-1) ** front
            entries.insert(0, entries.pop(front))
            ms.insert(0, ms.pop(front))
        y1, y2 = entries[0], entries[1]
        m1, m2 = ms[0], ms[1]
        u1 = (y1 - one) * pi ** (-m1)
        u2 = (y2 - one) * pi ** (-m2)
        if (one + y2 * u1 * pi ** m1).is_zero():
            return []  # the degenerate branch: the symbol is zero
        w = one + u1 * u2 * pi ** (m1 + m2) / y1
        vres = -(u1 * y2 * pi ** m1)
        if len(entries) == 2:
            return [(w, FieldSymbol(ctx, [vres], -coef))]
        inner = recurse([w] + entries[2:], coef)
        return [(wk, FieldSymbol(ctx, (vres,) + sk.entries, -sk.coef))
                for wk, sk in inner]

    total = sum(ord_pi(y - ctx.one) for y in sym.entries if not (y - ctx.one).is_zero())
    if any((y - ctx.one).is_zero() for y in sym.entries):
        return []
    if total < m:
        raise HypothesisViolated("sum of ord(y_i - 1) = %d < %d" % (total, m))
    pairs = recurse(sym.entries, sym.coef)
    if not rational_coeffs:
        return pairs
    # clear pi-powers from residual entries: {w, pi} = -(1/e){w, -u0}
    cleaned = []
    stack = list(pairs)
    while stack:
        w, res = stack.pop()
        for p, y in enumerate(res.entries):
            j = ord_pi(y)
            if j == 0:
                continue
            e = ord_pi(w - ctx.one)
            u0 = (w - ctx.one) * pi ** (-e)
            unit = y * pi ** (-j)
            others = res.entries[:p] + res.entries[p + 1:]
            stack.append((w, FieldSymbol(ctx, res.entries[:p] + (unit,) + res.entries[p + 1:],
                                         res.coef)))
            stack.append((w, FieldSymbol(ctx, (-u0,) + others,
                                         res.coef * j * (-1) ** p * Fraction(-1, e))))
            break
        else:
            cleaned.append((w, res))
    return cleaned
