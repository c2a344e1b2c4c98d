"""Big Witt vectors W_m(F) in characteristic zero.

Coordinates (a_1..a_m) with the ghost map g_j = sum_(d|j) d * a_d^(j/d),
which is a ring isomorphism onto componentwise tuples over Q.  The group
isomorphism gamma onto principal units of F_m uses the minus sign,
gamma(a) = prod_i (1 - a_i t^i).  Ring operations go through ghost
coordinates; unghost is the triangular solve a_j = (g_j - lower terms)/j,
valid only over Q.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BadConstantTerm
from .scalars import Context, FieldElem
from .trunc import TruncElem


def _divisors(j):
    return [d for d in range(1, j + 1) if j % d == 0]


class WittVector:
    """An element of W_m(F) as coordinates (a_1..a_m). Immutable."""

    __slots__ = ("ctx", "level", "coords")

    def __init__(self, ctx, level, coords):
        if level < 1:
            raise ValueError("level must be >= 1")
        coords = tuple(coords)
        if len(coords) != level:
            raise ValueError("need exactly %d coordinates" % level)
        self.ctx = ctx
        self.level = level
        self.coords = coords

    @classmethod
    def zero(cls, ctx, level):
        return cls(ctx, level, (ctx.zero,) * level)

    def is_zero(self):
        return all(a.is_zero() for a in self.coords)

    def __eq__(self, other):
        return (isinstance(other, WittVector) and self.ctx == other.ctx
                and self.level == other.level and self.coords == other.coords)

    def __hash__(self):
        return hash((self.ctx, self.level, self.coords))

    def _check(self, other):
        self.ctx.check(other.ctx)
        if self.level != other.level:
            raise ValueError("level mismatch %d vs %d" % (self.level, other.level))

    def __add__(self, other):
        self._check(other)
        g = ghost(self)
        h = ghost(other)
        return unghost(GhostTuple(self.ctx, self.level,
                                  [a + b for a, b in zip(g.comps, h.comps)]))

    def __neg__(self):
        g = ghost(self)
        return unghost(GhostTuple(self.ctx, self.level, [-a for a in g.comps]))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        g = ghost(self)
        h = ghost(other)
        return unghost(GhostTuple(self.ctx, self.level,
                                  [a * b for a, b in zip(g.comps, h.comps)]))

    def __repr__(self):
        return "W(" + ", ".join(str(a) for a in self.coords) + ")"

    def to_json(self):
        return {"level": self.level, "coords": [a.to_json() for a in self.coords]}

    @classmethod
    def from_json(cls, ctx, data):
        return cls(ctx, data["level"],
                   [FieldElem.from_json(ctx, a) for a in data["coords"]])


class GhostTuple:
    """Ghost coordinates (g_1..g_m); componentwise ring structure. Immutable."""

    __slots__ = ("ctx", "level", "comps")

    def __init__(self, ctx, level, comps):
        comps = tuple(comps)
        if len(comps) != level:
            raise ValueError("need exactly %d components" % level)
        self.ctx = ctx
        self.level = level
        self.comps = comps

    def __eq__(self, other):
        return (isinstance(other, GhostTuple) and self.ctx == other.ctx
                and self.level == other.level and self.comps == other.comps)

    def __repr__(self):
        return "G(" + ", ".join(str(a) for a in self.comps) + ")"


def ghost(a: WittVector) -> GhostTuple:
    """g_j = sum over divisors d of j of d * a_d^(j/d)."""
    comps = []
    for j in range(1, a.level + 1):
        g = a.ctx.zero
        for d in _divisors(j):
            g = g + d * a.coords[d - 1] ** (j // d)
        comps.append(g)
    return GhostTuple(a.ctx, a.level, comps)


def unghost(g: GhostTuple) -> WittVector:
    """Invert the ghost map by forward substitution; divides by j, so this
    is a characteristic-zero-only path."""
    coords = []
    for j in range(1, g.level + 1):
        acc = g.comps[j - 1]
        for d in _divisors(j):
            if d < j:
                acc = acc - d * coords[d - 1] ** (j // d)
        coords.append(acc * Fraction(1, j))
    return WittVector(g.ctx, g.level, coords)


def witt_add(a: WittVector, b: WittVector) -> WittVector:
    return a + b


def witt_mul(a: WittVector, b: WittVector) -> WittVector:
    return a * b


def gamma(a: WittVector) -> TruncElem:
    """The principal unit prod_i (1 - a_i t^i) mod t^(m+1)."""
    m = a.level
    result = TruncElem.one(a.ctx, m)
    for i, ai in enumerate(a.coords, start=1):
        if ai.is_zero():
            continue
        factor = [a.ctx.one] + [a.ctx.zero] * m
        factor[i] = -ai
        result = result * TruncElem(a.ctx, m, factor)
    return result


def gamma_inv(u: TruncElem) -> WittVector:
    """Inverse of gamma: peel off the factors (1 - a_i t^i) degree by
    degree, reading a_i from the lowest remaining t-coefficient."""
    if not u.is_principal():
        raise BadConstantTerm("gamma_inv needs constant term 1")
    m = u.level
    coords = []
    v = u
    for i in range(1, m + 1):
        ai = -v.coeffs[i]
        coords.append(ai)
        if not ai.is_zero():
            factor = [u.ctx.one] + [u.ctx.zero] * m
            factor[i] = -ai
            v = v * TruncElem(u.ctx, m, factor).inv()
    return WittVector(u.ctx, m, coords)


def teichmuller(a: FieldElem, level: int) -> WittVector:
    return WittVector(a.ctx, level, (a,) + (a.ctx.zero,) * (level - 1))


def verschiebung(s: int, a: WittVector, level: int) -> WittVector:
    """V_s composed with restriction to the given level; on coordinates,
    V_s(a)_(s*i) = a_i."""
    if s < 1:
        raise ValueError("s must be >= 1")
    if a.level < level // s:
        raise ValueError("input level %d too small for V_%d at level %d"
                         % (a.level, s, level))
    coords = [a.ctx.zero] * level
    for i in range(1, level // s + 1):
        coords[s * i - 1] = a.coords[i - 1]
    return WittVector(a.ctx, level, coords)


def frobenius(s: int, a: WittVector) -> WittVector:
    """F_s: on ghost components, (F_s a)_j = g_(s*j)."""
    if s < 1:
        raise ValueError("s must be >= 1")
    level = a.level // s
    if level < 1:
        raise ValueError("F_%d empties a level-%d vector" % (s, a.level))
    g = ghost(a)
    return unghost(GhostTuple(a.ctx, level, [g.comps[s * j - 1] for j in range(1, level + 1)]))


def restrict(a: WittVector, level: int) -> WittVector:
    if level > a.level:
        raise ValueError("cannot restrict upward")
    return WittVector(a.ctx, level, a.coords[:level])


def witt_decompose(a: WittVector):
    """The unique presentation a = sum_i V_i([a_i]) as (i, a_i) pairs with
    a_i nonzero; the coordinates are exactly this presentation."""
    return [(i, ai) for i, ai in enumerate(a.coords, start=1) if not ai.is_zero()]
