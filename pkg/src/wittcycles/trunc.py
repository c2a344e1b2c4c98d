"""The truncated polynomial ring F_m = F[t]/(t^(m+1)).

Elements are coefficient tuples (c_0..c_m); multiplication is convolution
with everything above t^m dropped.  exp_t and log_t are the finite-sum
mutually inverse homomorphisms between the nilpotent ideal (t) and the
principal units 1 + (t); they need denominators, so characteristic zero
is baked in.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BadConstantTerm, NotAUnit, ParseError
from .forms import DiffForm, FormOnTrunc
from .scalars import Context, FieldElem, _Parser, _tokenize


class TruncElem:
    """An element of F_m as the coefficient tuple (c_0..c_m). Immutable."""

    __slots__ = ("ctx", "level", "coeffs")

    def __init__(self, ctx, level, coeffs):
        if level < 1:
            raise ValueError("level must be >= 1")
        self.ctx = ctx
        self.level = level
        coeffs = tuple(coeffs)
        if len(coeffs) != level + 1:
            raise ValueError("need exactly %d coefficients" % (level + 1))
        self.coeffs = coeffs

    @classmethod
    def zero(cls, ctx, level):
        return cls(ctx, level, (ctx.zero,) * (level + 1))

    @classmethod
    def one(cls, ctx, level):
        return cls(ctx, level, (ctx.one,) + (ctx.zero,) * level)

    @classmethod
    def t(cls, ctx, level):
        return cls(ctx, level, (ctx.zero, ctx.one) + (ctx.zero,) * (level - 1))

    @classmethod
    def constant(cls, value: FieldElem, level):
        return cls(value.ctx, level, (value,) + (value.ctx.zero,) * level)

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def is_unit(self):
        return not self.coeffs[0].is_zero()

    def is_principal(self):
        """True iff the element lies in 1 + t F_m."""
        return self.coeffs[0] == self.ctx.one

    def __eq__(self, other):
        return (isinstance(other, TruncElem) and self.ctx == other.ctx
                and self.level == other.level and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.ctx, self.level, self.coeffs))

    def _coerce(self, other):
        if isinstance(other, TruncElem):
            self.ctx.check(other.ctx)
            if self.level != other.level:
                raise ValueError("level mismatch %d vs %d" % (self.level, other.level))
            return other
        if isinstance(other, (int, Fraction)):
            return TruncElem.constant(self.ctx.rational(other), self.level)
        if isinstance(other, FieldElem):
            return TruncElem.constant(self.ctx.elem(other), self.level)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return TruncElem(self.ctx, self.level,
                         [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return TruncElem(self.ctx, self.level, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = [self.ctx.zero] * (self.level + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(self.level + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncElem(self.ctx, self.level, out)

    __rmul__ = __mul__

    def inv(self):
        """Inverse of a unit, by recursive coefficient matching."""
        c0 = self.coeffs[0]
        if c0.is_zero():
            raise NotAUnit("constant term is zero")
        inv0 = c0.inv()
        out = [inv0] + [self.ctx.zero] * self.level
        # (sum a_i t^i)(sum b_j t^j) = 1 solved degree by degree
        for k in range(1, self.level + 1):
            acc = self.ctx.zero
            for i in range(1, k + 1):
                acc = acc + self.coeffs[i] * out[k - i]
            out[k] = -inv0 * acc
        return TruncElem(self.ctx, self.level, out)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inv()
        result = TruncElem.one(self.ctx, self.level)
        for _ in range(abs(n)):
            result = result * base
        return result

    def restrict(self, level):
        if level > self.level:
            raise ValueError("cannot restrict upward")
        return TruncElem(self.ctx, level, self.coeffs[: level + 1])

    def __repr__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if i == 0:
                parts.append("(%s)" % c)
            elif i == 1:
                parts.append("(%s)*t" % c)
            else:
                parts.append("(%s)*t^%d" % (c, i))
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        return {"level": self.level, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, ctx, data):
        return cls(ctx, data["level"],
                   [FieldElem.from_json(ctx, c) for c in data["coeffs"]])


def exp_t(a: TruncElem) -> TruncElem:
    """exp of a nilpotent: sum_k a^k / k! (a finite sum)."""
    if not a.coeffs[0].is_zero():
        raise BadConstantTerm("exp_t needs constant term 0")
    result = TruncElem.one(a.ctx, a.level)
    power = TruncElem.one(a.ctx, a.level)
    fact = 1
    for k in range(1, a.level + 1):
        power = power * a
        fact *= k
        result = result + power * Fraction(1, fact)
    return result


def log_t(u: TruncElem) -> TruncElem:
    """log of a principal unit: sum_k (-1)^(k+1) (u-1)^k / k."""
    if not u.is_principal():
        raise BadConstantTerm("log_t needs constant term 1")
    x = u - 1
    result = TruncElem.zero(u.ctx, u.level)
    power = TruncElem.one(u.ctx, u.level)
    for k in range(1, u.level + 1):
        power = power * x
        result = result + power * Fraction((-1) ** (k + 1), k)
    return result


def trunc_d(a: TruncElem) -> FormOnTrunc:
    """Differential of a ring element, as a 1-form over F_m:
    sum_i t^i (x) d(c_i) + sum_i (i+1) c_(i+1) t^i dt."""
    ctx, m = a.ctx, a.level
    base = DiffForm.scalar(a.coeffs[0]).d()
    poly = [DiffForm.scalar(c).d() for c in a.coeffs[1:]]
    dt = [DiffForm.scalar(a.coeffs[i + 1] * (i + 1)) for i in range(m)]
    return FormOnTrunc(ctx, 1, m, base, poly, dt)


def trunc_dlog(u: TruncElem) -> FormOnTrunc:
    """u^(-1) du as a 1-form over F_m; additive in products of units."""
    if not u.is_unit():
        raise NotAUnit("dlog of a non-unit")
    v = u.inv()
    scalar = FormOnTrunc(u.ctx, 0, u.level,
                         DiffForm.scalar(v.coeffs[0]),
                         [DiffForm.scalar(c) for c in v.coeffs[1:]],
                         [DiffForm.zero(u.ctx, -1)] * u.level)
    return scalar.wedge(trunc_d(u))


def embed_form(a: TruncElem) -> FormOnTrunc:
    """View a ring element as a degree-0 form over F_m."""
    return FormOnTrunc(a.ctx, 0, a.level,
                       DiffForm.scalar(a.coeffs[0]),
                       [DiffForm.scalar(c) for c in a.coeffs[1:]],
                       [DiffForm.zero(a.ctx, -1)] * a.level)


def parse_trunc(ctx: Context, level: int, text: str) -> TruncElem:
    """Parse `c0 + c1*t + ... + cm*t^m` with field-element coefficients.

    Parsed in the extended variable list (names, t); the denominator must
    be free of t, and t-degrees above the level are dropped."""
    if "t" in ctx.names:
        raise ParseError("variable list may not shadow t")
    inner = Context(ctx.names + ("t",))
    value = _Parser(inner, _tokenize(text), text).parse()
    tpos = inner.r - 1
    if any(mon[tpos] for mon, _ in value.frac.denom.terms()):
        raise ParseError("t may not appear in denominators: %r" % text)
    den = _strip_t(ctx, value.frac.denom.terms(), tpos)
    coeffs = [ctx.zero] * (level + 1)
    for mon, coef in value.frac.numer.terms():
        e = mon[tpos]
        if e <= level:
            coeffs[e] = coeffs[e] + _strip_t(ctx, [(mon, coef)], tpos) / den
    return TruncElem(ctx, level, coeffs)


def _strip_t(ctx, terms, tpos):
    """Sum of monomial terms over (names, t), with the t-exponent ignored,
    rebuilt over the base variable list."""
    total = ctx.zero
    for mon, coef in terms:
        term = ctx.rational(Fraction(int(coef.numerator), int(coef.denominator)))
        for i in range(tpos):
            if mon[i]:
                term = term * ctx.var(i) ** mon[i]
        total = total + term
    return total
