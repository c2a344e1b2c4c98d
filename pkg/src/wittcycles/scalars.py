"""Exact base-field arithmetic: Q and the rational function field F = Q(x1..xr).

A :class:`Context` fixes the ordered variable list for one computation.
Field elements are stored as cancelled fractions of sparse multivariate
polynomials with arbitrary-precision rational coefficients (backed by
sympy's sparse polynomial rings); the denominator is normalized to have
leading coefficient 1 under graded-lexicographic term order, so equality
is a representation comparison.
"""

from __future__ import annotations

from fractions import Fraction

from sympy import QQ, grlex
from sympy.polys.fields import field as _sympy_field

from .errors import ContextMismatch, DivisionByZero, ParseError


class Context:
    """An ordered list of variable names; owns the rational function field."""

    __slots__ = ("names", "field", "_gens")

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ParseError("duplicate variable names: %r" % (names,))
        self.names = names
        if names:
            built = _sympy_field(",".join(names), QQ, grlex)
            self.field = built[0]
            self._gens = tuple(built[1:])
        else:
            built = _sympy_field("_dummy", QQ, grlex)
            self.field = built[0]
            self._gens = ()

    @property
    def r(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, Context) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return "Context(%s)" % ", ".join(self.names)

    # -- constructors -------------------------------------------------

    @property
    def zero(self):
        return FieldElem(self, self.field.zero)

    @property
    def one(self):
        return FieldElem(self, self.field.one)

    def var(self, i):
        """The i-th variable (0-based) as a field element."""
        return FieldElem(self, self._gens[i])

    def gens(self):
        return [self.var(i) for i in range(self.r)]

    def rational(self, p, q=1):
        fr = Fraction(p, q)
        return FieldElem(self, self.field.ground_new(QQ(fr.numerator, fr.denominator)))

    def elem(self, value):
        """Coerce an int, Fraction, string or FieldElem into this context."""
        if isinstance(value, FieldElem):
            if value.ctx != self:
                raise ContextMismatch("element of %r used in %r" % (value.ctx, self))
            return value
        if isinstance(value, (int, Fraction)):
            return self.rational(value)
        if isinstance(value, str):
            return parse_elem(self, value)
        raise ParseError("cannot coerce %r" % (value,))

    def check(self, other):
        if self != other:
            raise ContextMismatch("mixed contexts %r and %r" % (self, other))


class FieldElem:
    """An element of Q(x1..xr) in canonical cancelled form. Immutable."""

    __slots__ = ("ctx", "frac")

    def __init__(self, ctx, frac):
        self.ctx = ctx
        self.frac = frac

    # -- ring/field operations ----------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            self.ctx.check(other.ctx)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElem(self.ctx, self.frac + other.frac)

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.ctx, -self.frac)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElem(self.ctx, self.frac - other.frac)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElem(self.ctx, self.frac * other.frac)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.frac:
            raise DivisionByZero("division by zero field element")
        return FieldElem(self.ctx, self.frac / other.frac)

    def __rtruediv__(self, other):
        return self.ctx.elem(other) / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0 and not self.frac:
            raise DivisionByZero("0 cannot be raised to a negative power")
        return FieldElem(self.ctx, self.frac ** n)

    def inv(self):
        if not self.frac:
            raise DivisionByZero("inverse of zero")
        return FieldElem(self.ctx, 1 / self.frac)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.rational(other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.ctx == other.ctx and self.frac == other.frac

    def __hash__(self):
        return hash((self.ctx, self.frac))

    def __bool__(self):
        return bool(self.frac)

    def is_zero(self):
        return not self.frac

    def is_rational(self):
        """True iff the element lies in the prime field Q."""
        return self.frac.numer.is_ground and self.frac.denom.is_ground

    def as_fraction(self):
        """The value as a Fraction; only valid when is_rational()."""
        if not self.is_rational():
            raise ValueError("%s is not a rational constant" % self)
        num = self.frac.numer.coeff(1) if self.frac.numer else QQ(0)
        den = self.frac.denom.coeff(1)
        q = QQ(num) / QQ(den)
        return Fraction(int(q.numerator), int(q.denominator))

    def diff(self, i):
        """Partial derivative with respect to the i-th variable (0-based)."""
        if not 0 <= i < self.ctx.r:
            raise IndexError("variable index %d out of range" % i)
        return FieldElem(self.ctx, self.frac.diff(self.ctx._gens[i]))

    def __repr__(self):
        return str(self.frac)

    # -- serialization -------------------------------------------------

    def to_json(self):
        return {"num": _poly_to_json(self.frac.numer),
                "den": _poly_to_json(self.frac.denom)}

    @classmethod
    def from_json(cls, ctx, data):
        num = _poly_from_json(ctx, data["num"])
        den = _poly_from_json(ctx, data["den"])
        return num / den


def _poly_to_json(poly):
    out = []
    for mon, coef in sorted(poly.terms()):
        out.append([list(mon), "%s/%s" % (coef.numerator, coef.denominator)])
    return out


def _poly_from_json(ctx, data):
    total = ctx.zero
    for mon, coef in data:
        p, q = (coef.split("/") + ["1"])[:2]
        term = ctx.rational(int(p), int(q))
        for i, e in enumerate(mon):
            if e:
                term = term * ctx.var(i) ** e
        total = total + term
    return total


def partial_derivative(a: FieldElem, i: int) -> FieldElem:
    """d(a)/d(x_i), 0-based index; exact quotient rule."""
    return a.diff(i)


def split_unit(a: FieldElem):
    """Write a = u1 + u2 with u1 a nonzero rational and u2 a nonzero
    field element, scanning u1 = 1, -1, 2, -2, ... (at most two steps
    succeed over a field with more than two elements)."""
    k = 1
    while True:
        for u1 in (k, -k):
            u2 = a - u1
            if not u2.is_zero():
                return Fraction(u1), u2
        k += 1


# -- text syntax ------------------------------------------------------
#
#   elem   := term (('+'|'-') term)*
#   term   := factor (('*'|'/') factor)*
#   factor := ('-'|'+')* base ('^' exponent)?
#   base   := integer | variable | '(' elem ')'

_OPS = set("+-*/^(),")


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c in _OPS:
            tokens.append(c)
            i += 1
        elif c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(int(text[i:j]))
            i = j
        elif c.isalpha() or c == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(text[i:j])
            i = j
        else:
            raise ParseError("unexpected character %r in %r" % (c, text))
    return tokens


class _Parser:
    def __init__(self, ctx, tokens, text):
        self.ctx = ctx
        self.tokens = tokens
        self.pos = 0
        self.text = text

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, tok):
        if self.next() != tok:
            raise ParseError("expected %r in %r" % (tok, self.text))

    def parse(self):
        value = self.elem()
        if self.peek() is not None:
            raise ParseError("trailing input in %r" % self.text)
        return value

    def elem(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.next()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while True:
            nxt = self.peek()
            if nxt in ("*", "/"):
                op = self.next()
                value = value * self.factor() if op == "*" else value / self.factor()
            elif isinstance(nxt, int) or nxt == "(" \
                    or (isinstance(nxt, str) and nxt not in _OPS):
                # juxtaposition: 3t, 2(x+1), x y
                value = value * self.factor()
            else:
                return value

    def factor(self):
        sign = 1
        while self.peek() in ("+", "-"):
            if self.next() == "-":
                sign = -sign
        value = self.base()
        if self.peek() == "^":
            self.next()
            value = value ** self.exponent()
        return value if sign == 1 else -value

    def exponent(self):
        sign = 1
        while self.peek() in ("+", "-"):
            if self.next() == "-":
                sign = -sign
        tok = self.next()
        if not isinstance(tok, int):
            raise ParseError("exponent must be an integer in %r" % self.text)
        return sign * tok

    def base(self):
        tok = self.next()
        if isinstance(tok, int):
            return self.ctx.rational(tok)
        if tok == "(":
            value = self.elem()
            self.expect(")")
            return value
        if isinstance(tok, str) and tok in self.ctx.names:
            return self.ctx.var(self.ctx.names.index(tok))
        raise ParseError("unknown token %r in %r" % (tok, self.text))


def parse_elem(ctx: Context, text: str) -> FieldElem:
    """Parse the element grammar: integers, p/q, variables, + - * / ^, parens."""
    return _Parser(ctx, _tokenize(text), text).parse()
