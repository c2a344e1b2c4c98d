"""Big Witt vectors: ghost coordinates, gamma, V/F, decomposition."""

import pytest

from wittcycles.errors import BadConstantTerm
from wittcycles.scalars import Context
from wittcycles.trunc import TruncElem
from wittcycles.witt import (GhostTuple, WittVector, frobenius, gamma,
                             gamma_inv, ghost, restrict, teichmuller, unghost,
                             verschiebung, witt_decompose)


@pytest.fixture
def ctx():
    return Context(("a", "b"))


def test_ghost_values(ctx):
    a, b = ctx.gens()
    assert ghost(WittVector(ctx, 2, [a, ctx.zero])).comps == (a, a * a)
    assert ghost(WittVector(ctx, 2, [ctx.zero, a])).comps == (ctx.zero, 2 * a)


def test_unghost_solves(ctx):
    got = unghost(GhostTuple(ctx, 2, [ctx.rational(3), ctx.rational(9)]))
    assert got == WittVector(ctx, 2, [ctx.rational(3), ctx.zero])


def test_addition_of_teichmullers(ctx):
    a, b = ctx.gens()
    got = WittVector(ctx, 2, [a, ctx.zero]) + WittVector(ctx, 2, [b, ctx.zero])
    assert got == WittVector(ctx, 2, [a + b, -(a * b)])


def test_additive_and_multiplicative_identities(ctx):
    a = WittVector(ctx, 3, [ctx.var(0), ctx.rational(2), ctx.var(1)])
    assert a + WittVector.zero(ctx, 3) == a
    assert teichmuller(ctx.one, 3) * a == a


def test_gamma_shapes(ctx):
    a = ctx.var(0)
    assert gamma(WittVector(ctx, 3, [a, ctx.zero, ctx.zero])) == TruncElem(
        ctx, 3, [ctx.one, -a, ctx.zero, ctx.zero])
    u = TruncElem(ctx, 2, [ctx.one, ctx.rational(-3), ctx.zero])
    assert gamma_inv(u) == WittVector(ctx, 2, [ctx.rational(3), ctx.zero])
    v = TruncElem(ctx, 2, [ctx.one, ctx.one, ctx.zero])
    assert gamma_inv(v) == WittVector(ctx, 2, [ctx.rational(-1), ctx.zero])
    with pytest.raises(BadConstantTerm):
        gamma_inv(TruncElem.constant(a, 2))


def test_gamma_homomorphism_instance(ctx):
    a = WittVector(ctx, 4, [ctx.var(0), ctx.one, ctx.zero, ctx.var(1)])
    b = WittVector(ctx, 4, [ctx.rational(2), ctx.var(1), ctx.one, ctx.zero])
    assert gamma(a + b) == gamma(a) * gamma(b)
    assert gamma_inv(gamma(a)) == a


def test_log_derivative_identity(ctx):
    # -t u'/u = sum g_j t^j for u = gamma(a)
    a = WittVector(ctx, 3, [ctx.var(0), ctx.var(1), ctx.rational(2)])
    u = gamma(a)
    g = ghost(a)
    minus_t_du = TruncElem(ctx, 3, [ctx.zero] + [u.coeffs[i] * (-i)
                                                 for i in range(1, 4)])
    assert minus_t_du * u.inv() == TruncElem(ctx, 3, (ctx.zero,) + g.comps)


def test_verschiebung_ghost(ctx):
    a = ctx.var(0)
    v = verschiebung(2, WittVector(ctx, 1, [a]), 2)
    assert ghost(v).comps == (ctx.zero, 2 * a)
    assert gamma(v) == TruncElem(ctx, 2, [ctx.one, ctx.zero, -a])


def test_frobenius_verschiebung_is_multiplication_by_s(ctx):
    a = WittVector(ctx, 2, [ctx.var(0), ctx.var(1)])
    fv = frobenius(2, verschiebung(2, a, 4))
    g = ghost(a)
    assert fv == unghost(GhostTuple(ctx, 2, [2 * c for c in g.comps]))


def test_restrict(ctx):
    a = WittVector(ctx, 3, [ctx.var(0), ctx.var(1), ctx.one])
    assert restrict(a, 2) == WittVector(ctx, 2, [ctx.var(0), ctx.var(1)])


def test_decompose(ctx):
    a, b = ctx.gens()
    w = WittVector(ctx, 2, [a, b])
    assert witt_decompose(w) == [(1, a), (2, b)]
    resum = verschiebung(1, teichmuller(a, 2), 2) + verschiebung(2, teichmuller(b, 1), 2)
    assert resum == w
    assert witt_decompose(WittVector.zero(ctx, 3)) == []
    assert witt_decompose(teichmuller(a, 2)) == [(1, a)]


def test_json_roundtrip(ctx):
    a = WittVector(ctx, 2, [ctx.var(0) / (ctx.var(1) + 1), ctx.rational(5)])
    assert WittVector.from_json(ctx, a.to_json()) == a
