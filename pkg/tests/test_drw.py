"""De Rham-Witt forms in ghost coordinates: operators and relations."""

from fractions import Fraction

import pytest

from wittcycles.drw import (DRWForm, drw_F, drw_V, drw_d, drw_mul,
                            drw_restrict, drw_V_dlog_identity_check,
                            from_witt, phi, teich_dlog)
from wittcycles.forms import DiffForm, dlog
from wittcycles.scalars import Context
from wittcycles.witt import WittVector, teichmuller, verschiebung


@pytest.fixture
def ctx():
    return Context(("x", "y"))


def test_d_of_teichmuller(ctx):
    # d[a] has ghost components a^(j-1) da
    a = ctx.var(0)
    got = drw_d(from_witt(teichmuller(a, 3)))
    want = [DiffForm(ctx, 1, {(0,): a ** (j - 1)}) for j in range(1, 4)]
    assert got.comps == tuple(want)


def test_wedge_square_of_dlog_vanishes(ctx):
    b = ctx.var(0) + 1
    w = teich_dlog(b, 3)
    assert drw_mul(w, w).is_zero()


def test_restrict(ctx):
    comps = [dlog(ctx.var(0)).scale(j) for j in range(1, 5)]
    a = DRWForm(ctx, 1, 4, comps)
    assert drw_restrict(a, 2).comps == tuple(comps[:2])


def test_frobenius_of_d_teichmuller(ctx):
    # F_s d[a] has ghost components a^(sj-1) da
    a = ctx.var(0)
    s = 2
    got = drw_F(s, drw_d(from_witt(teichmuller(a, 4))))
    want = [DiffForm(ctx, 1, {(0,): a ** (s * j - 1)}) for j in range(1, 3)]
    assert got.comps == tuple(want)


def test_verschiebung_of_dlog_multiple(ctx):
    a, b = ctx.gens()
    alpha = phi(teichmuller(a, 1), [b])
    got = drw_V(2, alpha, 2)
    assert got.comps[0].is_zero()
    assert got.comps[1] == dlog(b).scale(2 * a)


def test_teich_dlog_values(ctx):
    x = ctx.var(0)
    assert teich_dlog(x, 3).comps == (dlog(x),) * 3
    assert teich_dlog(ctx.rational(5), 3).is_zero()


def test_phi_values(ctx):
    x = ctx.var(0)
    a = WittVector(ctx, 2, [ctx.rational(3), ctx.zero])
    got = phi(a, [x])
    assert got.comps == (dlog(x).scale(3), dlog(x).scale(9))
    assert phi(a, [ctx.rational(2)]).is_zero()


def test_v_dlog_identity_instances(ctx):
    a2 = WittVector(ctx, 2, [ctx.var(0), ctx.rational(2)])
    a3 = WittVector(ctx, 2, [ctx.var(1) + 1, ctx.var(0)])
    a4 = WittVector(ctx, 3, [ctx.var(0), ctx.one, ctx.var(1)])
    bs = [ctx.var(0), ctx.var(1) + 3]
    assert drw_V_dlog_identity_check(a2, bs, 2, 4)
    assert drw_V_dlog_identity_check(a3, bs[:1], 3, 6)
    assert drw_V_dlog_identity_check(a4, bs, 2, 6)


def test_fdv_and_projection(ctx):
    x, y = ctx.gens()
    al = DRWForm(ctx, 1, 2, [dlog(x), dlog(x + y)])
    be = DRWForm(ctx, 1, 4, [dlog(y).scale(j) for j in range(1, 5)])
    x0 = DRWForm(ctx, 0, 2, [DiffForm.scalar(x), DiffForm.scalar(y)])
    assert drw_F(2, drw_d(drw_V(2, al, 4))) == drw_d(al)
    assert drw_V(2, drw_mul(x0, drw_F(2, be)), 4) == drw_mul(drw_V(2, x0, 4), be)


def test_leibniz_instance(ctx):
    x, y = ctx.gens()
    ga = DRWForm(ctx, 1, 2, [dlog(x), dlog(y)])
    be = DRWForm(ctx, 0, 2, [DiffForm.scalar(x * y), DiffForm.scalar(x + y)])
    lhs = drw_d(drw_mul(ga, be))
    rhs = drw_mul(drw_d(ga), be) + drw_mul(ga, drw_d(be)).scale(-1)
    assert lhs == rhs


def test_restriction_kernel_is_v_image(ctx):
    # tuples supported only in the top component
    x = ctx.var(0)
    m = 2
    top = dlog(x)
    ker = DRWForm(ctx, 1, m + 1, [DiffForm.zero(ctx, 1)] * m + [top])
    assert drw_restrict(ker, m).is_zero()
    preimage = DRWForm(ctx, 1, 1, [top.scale(Fraction(1, m + 1))])
    assert drw_V(m + 1, preimage, m + 1) == ker


def test_degree0_matches_witt_verschiebung(ctx):
    a = WittVector(ctx, 2, [ctx.var(0), ctx.var(1)])
    lhs = drw_V(3, from_witt(a), 6)
    rhs = from_witt(verschiebung(3, a, 6))
    assert lhs == rhs


def test_json_roundtrip(ctx):
    a = phi(WittVector(ctx, 2, [ctx.var(0), ctx.one]), [ctx.var(1)])
    assert DRWForm.from_json(ctx, a.to_json()) == a
