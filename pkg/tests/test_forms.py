"""Differential forms over F and over F_m, and the canonical reduction."""

import pytest

from wittcycles.errors import NotRelative
from wittcycles.forms import (CanonRelForm, DiffForm, FormOnTrunc, dlog,
                              dlog_wedge, reduce_mod_exact)
from wittcycles.scalars import Context


@pytest.fixture
def ctx():
    return Context(("x", "y"))


def test_dlog_basics(ctx):
    x, y = ctx.gens()
    assert dlog(x) == DiffForm(ctx, 1, {(0,): 1 / x})
    # dlog of a product splits
    assert dlog((1 + x) * (1 + y)) == DiffForm(
        ctx, 1, {(0,): 1 / (1 + x), (1,): 1 / (1 + y)})
    assert dlog(ctx.rational(7)).is_zero()


def test_d_of_x_dy(ctx):
    x = ctx.var(0)
    form = DiffForm(ctx, 1, {(1,): x})
    assert form.d() == DiffForm(ctx, 2, {(0, 1): ctx.one})


def test_wedge_antisymmetry_and_d_squared(ctx):
    x, y = ctx.gens()
    a = DiffForm(ctx, 1, {(0,): y, (1,): x * x})
    b = DiffForm(ctx, 1, {(0,): x + 1})
    assert a.wedge(b) == -b.wedge(a)
    assert a.d().d().is_zero()
    assert dlog_wedge([x, x]).is_zero()


def test_trunc_d_with_dt_term(ctx):
    x = ctx.var(0)
    m = 3
    # d(t^2 (x) x) = t^2 (x) dx + 2 t dt ^ x
    alpha = FormOnTrunc(ctx, 0, m,
                        poly=[DiffForm.zero(ctx, 0), DiffForm.scalar(x),
                              DiffForm.zero(ctx, 0)])
    got = alpha.d()
    assert got.poly[1] == DiffForm(ctx, 1, {(0,): ctx.one})
    assert got.dt[1] == DiffForm.scalar(x).scale(2)
    assert got.base.is_zero() and got.poly[0].is_zero() and got.poly[2].is_zero()


def test_trunc_wedge_truncates(ctx):
    m = 2
    dx = dlog(ctx.var(0)).scale(ctx.var(0))
    a = FormOnTrunc(ctx, 1, m, poly=[dx, DiffForm.zero(ctx, 1)])
    b = FormOnTrunc(ctx, 1, m, poly=[DiffForm.zero(ctx, 1), dlog(ctx.var(1))])
    # t * t^m = 0
    assert a.wedge(b).is_zero()


def test_top_index_dt_term_is_zero_by_shape(ctx):
    # the split representation simply has no slot for t^m dt
    m = 2
    f = FormOnTrunc(ctx, 1, m, dt=[DiffForm.zero(ctx, 0)] * m)
    assert len(f.dt) == m and f.is_zero()


def test_reduce_dt_only_term(ctx):
    x, y = ctx.gens()
    m = 3
    eta = DiffForm(ctx, 0, {(): x * y})
    alpha = FormOnTrunc(ctx, 1, m, dt=[eta, DiffForm.zero(ctx, 0),
                                       DiffForm.zero(ctx, 0)])
    got = reduce_mod_exact(alpha)
    assert got.comps[0] == -eta.d()
    assert got.comps[1].is_zero() and got.comps[2].is_zero()


def test_reduce_kills_exact(ctx):
    x, y = ctx.gens()
    m = 3
    omega = DiffForm(ctx, 1, {(0,): y ** 2, (1,): x})
    alpha = FormOnTrunc(ctx, 1, m,
                        poly=[DiffForm.zero(ctx, 1), omega, DiffForm.zero(ctx, 1)])
    assert reduce_mod_exact(alpha.d()).is_zero()


def test_reduce_fixes_canonical(ctx):
    closed = dlog(ctx.var(0))  # closed 1-form
    m = 2
    alpha = FormOnTrunc(ctx, 1, m, poly=[closed, DiffForm.zero(ctx, 1)])
    got = reduce_mod_exact(alpha)
    assert got.comps == (closed, DiffForm.zero(ctx, 1))


def test_reduce_rejects_absolute_part(ctx):
    alpha = FormOnTrunc(ctx, 0, 1, base=DiffForm.scalar(ctx.one))
    with pytest.raises(NotRelative):
        reduce_mod_exact(alpha)


def test_canon_embed_restrict_roundtrip(ctx):
    x = ctx.var(0)
    g = CanonRelForm(ctx, 1, 3, [dlog(x), dlog(x + 1), dlog(x).scale(2)])
    assert reduce_mod_exact(g.embed()) == g
    assert g.restrict(2).comps == g.comps[:2]


def test_form_json_roundtrip(ctx):
    x, y = ctx.gens()
    f = FormOnTrunc(ctx, 1, 2,
                    base=dlog(x),
                    poly=[dlog(y), DiffForm.zero(ctx, 1)],
                    dt=[DiffForm.scalar(x * y), DiffForm.zero(ctx, 0)])
    assert FormOnTrunc.from_json(ctx, f.to_json()) == f
