"""Additive 0-cycles: class maps, the diagonal, boundaries, modulus."""

import random
from fractions import Fraction

import pytest

from wittcycles.addchow import (CycleGen, ParamCurve, boundary,
                                check_admissible, cyc_milnor, cycle_to_drw,
                                drw_to_milnor_diagonal, milnor_to_drw_diagonal,
                                modulus_check_curve, tower_compat,
                                verify_boundary_vanishing)
from wittcycles.errors import NonRationalBoundary
from wittcycles.forms import dlog
from wittcycles.scalars import Context
from wittcycles.witt import GhostTuple, WittVector, unghost


@pytest.fixture
def ctx():
    return Context(("x", "y"))


def test_admissibility(ctx):
    x = ctx.var(0)
    assert check_admissible(CycleGen([ctx.one, ctx.rational(-3)], [x]), 2)
    assert not check_admissible(CycleGen([ctx.zero, ctx.one], [x]), 2)
    assert not check_admissible(CycleGen([ctx.one, ctx.one], [ctx.zero]), 2)


def test_degree_one_class_is_a_witt_vector(ctx):
    # (1-3t) at m=2: the class corresponds to the Witt vector (3, 0)
    z = CycleGen([ctx.one, ctx.rational(-3)], [])
    cl = cyc_milnor(z, 2)
    ghost = [cl.canon.comps[i].coeffs.get((), ctx.zero) * (-(i + 1))
             for i in range(2)]
    assert unghost(GhostTuple(ctx, 2, ghost)) == WittVector(
        ctx, 2, [ctx.rational(3), ctx.zero])


def test_symbol_class_values(ctx):
    x = ctx.var(0)
    z = CycleGen([ctx.one, ctx.rational(-3)], [x])
    cl = cyc_milnor(z, 2)
    assert cl.canon.comps == (dlog(x).scale(-3), dlog(x).scale(Fraction(-9, 2)))
    # only f(0)^(-1) f matters
    z2 = CycleGen([ctx.rational(2), ctx.rational(-6)], [x])
    assert cyc_milnor(z2, 2) == cl


def test_drw_class_and_diagonal(ctx):
    x, y = ctx.gens()
    z = CycleGen([ctx.one, ctx.rational(-3)], [x])
    om = cycle_to_drw(z, 2)
    assert om.comps == (dlog(x).scale(3), dlog(x).scale(9))
    cl = cyc_milnor(z, 2)
    assert drw_to_milnor_diagonal(om) == cl
    assert milnor_to_drw_diagonal(cl) == om
    # 1 - a t^2: image supported in component 2 with weight 2a
    a = x + y
    z3 = CycleGen([ctx.one, ctx.zero, -a], [x])
    om3 = cycle_to_drw(z3, 2)
    assert om3.comps[0].is_zero()
    assert om3.comps[1] == dlog(x).scale(2 * a)
    assert drw_to_milnor_diagonal(om3) == cyc_milnor(z3, 2)


def test_class_multiplicative_in_f(ctx):
    x, y = ctx.gens()
    a, b = x + y, y - 3
    prod = CycleGen([ctx.one, -(a + b), a * b], [x])
    s1 = CycleGen([ctx.one, -a], [x])
    s2 = CycleGen([ctx.one, -b], [x])
    assert cyc_milnor(prod, 3) == cyc_milnor([s1, s2], 3)


def test_random_route_coherence_and_towers(ctx):
    rng = random.Random(7)

    def rand_fe():
        v = ctx.rational(rng.randint(-3, 3))
        for gv in ctx.gens():
            if rng.random() < 0.5:
                v = v + ctx.rational(rng.randint(1, 2)) * gv ** rng.randint(1, 2)
        return v

    def rand_gen(n, m):
        while True:
            f = [rand_fe() for _ in range(rng.randint(1, m + 1))]
            bs = [rand_fe() for _ in range(n - 1)]
            z = CycleGen(f, bs, rng.randint(-2, 2) or 1)
            if z.is_admissible():
                return z

    for _ in range(40):
        n, m = rng.randint(1, 3), rng.randint(1, 5)
        z = rand_gen(n, m)
        assert drw_to_milnor_diagonal(cycle_to_drw(z, m)) == cyc_milnor(z, m)
        assert tower_compat(z, m + rng.randint(1, 2), m)


@pytest.fixture
def ectx():
    return Context(("x", "y", "u"))


def test_boundary_face_bookkeeping(ectx):
    x, y, u = ectx.gens()
    # g0 = x(1+u), g1 = u/(u-1): faces at u=0 (t=x, +1) and u=1 (t=2x, -1)
    curve = ParamCurve(ectx, 2, [x * (1 + u), u / (u - 1)])
    gens = boundary(curve, 2)
    bx = gens[0].ctx.var(0)
    got = {(g.f[1], g.coef) for g in gens}
    assert (-(1 / bx), Fraction(1)) in got
    assert (-(1 / (2 * bx)), Fraction(-1)) in got


def test_boundary_of_constant_t_coordinate_cancels(ectx):
    x, y, u = ectx.gens()
    curve = ParamCurve(ectx, 2, [x + 1, u])
    gens = boundary(curve, 2)
    assert cyc_milnor(gens, 2).is_zero()


def test_boundary_requires_rational_support(ectx):
    x, y, u = ectx.gens()
    curve = ParamCurve(ectx, 2, [x, u * u + 1])
    with pytest.raises(NonRationalBoundary):
        boundary(curve, 2)


def test_modulus_check(ectx):
    x, y, u = ectx.gens()
    m = 3
    # t-coordinate without zeros: vacuously true
    assert modulus_check_curve(ParamCurve(ectx, 2, [ectx.rational(5), u]), m)
    assert modulus_check_curve(
        ParamCurve(ectx, 2, [u, 1 + x * u ** (m + 1)]), m)
    assert not modulus_check_curve(ParamCurve(ectx, 2, [u, 1 + x * u]), 1)


def test_vanishing_is_vacuous_without_modulus(ectx):
    x, y, u = ectx.gens()
    # zeros of the t-coordinate where no cube coordinate approaches 1:
    # the modulus gate fails, so no claim is checked
    curve = ParamCurve(ectx, 2, [1 + u * u, u / (u - 1), x])
    ok, ev = verify_boundary_vanishing(curve, 3)
    assert not ok and ev == {"modulus": False}


def test_boundary_vanishing_with_modulus(ectx):
    x, y, u = ectx.gens()
    w1 = ParamCurve(ectx, 2, [u, 1 - x * x * u * u])
    assert modulus_check_curve(w1, 1)
    ok, ev = verify_boundary_vanishing(w1, 1)
    assert ok, ev
    w2 = ParamCurve(ectx, 2, [u, 1 - x * x * u * u, 1 - y * u])
    assert modulus_check_curve(w2, 2)
    ok, ev = verify_boundary_vanishing(w2, 2)
    assert ok, ev
    assert not modulus_check_curve(w2, 3)


def test_generator_json_roundtrip(ctx):
    x = ctx.var(0)
    z = CycleGen([ctx.one, ctx.rational(-3)], [x], Fraction(2, 3))
    back = CycleGen.from_json(ctx, z.to_json())
    assert back.f == z.f and back.bs == z.bs and back.coef == z.coef
