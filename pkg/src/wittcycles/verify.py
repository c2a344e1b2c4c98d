"""Seeded property-verification suites.

Each suite checks the algebraic contracts of one layer on randomly
generated corpora; reports are deterministic given (seed, trials,
variable list).  Suites return a dict with one entry per property:
{"name", "trials", "ok", "counterexample"}.
"""

from __future__ import annotations

import itertools
import random
import time
from fractions import Fraction

from . import addchow, drw, milnorfield, relmilnor, trunc, witt
from .errors import DegenerateBranch, WittCyclesError, ZeroEntry
from .forms import CanonRelForm, DiffForm, FormOnTrunc, dlog, reduce_mod_exact
from .scalars import Context
from .trunc import TruncElem, exp_t, log_t, trunc_dlog, embed_form


class Sampler:
    """Deterministic random generators over one context."""

    def __init__(self, ctx, seed):
        self.ctx = ctx
        self.rng = random.Random(seed)

    def fe(self, maxdeg=2):
        """A small random field element (polynomial shape)."""
        ctx, rng = self.ctx, self.rng
        total = ctx.rational(rng.randint(-3, 3))
        for i in range(ctx.r):
            if rng.random() < 0.5:
                total = total + ctx.rational(rng.choice([1, -1, 2])) \
                    * ctx.var(i) ** rng.randint(1, maxdeg)
        return total

    def nonzero(self, maxdeg=2):
        while True:
            v = self.fe(maxdeg)
            if not v.is_zero():
                return v

    def monomial(self):
        c = self.ctx.rational(self.rng.choice([1, -1, 2, 3]))
        if self.rng.random() < 0.6:
            c = c * self.ctx.var(self.rng.randrange(self.ctx.r))
        return c

    def form(self, n, light=False):
        ctx = self.ctx
        if n < 0 or n > ctx.r:
            return DiffForm.zero(ctx, n)
        coeffs = {}
        for s in itertools.combinations(range(ctx.r), n):
            if self.rng.random() < (0.4 if light else 0.7):
                coeffs[s] = self.monomial() if light else self.fe(maxdeg=1)
        return DiffForm(ctx, n, coeffs)

    def form_on_trunc(self, k, m, relative=False, light=False):
        base = DiffForm.zero(self.ctx, k) if relative else self.form(k, light)
        return FormOnTrunc(self.ctx, k, m, base,
                           [self.form(k, light) for _ in range(m)],
                           [self.form(k - 1, light) for _ in range(m)])

    def canon(self, n, m):
        return CanonRelForm(self.ctx, n, m, [self.form(n) for _ in range(m)])

    def witt(self, m):
        return witt.WittVector(self.ctx, m, [self.fe(maxdeg=1) for _ in range(m)])

    def sparse_witt(self, m):
        """A Witt vector with mostly-zero monomial coordinates."""
        ctx, rng = self.ctx, self.rng
        coords = [ctx.zero] * m
        for i in range(m):
            if rng.random() < 0.5:
                c = ctx.rational(rng.choice([1, -1, 2]))
                if rng.random() < 0.5:
                    c = c * ctx.var(rng.randrange(ctx.r))
                coords[i] = c
        return witt.WittVector(ctx, m, coords)

    def nilpotent(self, m):
        return TruncElem(self.ctx, m, [self.ctx.zero]
                         + [self.fe(maxdeg=1) for _ in range(m)])

    def sparse_nilpotent(self, m):
        """A nilpotent with few nonzero coefficients, each one a monomial."""
        ctx, rng = self.ctx, self.rng
        coeffs = [ctx.zero] * (m + 1)
        for _ in range(rng.randint(1, 2)):
            c = ctx.rational(rng.choice([1, -1, 2, 3]))
            if rng.random() < 0.5:
                c = c * ctx.var(rng.randrange(ctx.r))
            coeffs[rng.randint(1, m)] = c
        return TruncElem(ctx, m, coeffs)

    def principal_unit(self, m, light=False):
        if light:
            return TruncElem.one(self.ctx, m) + self.sparse_nilpotent(m)
        return TruncElem(self.ctx, m, [self.ctx.one]
                         + [self.fe(maxdeg=1) for _ in range(m)])

    def trunc_unit(self, m, light=False):
        if light:
            return TruncElem.constant(self.monomial(), m) \
                * self.principal_unit(m, light=True)
        while True:
            u = TruncElem(self.ctx, m, [self.fe(maxdeg=1) for _ in range(m + 1)])
            if u.is_unit():
                return u

    def drw(self, n, m):
        return drw.DRWForm(self.ctx, n, m, [self.form(n) for _ in range(m)])

    def cycle_gen(self, n, m):
        while True:
            f = [self.fe(maxdeg=1) for _ in range(self.rng.randint(1, m + 1))]
            bs = [self.fe(maxdeg=1) for _ in range(n - 1)]
            z = addchow.CycleGen(f, bs, self.rng.randint(-2, 2) or 1)
            if z.is_admissible():
                return z


def _prop(name, trials, failure=None):
    return {"name": name, "trials": trials, "ok": failure is None,
            "counterexample": failure}


def _report(suite, props, seed, elapsed):
    return {"suite": suite, "seed": seed, "elapsed_s": round(elapsed, 3),
            "ok": all(p["ok"] for p in props), "properties": props}


# -- witt suite ---------------------------------------------------------

def check_ghost_gamma(ctx, seed, trials):
    """gamma homomorphism, ghost ring homomorphism, log-derivative
    identity, unghost of ghost."""
    s = Sampler(ctx, seed)
    for k in range(trials):
        m = s.rng.randint(1, 8)
        a, b = s.sparse_witt(m), s.sparse_witt(m)
        ga, gb = witt.ghost(a), witt.ghost(b)
        if witt.gamma(a + b) != witt.gamma(a) * witt.gamma(b):
            return _prop("gamma-homomorphism", k + 1, repr((a, b)))
        if witt.gamma_inv(witt.gamma(a)) != a:
            return _prop("gamma-inverse", k + 1, repr(a))
        if witt.ghost(a + b).comps != tuple(p + q for p, q in zip(ga.comps, gb.comps)):
            return _prop("ghost-additive", k + 1, repr((a, b)))
        if witt.ghost(a * b).comps != tuple(p * q for p, q in zip(ga.comps, gb.comps)):
            return _prop("ghost-multiplicative", k + 1, repr((a, b)))
        if witt.unghost(ga) != a:
            return _prop("unghost-of-ghost", k + 1, repr(a))
        # -t u'/u = sum g_j t^j for u = gamma(a)
        u = witt.gamma(a)
        minus_t_du = TruncElem(ctx, m, [ctx.zero]
                               + [u.coeffs[i] * (-i) for i in range(1, m + 1)])
        if minus_t_du * u.inv() != TruncElem(ctx, m, (ctx.zero,) + ga.comps):
            return _prop("log-derivative-identity", k + 1, repr(a))
    return _prop("ghost-gamma-coherence", trials)


def check_explog(ctx, seed, trials):
    """exp and log are mutually inverse homomorphisms on (t) and 1+(t)."""
    s = Sampler(ctx, seed)
    for k in range(trials):
        m = s.rng.randint(1, 8)
        a = s.sparse_nilpotent(m)
        u = exp_t(a)
        if log_t(u) != a:
            return _prop("log-of-exp", k + 1, repr(a))
        if exp_t(log_t(u)) != u:
            return _prop("exp-of-log", k + 1, repr(u))
        if k % 10 == 0:
            b = s.sparse_nilpotent(m)
            if exp_t(a + b) != u * exp_t(b):
                return _prop("exp-additive", k + 1, repr((a, b)))
            w = s.principal_unit(min(m, 4))
            if log_t(u.restrict(w.level) * w) != a.restrict(w.level) + log_t(w):
                return _prop("log-multiplicative", k + 1, repr((u, w)))
    return _prop("exp-log-isomorphism", trials)


def check_witt_vf(ctx, seed, trials):
    """F_s V_s = s, ghost formulas for V and F, restriction squares."""
    s = Sampler(ctx, seed)
    for k in range(trials):
        m = s.rng.randint(2, 8)
        sv = s.rng.choice([2, 3])
        if m // sv < 1:
            sv = 2
        a = s.witt(m // sv)
        fv = witt.frobenius(sv, witt.verschiebung(sv, a, m))
        ga = witt.ghost(a)
        s_id = witt.unghost(witt.GhostTuple(ctx, m // sv,
                                            [c * sv for c in ga.comps]))
        if fv != s_id:
            return _prop("frobenius-verschiebung", k + 1, repr((sv, a)))
        kk = s.rng.randint(sv, m)
        if witt.restrict(witt.verschiebung(sv, a, m), kk) != witt.verschiebung(sv, a, kk):
            return _prop("restrict-verschiebung", k + 1, repr((sv, a, kk)))
        b = s.witt(m)
        resum = witt.WittVector.zero(ctx, m)
        for i, ai in witt.witt_decompose(b):
            resum = resum + witt.verschiebung(
                i, witt.teichmuller(ai, max(1, m // i)), m)
        if resum != b:
            return _prop("decompose-resum", k + 1, repr(b))
    return _prop("verschiebung-frobenius-decompose", trials)


def suite_witt(seed=0, trials=None, names=("x", "y")):
    t0 = time.time()
    ctx = Context(names)
    trials = trials or 300
    props = [check_ghost_gamma(ctx, seed, trials),
             check_explog(ctx, seed + 1, max(trials, 500)),
             check_witt_vf(ctx, seed + 2, max(trials // 3, 100))]
    return _report("witt", props, seed, time.time() - t0)


# -- drw suite ----------------------------------------------------------

def check_drw_relations(ctx, seed, trials):
    s = Sampler(ctx, seed)
    for k in range(trials):
        m = s.rng.randint(2, 6)
        sv = s.rng.choice([2, 3])
        if m // sv < 1:
            sv = 2
        n = s.rng.randint(0, max(0, ctx.r - 1))
        al = s.drw(n, m // sv)
        be = s.drw(s.rng.randint(0, ctx.r - 1), m)
        x0 = s.drw(s.rng.randint(0, ctx.r - 1), m // sv)
        if drw.drw_F(sv, drw.drw_d(drw.drw_V(sv, al, m))) != drw.drw_d(al):
            return _prop("FdV-is-d", k + 1, repr((sv, al)))
        if drw.drw_V(sv, drw.drw_mul(x0, drw.drw_F(sv, be)), m) \
                != drw.drw_mul(drw.drw_V(sv, x0, m), be):
            return _prop("V-projection-formula", k + 1, repr((sv, x0, be)))
        ga = s.drw(n, m)
        if not drw.drw_d(drw.drw_d(ga)).is_zero():
            return _prop("d-squared-zero", k + 1, repr(ga))
        lhs = drw.drw_d(drw.drw_mul(ga, be))
        rhs = drw.drw_mul(drw.drw_d(ga), be) \
            + drw.drw_mul(ga, drw.drw_d(be)).scale((-1) ** n)
        if lhs != rhs:
            return _prop("leibniz", k + 1, repr((ga, be)))
        kk = s.rng.randint(1, m)
        if drw.drw_restrict(drw.drw_d(ga), kk) != drw.drw_d(drw.drw_restrict(ga, kk)):
            return _prop("restrict-commutes-d", k + 1, repr(ga))
    return _prop("restricted-witt-complex-relations", trials)


def check_drw_vdlog(ctx, seed, trials):
    """V_s(a dlog-terms) = V_s(a) dlog-terms, and zeta-coherence of phi."""
    s = Sampler(ctx, seed)
    for k in range(trials):
        m = s.rng.randint(2, 6)
        sv = s.rng.choice([2, 3])
        if m // sv < 1:
            sv = 2
        a = s.witt(m // sv)
        bs = [s.nonzero() for _ in range(s.rng.randint(1, max(1, ctx.r - 1)))]
        if not drw.drw_V_dlog_identity_check(a, bs, sv, m):
            return _prop("V-dlog-identity", k + 1, repr((sv, a, bs)))
        b = s.witt(m)
        built = drw.from_witt(b)
        for bb in bs:
            built = drw.drw_mul(built, drw.teich_dlog(bb, m))
        if built != drw.phi(b, bs):
            return _prop("zeta-coherence", k + 1, repr((b, bs)))
    return _prop("V-dlog-and-zeta", trials)


def check_drw_kernel(ctx, seed, trials):
    """Kernel of restriction m+1 -> m equals the image of V_(m+1)."""
    s = Sampler(ctx, seed)
    for k in range(trials):
        m = s.rng.randint(1, 5)
        n = s.rng.randint(0, ctx.r)
        v_img = drw.drw_V(m + 1, s.drw(n, 1), m + 1)
        if not drw.drw_restrict(v_img, m).is_zero():
            return _prop("V-image-in-kernel", k + 1, repr(v_img))
        if any(not w.is_zero() for w in v_img.comps[:m]):
            return _prop("V-image-support", k + 1, repr(v_img))
        ker = drw.DRWForm(ctx, n, m + 1,
                          [DiffForm.zero(ctx, n)] * m + [s.form(n)])
        if not drw.drw_restrict(ker, m).is_zero():
            return _prop("kernel-support", k + 1, repr(ker))
        # every kernel element is V_(m+1) of something: solve top component
        top = ker.comps[m].scale(Fraction(1, m + 1))
        if drw.drw_V(m + 1, drw.DRWForm(ctx, n, 1, [top]), m + 1) != ker:
            return _prop("kernel-in-V-image", k + 1, repr(ker))
    return _prop("restriction-kernel-is-V-image", trials)


def suite_drw(seed=0, trials=None, names=("x", "y")):
    t0 = time.time()
    ctx = Context(names)
    trials = trials or 100
    props = [check_drw_relations(ctx, seed, trials),
             check_drw_vdlog(ctx, seed + 1, trials),
             check_drw_kernel(ctx, seed + 2, trials)]
    return _report("drw", props, seed, time.time() - t0)


# -- relmilnor suite ----------------------------------------------------

def check_reduce_kills_exact(seed, trials_per_cell, r_max=3, m_max=6):
    """reduce_mod_exact kills exactly the exact relative forms; nonzero
    canonical forms have nonzero differential."""
    total = 0
    for r in range(1, r_max + 1):
        ctx = Context(tuple("xyz"[:r]))
        s = Sampler(ctx, seed + r)
        for n in range(1, r + 2):
            for m in range(1, m_max + 1):
                for _ in range(trials_per_cell):
                    total += 1
                    beta = s.form_on_trunc(n - 1, m, relative=True, light=True)
                    if not reduce_mod_exact(beta.d()).is_zero():
                        return _prop("reduce-kills-exact", total,
                                     "n=%d m=%d r=%d" % (n, m, r))
                for _ in range(max(1, trials_per_cell // 4)):
                    total += 1
                    g = s.canon(n - 1, m)
                    if reduce_mod_exact(g.embed()) != g:
                        return _prop("reduce-fixes-canonical", total,
                                     "n=%d m=%d r=%d" % (n, m, r))
                    if not g.is_zero() and g.embed().d().is_zero():
                        return _prop("d-injective-on-canonical", total,
                                     "n=%d m=%d r=%d" % (n, m, r))
    return _prop("reduce-mod-exact-contract", total)


def check_normal_form_welldef(ctx, seed, trials, m_max=6):
    s = Sampler(ctx, seed)
    for k in range(trials):
        m = s.rng.randint(1, m_max)
        u, v = s.principal_unit(m, light=True), s.principal_unit(m, light=True)
        w = s.trunc_unit(m, light=True)
        # two-principal independence, directly as exactness
        f = embed_form(log_t(u)).wedge(trunc_dlog(v)) \
            + embed_form(log_t(v)).wedge(trunc_dlog(u))
        if not reduce_mod_exact(f).is_zero():
            return _prop("principal-entry-independence", k + 1, repr((u, v)))
        nf = relmilnor.normal_form
        sym = relmilnor.RelSymbol
        if nf(sym([u, w])) != -nf(sym([w, u])):
            return _prop("antisymmetry", k + 1, repr((u, w)))
        if not nf(sym([u, u])).is_zero():
            return _prop("square-vanishes", k + 1, repr(u))
        if not nf(sym([u, TruncElem.constant(ctx.rational(-1), m)])).is_zero():
            return _prop("minus-one-vanishes", k + 1, repr(u))
        up = s.principal_unit(m)
        if nf(sym([u * up, w])) != nf([sym([u, w]), sym([up, w])]):
            return _prop("bilinearity", k + 1, repr((u, up, w)))
        c = s.nonzero()
        scaled = TruncElem.constant(c, m) * u
        lhs = nf(sym([scaled, up]))
        rhs = nf([sym([u, up]), sym([TruncElem.constant(c, m), up])])
        if lhs != rhs:
            return _prop("bilinearity-mixed-constant", k + 1, repr((c, u, up)))
    return _prop("normal-form-well-definedness", trials)


def check_theta_roundtrip(ctx, seed, trials_per_cell, m_max=6):
    total = 0
    s = Sampler(ctx, seed)
    for n in range(1, ctx.r + 2):
        for m in range(1, m_max + 1):
            for _ in range(trials_per_cell):
                total += 1
                a = s.nilpotent(m)
                bs = [s.nonzero() for _ in range(n - 1)]
                sym = relmilnor.theta(a, bs)
                got = relmilnor.normal_form(sym)
                want = embed_form(a)
                for b in bs:
                    want = want.wedge(FormOnTrunc.from_base(dlog(b), m))
                if got.canon != reduce_mod_exact(want):
                    return _prop("theta-roundtrip", total,
                                 "n=%d m=%d a=%r bs=%r" % (n, m, a, bs))
    return _prop("theta-roundtrip", total)


def check_relmilnor_products(ctx, seed, trials, m_max=5):
    s = Sampler(ctx, seed)
    for k in range(trials):
        m = s.rng.randint(1, m_max)
        u = s.principal_unit(m)
        w = s.trunc_unit(m)
        c = s.nonzero()
        xi = relmilnor.normal_form(relmilnor.RelSymbol([u, w]))
        via_canon = relmilnor.mult_by_absolute([c], xi)
        via_symbol = relmilnor.normal_form(
            relmilnor.RelSymbol([u, w, TruncElem.constant(c, m)]))
        if via_canon != via_symbol:
            return _prop("absolute-product", k + 1, repr((u, w, c)))
        kk = s.rng.randint(1, m)
        if relmilnor.restrict_class(xi, kk) != relmilnor.normal_form(
                relmilnor.RelSymbol([u.restrict(kk), w.restrict(kk)])):
            return _prop("restriction-square", k + 1, repr((u, w, kk)))
    return _prop("product-and-restriction", trials)


def suite_relmilnor(seed=0, trials=None, names=("x", "y")):
    t0 = time.time()
    ctx = Context(names)
    trials = trials or 200
    props = [check_reduce_kills_exact(seed, max(trials // 10, 10)),
             check_normal_form_welldef(ctx, seed + 1, trials),
             check_theta_roundtrip(ctx, seed + 2, max(trials // 4, 25)),
             check_relmilnor_products(ctx, seed + 3, max(trials // 2, 50))]
    return _report("relmilnor", props, seed, time.time() - t0)


# -- reciprocity suite --------------------------------------------------

def _reciprocity_symbol(s: Sampler, upos):
    """A random symbol over F(u) with fully rational support: entries are
    scaled products of linear factors (u - c) with c in the base field."""
    ctx = s.ctx
    u = ctx.var(upos)
    base = milnorfield.base_context(ctx, upos)
    pool_base = [base.one, base.rational(2), base.rational(-1)] \
        + [base.var(i) for i in range(base.r)]
    n = s.rng.randint(1, min(3, 1 + base.r))
    entries = []
    for _ in range(n):
        e = milnorfield.lift_elem(ctx, s.rng.choice(pool_base), upos)
        for _ in range(s.rng.randint(0, 2)):
            c = s.rng.choice(pool_base)
            factor = u - milnorfield.lift_elem(ctx, c, upos)
            e = e * factor if s.rng.random() < 0.7 else e / factor
        entries.append(e)
    return milnorfield.FieldSymbol(ctx, entries, s.rng.choice([1, -1, 2]))


def check_weil_reciprocity(names, seed, trials):
    ctx = Context(tuple(names) + ("u",))
    upos = ctx.r - 1
    s = Sampler(ctx, seed)
    for k in range(trials):
        sym = _reciprocity_symbol(s, upos)
        ok, ev = milnorfield.weil_reciprocity_check([sym], upos)
        if not ok:
            return _prop("weil-reciprocity", k + 1, "%r -> %r" % (sym, ev))
    return _prop("weil-reciprocity", trials)


def check_tame_basics(names, seed, trials):
    """Multilinearity of the tame symbol and vanishing on units."""
    ctx = Context(tuple(names) + ("u",))
    upos = ctx.r - 1
    base = milnorfield.base_context(ctx, upos)
    s = Sampler(ctx, seed)
    u = ctx.var(upos)
    for k in range(trials):
        c = Sampler(base, seed + k).nonzero()
        clift = milnorfield.lift_elem(ctx, c, upos)
        v = milnorfield.Valuation.finite(ctx, upos, base.zero)
        e1 = u ** s.rng.randint(1, 3) * clift
        e2 = clift + u if not (clift + u).is_zero() else clift * 2 + u
        lhs = milnorfield.collect_terms(
            milnorfield.tame_symbol(v, milnorfield.FieldSymbol(ctx, [e1 * e2])))
        rhs = milnorfield.collect_terms(
            milnorfield.tame_symbol(v, milnorfield.FieldSymbol(ctx, [e1]))
            + milnorfield.tame_symbol(v, milnorfield.FieldSymbol(ctx, [e2])))
        if sum(t.coef for t in lhs) != sum(t.coef for t in rhs):
            return _prop("tame-multilinearity-n1", k + 1, repr((e1, e2)))
        # units-only symbols die
        unit = clift + u * u if not (clift + u * u).is_zero() else 1 + u * u
        got = milnorfield.tame_symbol(
            v, milnorfield.FieldSymbol(ctx, [1 + u * clift, unit]))
        if got:
            return _prop("tame-kills-units", k + 1, repr(unit))
    return _prop("tame-symbol-basics", trials)


def suite_reciprocity(seed=0, trials=None, names=("x", "y")):
    t0 = time.time()
    trials = trials or 50
    props = [check_weil_reciprocity(names, seed, trials),
             check_tame_basics(names, seed + 1, max(trials // 2, 20))]
    return _report("reciprocity", props, seed, time.time() - t0)


# -- cycle-iso suite ----------------------------------------------------

def check_cycle_dictionary(ctx, seed, trials, m_max=6):
    s = Sampler(ctx, seed)
    for k in range(trials):
        n = s.rng.randint(1, ctx.r + 1)
        m = s.rng.randint(1, m_max)
        z = s.cycle_gen(n, m)
        om = addchow.cycle_to_drw(z, m)
        via_drw = addchow.drw_to_milnor_diagonal(om)
        via_symbol = addchow.cyc_milnor(z, m)
        if via_drw != via_symbol:
            return _prop("diagonal-vs-symbol", k + 1, repr(z))
        if addchow.milnor_to_drw_diagonal(via_drw) != om:
            return _prop("diagonal-invertible", k + 1, repr(z))
    return _prop("cycle-class-dictionary", trials)


def check_towers(ctx, seed, trials, m_max=6):
    s = Sampler(ctx, seed)
    for k in range(trials):
        n = s.rng.randint(1, ctx.r + 1)
        m = s.rng.randint(1, m_max - 1)
        mp = s.rng.randint(m + 1, m_max)
        z = s.cycle_gen(n, mp)
        if not addchow.tower_compat(z, mp, m):
            return _prop("tower-compatibility", k + 1, repr((z, mp, m)))
    return _prop("tower-compatibility", trials)


def _curve_corpus(names, seed, count, m_max=4):
    """Modulus-satisfying parametrized curves with rational boundary.
    Cube coordinates are built from pools with prescribed contact order
    with 1 at the zero of the t-coordinate."""
    ctx = Context(tuple(names) + ("u",))
    upos = ctx.r - 1
    base = milnorfield.base_context(ctx, upos)
    u = ctx.var(upos)
    s = Sampler(ctx, seed)
    lift = lambda c: milnorfield.lift_elem(ctx, c, upos)

    def ord2(scale):  # ord_0(g - 1) = 2, rational faces at +-1/scale
        return 1 - lift(scale) ** 2 * u ** 2

    def ord3(scale):  # two rational cubics sharing e1 and e2
        lam = lift(scale)
        num = (1 - lam * u) * (1 - 5 * lam * u) * (1 - 6 * lam * u)
        den = (1 - 2 * lam * u) * (1 - 3 * lam * u) * (1 - 7 * lam * u)
        return num / den

    def plain(scale):  # ord_0(g - 1) = 1
        return 1 - lift(scale) * u

    pool_scale = [base.one, base.rational(2)] + [base.var(i) for i in range(base.r)]
    out = []
    while len(out) < count:
        m = s.rng.randint(1, m_max)
        kind = s.rng.randrange(3)
        if kind == 0:
            # constant t-coordinate: modulus vacuous, pure reciprocity
            g0 = lift(s.rng.choice(pool_scale)) + lift(base.rational(3))
            n = s.rng.randint(1, 2)
            gs = [g0]
            for _ in range(n):
                e = plain(s.rng.choice(pool_scale))
                if s.rng.random() < 0.5:
                    e = e / plain(s.rng.choice(pool_scale))
                gs.append(e)
        elif kind == 1:
            # g0 = u, one cube coordinate with high contact
            need = m + 1
            if need <= 2:
                g1 = ord2(s.rng.choice(pool_scale))
                gs = [u, g1]
            elif need <= 3:
                gs = [u, ord3(s.rng.choice(pool_scale))]
            else:
                # split the contact across two coordinates
                gs = [u, ord3(s.rng.choice(pool_scale)),
                      ord2(s.rng.choice(pool_scale))]
                if need > 5:
                    continue
        else:
            # g0 = u with a constant second coordinate mixed in
            if m + 1 > 3:
                continue
            extra = lift(s.rng.choice(pool_scale)) + lift(base.rational(4))
            gs = [u, ord3(s.rng.choice(pool_scale)), extra]
        curve = addchow.ParamCurve(ctx, upos, gs)
        if len(curve.gs) - 1 > 2:
            continue
        if not addchow.modulus_check_curve(curve, m):
            continue
        try:
            addchow.boundary(curve, m)
        except WittCyclesError:
            continue  # degenerate face configuration: resample
        out.append((curve, m))
    return out


def check_boundary_vanishing(names, seed, count):
    corpus = _curve_corpus(names, seed, count)
    for k, (curve, m) in enumerate(corpus):
        ok, ev = addchow.verify_boundary_vanishing(curve, m)
        if not ok:
            return _prop("boundary-vanishing", k + 1, "%r m=%d -> %r" % (curve, m, ev))
    return _prop("boundary-vanishing", len(corpus))


def suite_cycle_iso(seed=0, trials=None, names=("x", "y")):
    t0 = time.time()
    ctx = Context(names)
    trials = trials or 300
    props = [check_cycle_dictionary(ctx, seed, trials),
             check_towers(ctx, seed + 1, max(trials // 3, 100)),
             check_boundary_vanishing(names, seed + 2, max(trials // 10, 30))]
    return _report("cycle-iso", props, seed, time.time() - t0)


# -- rewriting suite ----------------------------------------------------

def check_elem_identity(names, seed, trials):
    """The two-entry identity under dlog and boundary realizations,
    both branches."""
    ctx = Context(names)
    s = Sampler(ctx, seed)
    main = degenerate = 0
    k = 0
    while main + degenerate < trials:
        k += 1
        a, b = s.nonzero(1), s.nonzero(1)
        sv, tau = s.nonzero(1), s.nonzero(1)
        try:
            lhs, rhs = milnorfield.elem_identity_instance(a, b, sv, tau)
        except (DegenerateBranch, ZeroEntry):
            continue
        diff = [lhs, rhs.scale(-1)]
        ok, _ = milnorfield._zero_by_realizations(diff, depth=ctx.r)
        if not ok:
            return _prop("two-entry-identity", k, repr((a, b, sv, tau)))
        main += 1
        # forced degenerate branch: b t = -1/(as) - 1
        den = a * sv * tau
        if den.is_zero():
            continue
        b2 = (-(a * sv).inv() - 1) / tau
        if b2.is_zero():
            continue
        try:
            milnorfield.elem_identity_instance(a, b2, sv, tau)
            return _prop("degenerate-branch-detected", k, repr((a, b2, sv, tau)))
        except DegenerateBranch:
            lhs0 = milnorfield.FieldSymbol(ctx, [1 + a * sv, 1 + b2 * tau])
            if not milnorfield.dlog_realization([lhs0]).is_zero():
                return _prop("degenerate-branch-zero", k, repr((a, b2, sv, tau)))
            degenerate += 1
    return _prop("two-entry-identity-both-branches", main + degenerate)


def check_rewrite_filtration(names, seed, trials):
    """Filtration certificates: ord bounds on the leading unit, pi-unit
    residuals, and realization agreement with the input."""
    ctx = Context(tuple(names) + ("pi",))
    upos = ctx.r - 1
    base = milnorfield.base_context(ctx, upos)
    pi = ctx.var(upos)
    v = milnorfield.Valuation.finite(ctx, upos, base.zero)
    s = Sampler(ctx, seed)
    done = 0
    k = 0
    while done < trials:
        k += 1
        nentries = s.rng.randint(1, 3)
        m = s.rng.randint(1, 4)
        entries = []
        total = 0
        for i in range(nentries):
            mi = s.rng.randint(1, max(1, m - total)) if i < nentries - 1 \
                else max(1, m - total)
            ui = milnorfield.lift_elem(ctx, Sampler(base, seed + 31 * k + i).nonzero(1), upos)
            if s.rng.random() < 0.3:
                ui = ui + pi  # a pi-dependent unit of the local ring
            entries.append(1 + ui * pi ** mi)
            total += mi
        if any((e - 1).is_zero() or e.is_zero() for e in entries):
            continue
        sym = milnorfield.FieldSymbol(ctx, entries, s.rng.choice([1, -1]))
        if sum(v.ord(e - 1) for e in entries) < m:
            continue
        pairs = milnorfield.rewrite_filtration(sym, m, upos)
        for w, res in pairs:
            if v.ord(w - 1) < m:
                return _prop("filtration-ord-bound", k, repr((sym, w)))
            for e in res.entries:
                if v.ord(e) != 0:
                    return _prop("filtration-unit-residuals", k, repr((sym, res)))
        recombined = [milnorfield.FieldSymbol(ctx, (w,) + res.entries, res.coef)
                      for w, res in pairs]
        diff = recombined + [sym.scale(-1)]
        if not milnorfield.dlog_realization(diff).is_zero():
            return _prop("filtration-dlog-agreement", k, repr(sym))
        tdiff = []
        for t in diff:
            tdiff.extend(milnorfield.tame_symbol(v, t))
        if tdiff:
            ok, _ = milnorfield._zero_by_realizations(tdiff, depth=base.r)
            if not ok:
                return _prop("filtration-tame-agreement", k, repr(sym))
        done += 1
    return _prop("filtration-rewriting", done)


def suite_rewriting(seed=0, trials=None, names=("x", "y")):
    t0 = time.time()
    trials = trials or 50
    props = [check_elem_identity(names, seed, trials),
             check_rewrite_filtration(names, seed + 1, trials)]
    return _report("rewriting", props, seed, time.time() - t0)


SUITES = {
    "witt": suite_witt,
    "drw": suite_drw,
    "relmilnor": suite_relmilnor,
    "reciprocity": suite_reciprocity,
    "cycle-iso": suite_cycle_iso,
    "rewriting": suite_rewriting,
}


def run_suite(name, seed=0, trials=None, names=("x", "y")):
    if name == "all":
        reports = [fn(seed, trials, names) for fn in SUITES.values()]
        return {"suite": "all", "ok": all(r["ok"] for r in reports),
                "reports": reports}
    if name not in SUITES:
        raise ValueError("unknown suite %r" % name)
    return SUITES[name](seed, trials, names)
