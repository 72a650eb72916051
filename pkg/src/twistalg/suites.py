"""Built-in verification suites.

Every check is a module-level function taking a :class:`SuiteContext` and
returning an :class:`Outcome`; checks are addressed by dotted names so
they can be dispatched to worker processes.  Expensive constructions are
memoised per process and per cocycle.
"""

from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from . import adhm as ad
from .algebra import Hom, NotCertified
from .calculus import (basic_projector_forms, c4_calculus, calculus_relation_table,
                       curvature, radius_calculus, radius_reducer, s4_calculus)
from .cocycle import CocycleData, box_triples, eta_matrix, printed_eta, tau_degrees
from .hopf import (TAU, BraidedMatrixBialgebra, Cobosonisation, aname, cofactor, grouplike,
                   verify_coinvariance_spL)
from .matrixalg import NcMatrix, mat_mul
from .scalars import GaussianRational, PhaseScalar
from .spheres import (ProjectorError, alpha_beta_x, basic_projector, build_sphere,
                      charge_one_parameter_space, coacted_projector, delta_u_gauge_check,
                      s4_inclusion, sl_family_sphere)

PASS, FAIL, NOT_CERTIFIED, ERROR = "pass", "fail", "not-certified", "error"


@dataclass(frozen=True)
class SuiteContext:
    theta: Tuple[Tuple[str, ...], ...] = (("0", "1/2"), ("-1/2", "0"))
    convention: str = "flip"
    classical: bool = False
    charge: int = 1
    exps: Tuple[int, int] = (0, 1)
    reading: str = ad.MONAD

    @property
    def F(self) -> CocycleData:
        return _cocycle(self.theta, self.convention, self.classical)


@functools.lru_cache(maxsize=None)
def _cocycle(theta, convention, classical) -> CocycleData:
    if classical:
        return CocycleData.classical(len(theta))
    return CocycleData(theta, convention)


@dataclass
class Outcome:
    status: str
    residual: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.status == PASS


def _verdict(ok: bool, residual: str = "") -> Outcome:
    return Outcome(PASS) if ok else Outcome(FAIL, residual or "check failed")


def _report(rep) -> Outcome:
    return _verdict(rep.ok, "; ".join(rep.failures[:3]))


# -- memoised constructions ---------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _s7(F):
    return build_sphere("S7", F)


@functools.lru_cache(maxsize=None)
def _family(F, which):
    if which == "SL_cobos":
        return coacted_projector(sl_family_sphere(F), which)
    return coacted_projector(_s7(F), which)


@functools.lru_cache(maxsize=None)
def _bialgebra(F, kind):
    return BraidedMatrixBialgebra(F, kind)


@functools.lru_cache(maxsize=None)
def _cobos(F):
    return Cobosonisation(BraidedMatrixBialgebra(F, "SL"))


@functools.lru_cache(maxsize=None)
def _monad(k, F, reading):
    MA = ad.build_monad_algebra(k, F, reading)
    return MA, ad.braided_with_c4(MA)


# -- cocycle -----------------------------------------------------------------------

def cocycle_conditions(ctx: SuiteContext) -> Outcome:
    from .cocycle import verify_cocycle_condition
    return _report(verify_cocycle_condition(ctx.F, box_triples(ctx.F.n)))


def cocycle_eta(ctx: SuiteContext) -> Outcome:
    F = ctx.F
    got = eta_matrix(F)
    want = printed_eta(F.params)
    if F.convention == "verbatim":
        want = [[x.star() for x in row] for row in want]
    bad = [(i + 1, j + 1) for i in range(4) for j in range(4) if got[i][j] != want[i][j]]
    return _verdict(not bad, f"entries differ: {bad}")


# -- spheres -------------------------------------------------------------------------

def _expected_z_phase(eta, x: str, y: str) -> PhaseScalar:
    j, l = int(x[1]), int(y[1])
    xs, ys = x.endswith("s"), y.endswith("s")
    return eta[l - 1][j - 1] if xs == ys else eta[j - 1][l - 1]


def sphere7_relations(ctx: SuiteContext) -> Outcome:
    F = ctx.F
    A = _s7(F).alg
    eta = printed_eta(F.params)
    names = [f"z{j}{s}" for j in range(1, 5) for s in ("", "s")]
    bad = []
    for x in names:
        for y in names:
            if A.gen(x) * A.gen(y) != (A.gen(y) * A.gen(x)).scale(_expected_z_phase(eta, x, y)):
                bad.append((x, y))
    return _verdict(not bad, f"{len(bad)} of 64 pairs differ, first {bad[:2]}")


def sphere7_projector(ctx: SuiteContext) -> Outcome:
    try:
        basic_projector(_s7(ctx.F))
    except ProjectorError as exc:
        return Outcome(FAIL, str(exc))
    return Outcome(PASS)


def _s4_relations_hold(a, b, x, lam) -> List[str]:
    bad = []
    pairs = {"alpha beta = lambda beta alpha": (a * b, b * a),
             "alpha* beta* = lambda beta* alpha*": (a.star() * b.star(), b.star() * a.star()),
             "beta* alpha = lambda alpha beta*": (b.star() * a, a * b.star()),
             "beta alpha* = lambda alpha* beta": (b * a.star(), a.star() * b)}
    for name, (lhs, rhs) in pairs.items():
        if lhs != rhs.scale(lam):
            bad.append(name)
    for y in (a, b, a.star(), b.star()):
        if x * y != y * x:
            bad.append("x central")
            break
    return bad


def sphere4_relations(ctx: SuiteContext) -> Outcome:
    F = ctx.F
    S4 = build_sphere("S4", F).alg
    lam = F.params.lam()
    bad = _s4_relations_hold(S4.gen("alpha"), S4.gen("beta"), S4.gen("x"), lam)
    abx = alpha_beta_x(_s7(F).alg)
    bad += ["in S7: " + b for b in _s4_relations_hold(abx["alpha"], abx["beta"], abx["x"], lam)]
    return _verdict(not bad, ", ".join(bad))


def sphere4_inclusion(ctx: SuiteContext) -> Outcome:
    F = ctx.F
    S4 = build_sphere("S4", F)
    inc = s4_inclusion(S4, _s7(F))
    names = [g.name for g in S4.alg.gens]
    bad = [(a, b) for a in names for b in names
           if inc(S4.alg.gen(a) * S4.alg.gen(b)) != inc(S4.alg.gen(a)) * inc(S4.alg.gen(b))]
    rel_ok = all(inc(r).is_zero() for r in S4.alg.relations)
    return _verdict(not bad and rel_ok, f"not multiplicative on {bad[:2]}" if bad else "quadric not mapped to 0")


# -- basic instanton -----------------------------------------------------------------

def instanton_torus_gauge(ctx: SuiteContext) -> Outcome:
    fam = _family(ctx.F, "H_F")
    return _verdict(fam.checks["gauge"] and fam.checks["p_gauge"], str(fam.checks))


def instanton_curvature(ctx: SuiteContext) -> Outcome:
    D = radius_calculus(ctx.F)
    red = radius_reducer(D)
    _, _, p = basic_projector_forms(D)
    dp = D.d_matrix(p)
    pdpp = mat_mul(mat_mul(p, dp), p).map(red, D.alg)
    return _verdict(pdpp.is_zero(), "p dp p != 0")


# -- braided bialgebra and cobosonisation ------------------------------------------------

def bialgebra_homomorphism(ctx: SuiteContext) -> Outcome:
    return _report(_bialgebra(ctx.F, "M").verify_bialgebra())


def bialgebra_coassociativity(ctx: SuiteContext) -> Outcome:
    return _report(_bialgebra(ctx.F, "M").verify_coassociativity())


def cobos_cross_coproduct(ctx: SuiteContext) -> Outcome:
    C = _cobos(ctx.F)
    bad = []
    for h in [(0, 0), (1, 0), (0, -1), (1, 1)]:
        for i in range(1, 5):
            for j in range(1, 5):
                x = C.A(i, j) * grouplike(C.alg, h)
                if C.delta(x) != C.cross_coproduct_formula(i, j, h):
                    bad.append((i, j, h))
    return _verdict(not bad, f"formula differs on {bad[:3]}")


def cobos_laws(ctx: SuiteContext) -> Outcome:
    return _report(_cobos(ctx.F).verify())


def cobos_coinvariants(ctx: SuiteContext) -> Outcome:
    C = _cobos(ctx.F)
    base = all(C.is_H_coinvariant(C.A(i, j)) for i in range(1, 5) for j in range(1, 5))
    torus = not any(C.is_H_coinvariant(C.alg.gen(t)) for t in TAU)
    return _verdict(base and torus, f"base generators coinvariant: {base}; torus excluded: {torus}")


# -- charge one -------------------------------------------------------------------------

def gauge_sp(ctx: SuiteContext) -> Outcome:
    fam = _family(ctx.F, "Sp_cobos")
    return _verdict(all(fam.checks.values()), str(fam.checks))


def gauge_isometry(ctx: SuiteContext) -> Outcome:
    fam = _family(ctx.F, "SL_cobos")
    return _verdict(all(fam.checks.values()), str(fam.checks))


def gauge_delta_u(ctx: SuiteContext) -> Outcome:
    tau = tau_degrees()
    rep = delta_u_gauge_check(tau, ctx.F, family=_family(ctx.F, "SL_cobos"))
    return _verdict(rep["ok"], f"mismatched entries {rep['mismatched_entries']}")


SPL_SAMPLES = [(1, 3, (1, 0)), (1, 1, (0, 0)), (2, 4, (0, -1)), (3, 2, (1, 1))]


def coinvariants_spl(ctx: SuiteContext) -> Outcome:
    return _report(verify_coinvariance_spL(SPL_SAMPLES, ctx.F))


CHARGE_ONE_POINTS = [(0, 0), (0, 1), (1, 0), (2, -1)]


def _quadric(ctx: SuiteContext, r1: int, r2: int) -> Outcome:
    rep = charge_one_parameter_space(r1, r2, ctx.F)
    want_comm = (r2 == r1 + 1) or ctx.F.params.trivial
    bad = [k for k, v in rep.relations.items() if not v]
    if not rep.quadric:
        bad.append("quadric")
    if not rep.matrix_pattern:
        bad.append("matrix pattern")
    if rep.commutative != want_comm:
        bad.append(f"commutative={rep.commutative}, expected {want_comm}")
    return _verdict(not bad, "; ".join(bad) + f" (engine g1 g2 exponent {rep.nu_exponent})")


def _quadric_check(r1, r2):
    def check(ctx: SuiteContext) -> Outcome:
        return _quadric(ctx, r1, r2)
    check.__name__ = f"quadric_{r1}_{r2}"
    return check


# -- calculus ----------------------------------------------------------------------------

def calculus_c4_relations(ctx: SuiteContext) -> Outcome:
    tab = calculus_relation_table(c4_calculus(ctx.F))
    bad = [k for k, v in tab.items() if not v]
    return _verdict(not bad and len(tab) == 64, f"failing pairs {bad[:3]}")


def calculus_s4_relations(ctx: SuiteContext) -> Outcome:
    tab = calculus_relation_table(s4_calculus(ctx.F))
    bad = [k for k, v in tab.items() if not v]
    return _verdict(not bad, f"failing pairs {bad[:3]}")


def calculus_d_squared(ctx: SuiteContext) -> Outcome:
    D = c4_calculus(ctx.F)
    A = D.alg
    base = [A.gen(g.name) for g in D.base.gens]
    elts = base + [x * y for x in base for y in base] + [D.d(x) * y for x in base for y in base]
    bad = [e.render() for e in elts if not D.d(D.d(e)).is_zero()]
    return _verdict(not bad, f"d^2 != 0 on {bad[:1]}")


def calculus_leibniz(ctx: SuiteContext) -> Outcome:
    D = c4_calculus(ctx.F)
    A = D.alg
    base = [A.gen(g.name) for g in D.base.gens]
    forms = base + [D.d(x) for x in base]
    bad = []
    for x in forms:
        for y in forms:
            deg = D.form_degree(x)
            want = D.d(x) * y + (x * D.d(y)).scale(PhaseScalar.coerce((-1) ** deg))
            if D.d(x * y) != want:
                bad.append((x.render(), y.render()))
    return _verdict(not bad, f"Leibniz fails on {bad[:1]}")


def calculus_pdpp(ctx: SuiteContext) -> Outcome:
    return instanton_curvature(ctx)


# -- classical oracles -------------------------------------------------------------------

def _classical_ctx(ctx: SuiteContext) -> SuiteContext:
    return SuiteContext(ctx.theta, ctx.convention, True, ctx.charge, ctx.exps, ctx.reading)


def classical_degenerations(ctx: SuiteContext) -> Outcome:
    """At zeta = 1 the suites still pass and every generator pair commutes."""
    c = _classical_ctx(ctx)
    F = c.F
    bad = []
    A = _s7(F).alg
    if any(A.gen(x.name) * A.gen(y.name) != A.gen(y.name) * A.gen(x.name)
           for x in A.gens for y in A.gens):
        bad.append("S7 not commutative")
    for nm, fn in [("sphere7.relations", sphere7_relations), ("sphere7.projector", sphere7_projector),
                   ("sphere4.relations", sphere4_relations), ("instanton.curvature", instanton_curvature),
                   ("gauge.sp", gauge_sp), ("calculus.c4-relations", calculus_c4_relations)]:
        if not fn(c).ok:
            bad.append(nm)
    B = _bialgebra(F, "M")
    pairs = [(g.name, h.name) for g, h in itertools.islice(itertools.product(B.alg.gens, B.alg.gens), 0, 256, 17)]
    if not B.verify_bialgebra(pairs).ok:
        bad.append("bialgebra")
    for r1, r2 in CHARGE_ONE_POINTS:
        rep = charge_one_parameter_space(r1, r2, F)
        if not (rep.ok and rep.commutative):
            bad.append(f"charge one {r1},{r2}")
    for k in (1, 2):
        if not ad.classical_limit_check(k).ok:
            bad.append(f"adhm classical limit k={k}")
    return _verdict(not bad, ", ".join(bad))


def _quaternionic_matrix(rng: random.Random) -> Dict[Tuple[int, int], GaussianRational]:
    """A 4x4 Gaussian-rational matrix with conj(A_ij) = eps_i eps_j A_i'j'."""
    eps = (1, -1, 1, -1)
    partner = (1, 0, 3, 2)
    out = {}
    for i in (0, 2):
        for j in range(4):
            v = GaussianRational(rng.randint(-5, 5), rng.randint(-5, 5))
            out[(i, j)] = v
            ip, jp = partner[i], partner[j]
            out[(ip, jp)] = v.conj() * (eps[i] * eps[j])
    return out


def _numeric_det(m: Dict[Tuple[int, int], GaussianRational]) -> GaussianRational:
    total = GaussianRational(0)
    for perm in itertools.permutations(range(4)):
        sign = 1
        for a in range(4):
            for b in range(a + 1, 4):
                if perm[a] > perm[b]:
                    sign = -sign
        term = GaussianRational(sign)
        for r in range(4):
            term = term * m[(r, perm[r])]
        total = total + term
    return total


def _evaluate(e, values: Dict[str, GaussianRational]) -> GaussianRational:
    total = GaussianRational(0)
    for names, c in e.at_one().items():
        term = c
        for n in names:
            term = term * values[n]
        total = total + term
    return total


def classical_adjugate(ctx: SuiteContext, samples: int = 10, seed: int = 20240611) -> Outcome:
    """sum_j S(A)_ij A_jk = det(A) delta_ik at zeta = 1 for random quaternionic matrices."""
    B = _bialgebra(ctx.F, "SL")
    rng = random.Random(seed)
    adj = {(i, j): cofactor(B.alg, i, j) for i in range(1, 5) for j in range(1, 5)}
    for s in range(samples):
        m = _quaternionic_matrix(rng)
        vals = {aname(i + 1, j + 1): m[(i, j)] for i in range(4) for j in range(4)}
        det = _numeric_det(m)
        for i in range(1, 5):
            for k in range(1, 5):
                tot = GaussianRational(0)
                for j in range(1, 5):
                    tot = tot + _evaluate(adj[(i, j)], vals) * m[(j - 1, k - 1)]
                want = det if i == k else GaussianRational(0)
                if tot != want:
                    return Outcome(FAIL, f"sample {s}: entry ({i},{k}) = {tot.render()}, det {det.render()}")
    return Outcome(PASS)


# -- ADHM ----------------------------------------------------------------------------------

def _adhm(ctx: SuiteContext):
    return _monad(ctx.charge, ctx.F, ctx.reading)


def adhm_classical_limit(ctx: SuiteContext) -> Outcome:
    cl = ad.classical_limit_check(ctx.charge, ctx.reading)
    return _verdict(cl.ok, f"deformed in classical: {cl.deformed_in_classical}, "
                           f"classical in deformed: {cl.classical_in_deformed}")


def adhm_commutation(ctx: SuiteContext) -> Outcome:
    MA, _ = _adhm(ctx)
    bad = [(j, l) for j in range(1, 5) for l in range(1, 5) if not ad.commutation_check(MA, j, l)]
    return _verdict(not bad, f"pairs {bad}")


def _condition(key):
    def check(ctx: SuiteContext) -> Outcome:
        MA, T = _adhm(ctx)
        rep = _monad_report(ctx.charge, ctx.F, ctx.reading)
        c = rep.conditions[key]
        if c.ok:
            return Outcome(PASS)
        status = FAIL if key == "c" else NOT_CERTIFIED
        return Outcome(status, f"entries {c.failures[:4]}: " + (c.residual.render()[:200] if c.residual else ""))
    check.__name__ = f"adhm_condition_{key}"
    return check


@functools.lru_cache(maxsize=None)
def _monad_report(k, F, reading):
    MA, T = _monad(k, F, reading)
    return ad.verify_monad_conditions(MA, T)


def adhm_projector(ctx: SuiteContext) -> Outcome:
    MA, T = _adhm(ctx)
    pr = ad.adhm_projector(MA, T)
    comp = (pr.P + pr.Q) == NcMatrix.identity(pr.Q.alg, pr.Q.rows)
    return _verdict(pr.ok and comp, f"gram {pr.gram.ok} ({pr.gram.failures[:3]}), rho2 self-adjoint "
                                    f"{pr.rho2_selfadjoint}, explicit {pr.explicit}")


def adhm_beta(ctx: SuiteContext) -> Outcome:
    MA, T = _adhm(ctx)
    chk = ad.beta_checks(ad.beta_map(MA, T))
    return _verdict(all(chk.values()), str(chk))


def adhm_coinvariants(ctx: SuiteContext) -> Outcome:
    MA, _ = _adhm(ctx)
    bad = []
    for r1, r2 in sorted({(0, 1), (0, 0), tuple(ctx.exps)}):
        rep = ad.adhm_coinvariants(MA, r1, r2)
        if not rep.ok:
            bad.append(f"({r1},{r2}) phases_match={rep.phases_match} commutative={rep.commutative}")
    return _verdict(not bad, "; ".join(bad))


def adhm_basic_point(ctx: SuiteContext) -> Outcome:
    MA, T = _monad(1, CocycleData.classical(), ctx.reading)
    out = ad.classical_basic_point(MA, T)
    return _verdict(all(out.values()), str(out))


# -- registry ------------------------------------------------------------------------------

CHECKS: Dict[str, Callable[[SuiteContext], Outcome]] = {
    "cocycle.conditions": cocycle_conditions,
    "cocycle.eta": cocycle_eta,
    "sphere7.relations": sphere7_relations,
    "sphere7.projector": sphere7_projector,
    "sphere4.relations": sphere4_relations,
    "sphere4.inclusion": sphere4_inclusion,
    "instanton.torus-gauge": instanton_torus_gauge,
    "instanton.curvature": instanton_curvature,
    "bialgebra.homomorphism": bialgebra_homomorphism,
    "bialgebra.coassociativity": bialgebra_coassociativity,
    "cobos.cross-coproduct": cobos_cross_coproduct,
    "cobos.laws": cobos_laws,
    "cobos.coinvariants": cobos_coinvariants,
    "gauge.sp": gauge_sp,
    "gauge.isometry": gauge_isometry,
    "gauge.delta-u": gauge_delta_u,
    "coinvariants.spL": coinvariants_spl,
    "calculus.c4-relations": calculus_c4_relations,
    "calculus.s4-relations": calculus_s4_relations,
    "calculus.d-squared": calculus_d_squared,
    "calculus.leibniz": calculus_leibniz,
    "calculus.pdpp": calculus_pdpp,
    "classical.degenerations": classical_degenerations,
    "classical.adjugate": classical_adjugate,
}
for _r1, _r2 in CHARGE_ONE_POINTS:
    CHECKS[f"quadric.{_r1}_{_r2}"] = _quadric_check(_r1, _r2)

ADHM_CHECKS: Dict[str, Callable[[SuiteContext], Outcome]] = {
    "classical-limit": adhm_classical_limit,
    "commutation": adhm_commutation,
    "sigmaJ-sigma": _condition("a"),
    "sigmaJ-sigmaJ": _condition("b"),
    "rho2-central": _condition("c"),
    "projector": adhm_projector,
    "beta": adhm_beta,
    "coinvariants": adhm_coinvariants,
}

_CORE_PREFIXES = ("cocycle.", "sphere7.", "sphere4.", "instanton.", "bialgebra.", "cobos.",
                  "gauge.", "coinvariants.", "quadric.", "calculus.", "classical.")

SUITES: Dict[str, List[str]] = {
    "cocycle": [n for n in CHECKS if n.startswith("cocycle.")],
    "sphere7": [n for n in CHECKS if n.startswith("sphere7.")],
    "sphere4": [n for n in CHECKS if n.startswith("sphere4.")],
    "basic-instanton": ["sphere7.projector", "instanton.torus-gauge", "instanton.curvature"],
    "bialgebra": [n for n in CHECKS if n.startswith(("bialgebra.", "cobos."))],
    "charge-one": ["gauge.sp", "gauge.isometry", "gauge.delta-u", "coinvariants.spL"]
                  + [n for n in CHECKS if n.startswith("quadric.")],
    "calculus": [n for n in CHECKS if n.startswith("calculus.")],
    "classical": [n for n in CHECKS if n.startswith("classical.")],
    "paper-core": [n for n in CHECKS if n.startswith(_CORE_PREFIXES)],
    "adhm": [],
}


def adhm_check_names(charge: int) -> List[str]:
    out = []
    for k in range(1, charge + 1):
        out += [f"adhm.k{k}.{n}" for n in ADHM_CHECKS]
    if charge >= 1:
        out.append("adhm.k1.basic-point")
    return out


def suite_checks(name: str, charge: int = 1, u: Optional[Tuple[int, int]] = None) -> List[str]:
    """Check names of a suite; ``u`` restricts charge-one to a single point."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    if name == "adhm":
        return adhm_check_names(charge)
    if name == "charge-one" and u is not None:
        return [n for n in SUITES[name] if not n.startswith("quadric.")] + [f"quadric.{u[0]}_{u[1]}"]
    return list(SUITES[name])


def run_named(name: str, ctx: SuiteContext) -> Outcome:
    """Run one check by dotted name; exceptions become error outcomes."""
    try:
        if name.startswith("adhm."):
            _, kk, rest = name.split(".", 2)
            sub = SuiteContext(ctx.theta, ctx.convention, ctx.classical, int(kk[1:]), ctx.exps,
                               ctx.reading)
            if rest == "basic-point":
                return adhm_basic_point(sub)
            return ADHM_CHECKS[rest](sub)
        if name not in CHECKS and name.startswith("quadric."):
            r1, r2 = (int(x) for x in name[len("quadric."):].split("_"))
            return _quadric(ctx, r1, r2)
        return CHECKS[name](ctx)
    except NotCertified as exc:
        return Outcome(NOT_CERTIFIED, str(exc))
    except (ProjectorError, AssertionError, ValueError, KeyError) as exc:
        return Outcome(ERROR, f"{type(exc).__name__}: {exc}")
