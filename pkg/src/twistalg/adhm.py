"""Deformed ADHM data of charge k.

The monad algebra is generated by the entries M^j_ab (j = 1..4,
a = 1..2k+2, b = 1..k) and their stars, with M^j of torus degree -tau_j.
The second family of monad matrices is eliminated through the reality
structure N^1 = -M^2^dag, N^2 = M^1^dag, N^3 = -M^4^dag, N^4 = M^3^dag,
where (M^dag)_ab = (M_ba)^*.  Commutation between generators is produced
by the engine's swap rule; the quadratic monad relations are kept as a
star-closed relation span and used for certification only.

Three readings of the deformed quadratic relations are available:

``literal``   sum_r N^j_dr M^l_rb + eta_jl N^l_br M^j_rd
``symmetric`` sum_r N^j_dr M^l_rb + eta_jl N^l_dr M^j_rb
``monad``     sum_r N^j_dr M^l_rb + eta_lj N^l_dr M^j_rb

with eta the engine's matrix.  The first two agree for k = 1; only the
last two reduce to the classical relations for k >= 2 (see
:func:`classical_limit_check`).  The ``monad`` reading is the default:
its relations are exactly the z-word coefficients of sigma_J^* sigma_z
computed in the braided tensor product with C^4.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import (AlgebraPresentation, DegreeTooHigh, Generator, Hom, NcElement,
                      NotCertified, PresentationError, ideal_member, tensor)
from .cocycle import CocycleData, dneg, dscale, eta_matrix, tau_degrees
from .hopf import TAU, CoactionSpec, coinvariants_grouplike, grouplike, torus_algebra
from .matrixalg import NcMatrix, clear_central_inverse, mat_mul
from .scalars import PhaseScalar
from .spheres import _z_gens, phase_ratio, u_matrix

LITERAL = "literal"
SYMMETRIC = "symmetric"
MONAD = "monad"
READINGS = (LITERAL, SYMMETRIC, MONAD)

MAX_CHARGE = 3

# N^j = sign * (M^partner)^dag
_REALITY = {1: (-1, 2), 2: (1, 1), 3: (-1, 4), 4: (1, 3)}


def classical_cocycle(n: int = 2) -> CocycleData:
    return CocycleData.classical(n)


def mname(j: int, a: int, b: int, star: bool = False) -> str:
    return f"M{j}_{a}_{b}" + ("s" if star else "")


@dataclass
class MonadAlgebra:
    k: int
    alg: AlgebraPresentation
    reading: str
    raw_relations: List[NcElement] = field(default_factory=list)

    @property
    def cocycle(self) -> CocycleData:
        return self.alg.cocycle

    @property
    def rows(self) -> int:
        return 2 * self.k + 2

    @property
    def relations(self) -> List[NcElement]:
        return self.alg.relations

    def M(self, j: int, a: int, b: int) -> NcElement:
        return self.alg.gen(mname(j, a, b))

    def N(self, j: int, b: int, a: int) -> NcElement:
        """Entry (b, a) of the k x (2k+2) matrix N^j."""
        sign, p = _REALITY[j]
        x = self.alg.gen(mname(p, a, b, True))
        return x if sign > 0 else -x


def _monad_gens(k: int) -> List[Generator]:
    tau = tau_degrees()
    gens = []
    for j in range(1, 5):
        for a in range(1, 2 * k + 3):
            for b in range(1, k + 1):
                d = dneg(tau[j - 1])
                gens.append(Generator(mname(j, a, b), d, mname(j, a, b, True)))
                gens.append(Generator(mname(j, a, b, True), tau[j - 1], mname(j, a, b)))
    return gens


def _bare_monad(k: int, F: CocycleData) -> MonadAlgebra:
    if k < 1:
        raise ValueError("charge must be positive")
    A = AlgebraPresentation(_monad_gens(k), F, name=f"M(k={k})")
    return MonadAlgebra(k, A, "")


def deformed_relations(MA: MonadAlgebra, reading: str) -> List[NcElement]:
    """One relation per (j <= l, b, d); the (l, j) ones are proportional."""
    if reading not in READINGS:
        raise ValueError(f"unknown reading {reading!r}")
    eta = eta_matrix(MA.cocycle)
    k, R = MA.k, MA.rows
    A = MA.alg
    out = []
    for j in range(1, 5):
        for l in range(j, 5):
            e = eta[l - 1][j - 1] if reading == MONAD else eta[j - 1][l - 1]
            for b in range(1, k + 1):
                for d in range(1, k + 1):
                    acc = A.zero()
                    for r in range(1, R + 1):
                        acc = acc + MA.N(j, d, r) * MA.M(l, r, b)
                        if reading == LITERAL:
                            acc = acc + (MA.N(l, b, r) * MA.M(j, r, d)).scale(e)
                        else:
                            acc = acc + (MA.N(l, d, r) * MA.M(j, r, b)).scale(e)
                    if not acc.is_zero():
                        out.append(acc)
    return out


def classical_relations(MA: MonadAlgebra) -> List[NcElement]:
    """sum_b N^j_cb M^l_bd + N^l_cb M^j_bd for j <= l and c, d = 1..k."""
    k, R = MA.k, MA.rows
    A = MA.alg
    out = []
    for j in range(1, 5):
        for l in range(j, 5):
            for c in range(1, k + 1):
                for d in range(1, k + 1):
                    acc = A.zero()
                    for b in range(1, R + 1):
                        acc = acc + MA.N(j, c, b) * MA.M(l, b, d) + MA.N(l, c, b) * MA.M(j, b, d)
                    if not acc.is_zero():
                        out.append(acc)
    return out


def _dedupe(rels: Sequence[NcElement]) -> List[NcElement]:
    """Drop relations proportional (by a monomial phase or -1) to an earlier one."""
    out: List[NcElement] = []
    for r in rels:
        if any(_proportional(r, s) for s in out):
            continue
        out.append(r)
    return out


def _proportional(a: NcElement, b: NcElement) -> bool:
    if set(a.terms) != set(b.terms):
        return False
    w = next(iter(b.terms))
    ratio = a.terms[w] * b.terms[w].inverse() if b.terms[w].is_monomial() else None
    if ratio is None:
        return False
    return a == b.scale(ratio)


def build_monad_algebra(k: int, F: Optional[CocycleData] = None,
                        reading: str = MONAD) -> MonadAlgebra:
    """Generators, swap-rule commutation and the star-closed quadratic relations."""
    F = F or CocycleData.standard()
    MA = _bare_monad(k, F)
    MA.reading = reading
    MA.raw_relations = _dedupe(deformed_relations(MA, reading))
    closed = list(MA.raw_relations)
    for r in MA.raw_relations:
        s = r.star()
        if not any(_proportional(s, t) for t in closed):
            closed.append(s)
    MA.alg.relations.extend(closed)
    return MA


def commutation_check(MA: MonadAlgebra, j: int, l: int) -> bool:
    """M^j_ab M^l_cd == eta_lj M^l_cd M^j_ab for all index pairs."""
    e = eta_matrix(MA.cocycle)[l - 1][j - 1]
    for a in range(1, MA.rows + 1):
        for b in range(1, MA.k + 1):
            for c in range(1, MA.rows + 1):
                for d in range(1, MA.k + 1):
                    x, y = MA.M(j, a, b), MA.M(l, c, d)
                    if x * y != (y * x).scale(e):
                        return False
    return True


def _span_contains(A: AlgebraPresentation, rels, targets) -> bool:
    for t in targets:
        try:
            ideal_member(A, t, rels)
        except NotCertified:
            return False
    return True


@dataclass
class ClassicalLimit:
    k: int
    reading: str
    deformed_in_classical: bool
    classical_in_deformed: bool

    @property
    def ok(self) -> bool:
        return self.deformed_in_classical and self.classical_in_deformed


def classical_limit_check(k: int, reading: str = MONAD) -> ClassicalLimit:
    """Compare the spans of the deformed relations at zeta = 1 and the classical ones."""
    MA = _bare_monad(k, classical_cocycle())
    dr = _dedupe(deformed_relations(MA, reading))
    cr = _dedupe(classical_relations(MA))
    return ClassicalLimit(k, reading, _span_contains(MA.alg, cr, dr), _span_contains(MA.alg, dr, cr))


# -- sigma matrices and the monad conditions ---------------------------------------

@dataclass
class AdhmTensor:
    """MA braided with C^4, with the two inclusions."""

    monad: MonadAlgebra
    alg: AlgebraPresentation
    inc_m: Hom
    inc_z: Hom


def braided_with_c4(MA: MonadAlgebra) -> AdhmTensor:
    C4 = AlgebraPresentation(_z_gens(), MA.cocycle, name="C4")
    T, i1, i2 = tensor(MA.alg, C4, braided=True, name=f"{MA.alg.name}(x)C4")
    return AdhmTensor(MA, T, i1, i2)


def sigma_matrices(MA: MonadAlgebra, T: Optional[AdhmTensor] = None) -> Tuple[NcMatrix, NcMatrix]:
    """sigma_z = sum_j M^j z_j and sigma_J(z) = -M^1 z2* + M^2 z1* - M^3 z4* + M^4 z3*."""
    T = T or braided_with_c4(MA)
    A = T.alg
    jz = {1: (-1, "z2s"), 2: (1, "z1s"), 3: (-1, "z4s"), 4: (1, "z3s")}
    sz, sj = [], []
    for a in range(1, MA.rows + 1):
        rz, rj = [], []
        for b in range(1, MA.k + 1):
            ez, ej = A.zero(), A.zero()
            for j in range(1, 5):
                m = A.gen(mname(j, a, b))
                ez = ez + m * A.gen(f"z{j}")
                sign, w = jz[j]
                ej = ej + (m * A.gen(w) if sign > 0 else -(m * A.gen(w)))
            rz.append(ez)
            rj.append(ej)
        sz.append(rz)
        sj.append(rj)
    return NcMatrix(A, sz), NcMatrix(A, sj)


@dataclass
class ConditionResult:
    name: str
    ok: bool
    checked: int
    failures: List[Tuple[int, int]] = field(default_factory=list)
    residual: Optional[NcElement] = None
    millis: int = 0


def _certify_matrix(name: str, X: NcMatrix, rels) -> ConditionResult:
    t0 = time.perf_counter()
    res = ConditionResult(name, True, 0)
    for i in range(X.rows):
        for j in range(X.cols):
            res.checked += 1
            e = X[i, j]
            if e.is_zero():
                continue
            try:
                ideal_member(X.alg, e, rels)
            except (NotCertified, DegreeTooHigh) as exc:
                res.ok = False
                res.failures.append((i + 1, j + 1))
                if res.residual is None:
                    res.residual = getattr(exc, "residual", None) or e
    res.millis = int(1000 * (time.perf_counter() - t0))
    return res


@dataclass
class MonadReport:
    k: int
    reading: str
    conditions: Dict[str, ConditionResult]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.conditions.values())


def rho_squared(sz: NcMatrix) -> NcMatrix:
    return mat_mul(sz.adjoint(), sz)


def centrality_check(sz: NcMatrix) -> ConditionResult:
    """[(rho^2)_mn, (sigma_z)_ab] == 0 in the free phase algebra."""
    t0 = time.perf_counter()
    rho2 = rho_squared(sz)
    res = ConditionResult("rho2 central", True, 0)
    for m in range(rho2.rows):
        for n in range(rho2.cols):
            for a in range(sz.rows):
                for b in range(sz.cols):
                    res.checked += 1
                    c = sz.alg.commutator(rho2[m, n], sz[a, b])
                    if not c.is_zero():
                        res.ok = False
                        res.failures.append((m + 1, n + 1))
                        if res.residual is None:
                            res.residual = c
    res.millis = int(1000 * (time.perf_counter() - t0))
    return res


def verify_monad_conditions(MA: MonadAlgebra, T: Optional[AdhmTensor] = None) -> MonadReport:
    """(a) sigma_J^* sigma_z, (b) sigma_J^* sigma_J - sigma_z^* sigma_z, (c) rho^2 centrality."""
    T = T or braided_with_c4(MA)
    sz, sj = sigma_matrices(MA, T)
    rels = T.alg.relations
    a = _certify_matrix("sigmaJ* sigma", mat_mul(sj.adjoint(), sz), rels)
    b = _certify_matrix("sigmaJ* sigmaJ - sigma* sigma",
                        mat_mul(sj.adjoint(), sj) - mat_mul(sz.adjoint(), sz), rels)
    c = centrality_check(sz)
    return MonadReport(MA.k, MA.reading, {"a": a, "b": b, "c": c})


# -- the projector ---------------------------------------------------------------

@dataclass
class AdhmProjector:
    V: NcMatrix
    Q: NcMatrix
    P: NcMatrix
    gram: ConditionResult
    rho2_selfadjoint: bool
    explicit: Optional[bool]

    @property
    def ok(self) -> bool:
        return self.gram.ok and self.rho2_selfadjoint and self.explicit is not False


def _rho_inverse_tensor(T: AdhmTensor, k: int) -> AlgebraPresentation:
    """T with formal central letters w_mn standing for the entries of rho^-2."""
    extra = []
    for m in range(1, k + 1):
        for n in range(1, k + 1):
            extra.append(Generator(f"w{m}{n}", (0,) * T.alg.cocycle.n, f"w{n}{m}", central=True))
    return AlgebraPresentation(extra + list(T.alg.gens), T.alg.cocycle, T.alg.plain_pairs,
                               name=T.alg.name + "[rho^-2]")


def adhm_projector(MA: MonadAlgebra, T: Optional[AdhmTensor] = None,
                   explicit: Optional[bool] = None) -> AdhmProjector:
    """V = (sigma_z sigma_J), Q = V rho^-2 V^*, P = 1 - Q.

    Q^2 = Q = Q^* follows once V^*V = diag(rho^2, rho^2) modulo the
    relations and rho^2 is self-adjoint; both are checked.  For k = 1 the
    identity is also run through the engine with a central symbol s for
    rho^-2 (``explicit``; default on for k = 1).
    """
    T = T or braided_with_c4(MA)
    k = MA.k
    sz, sj = sigma_matrices(MA, T)
    V = sz.block(sj)
    rho2 = rho_squared(sz)
    A = T.alg
    Rblk = NcMatrix(A, [[rho2[i % k, j % k] if (i < k) == (j < k) else A.zero()
                         for j in range(2 * k)] for i in range(2 * k)])
    gram = _certify_matrix("V* V - rho2", mat_mul(V.adjoint(), V) - Rblk, A.relations)
    selfadj = rho2.adjoint() == rho2
    B = _rho_inverse_tensor(T, k)
    lift = Hom.by_names(A, B, {g.name: g.name for g in A.gens}, check=False)
    B.relations.extend(lift(r) for r in A.relations)
    VB = V.apply(lift)
    W = NcMatrix(B, [[B.gen(f"w{(i % k) + 1}{(j % k) + 1}") if (i < k) == (j < k) else B.zero()
                      for j in range(2 * k)] for i in range(2 * k)])
    Q = mat_mul(mat_mul(VB, W), VB.adjoint())
    P = NcMatrix.identity(B, Q.rows) - Q
    if explicit is None:
        explicit = k == 1
    exp_ok = None
    if explicit:
        exp_ok = _explicit_k1(VB, W, rho2.apply(lift)) if k == 1 else None
    return AdhmProjector(VB, Q, P, gram, selfadj, exp_ok)


def _explicit_k1(V: NcMatrix, W: NcMatrix, rho2: NcMatrix) -> bool:
    """Q^2 - Q with V^*V replaced by its certified value rho^2 I_2, cleared against s."""
    B = V.alg
    r2 = rho2[0, 0]
    s = W[0, 0]
    G = NcMatrix.diagonal(B, [r2, r2])
    Q = mat_mul(mat_mul(V, W), V.adjoint())
    Q2 = mat_mul(mat_mul(mat_mul(V, W), mat_mul(G, W)), V.adjoint())
    red = clear_central_inverse("w11", r2)
    ok = all(red(Q2[i, j] - Q[i, j]).is_zero() for i in range(Q.rows) for j in range(Q.cols))
    return ok and all((Q.adjoint() - Q)[i, j].is_zero() for i in range(Q.rows) for j in range(Q.cols))


def classical_basic_point(MA: MonadAlgebra, T: Optional[AdhmTensor] = None) -> Dict[str, bool]:
    """At zeta = 1 and k = 1, M^j_a1 = delta_aj sends sigma_z to u's first column and
    Q to the basic projector (with rho^-2 going to r^-2)."""
    if MA.k != 1:
        raise ValueError("the basic point is a charge-one datum")
    if MA.cocycle != classical_cocycle(MA.cocycle.n):
        raise ValueError("evaluation at a point needs the classical cocycle")
    T = T or braided_with_c4(MA)
    sz, sj = sigma_matrices(MA, T)
    from .spheres import _central
    C = AlgebraPresentation([_central("r2inv")] + _z_gens(), MA.cocycle, name="C4[r^-2]")
    imgs = {}
    for g in T.alg.gens:
        nm = g.name
        if nm.startswith("M"):
            j = int(nm[1])
            a = int(nm.split("_")[1])
            imgs[nm] = C.one() if a == j else C.zero()
        else:
            imgs[nm] = C.gen(nm)
    ev = Hom(T.alg, C, imgs, check=False)
    u = u_matrix(C)
    out = {"sigma": sz.apply(ev) == NcMatrix(C, [[u[i, 0]] for i in range(4)]),
           "sigmaJ": sj.apply(ev) == NcMatrix(C, [[u[i, 1]] for i in range(4)])}
    rels_vanish = all(ev(r).is_zero() for r in T.alg.relations)
    out["relations vanish"] = rels_vanish
    V = sz.apply(ev).block(sj.apply(ev))
    s = C.gen("r2inv")
    Q = mat_mul(V, V.adjoint()).scale(s)
    q = mat_mul(u, u.adjoint()).scale(s)
    out["Q = q"] = Q == q
    return out


# -- beta ---------------------------------------------------------------------------

@dataclass
class BetaMap:
    source: AlgebraPresentation
    target: AlgebraPresentation
    hom: Hom

    def __call__(self, e: NcElement) -> NcElement:
        return self.hom(e)


def beta_map(MA: MonadAlgebra, T: Optional[AdhmTensor] = None) -> BetaMap:
    """M (x) Z -> M (x) Z^(-1) (x) Z^(0) into (MA >< H) (x) C^4.

    The cross product MA >< H is the braided tensor with the torus letters;
    the outer tensor with C^4 is the ordinary one.
    """
    T = T or braided_with_c4(MA)
    H = torus_algebra(MA.cocycle)
    MH, _, _ = tensor(MA.alg, H, braided=True, name=f"{MA.alg.name}><H")
    C4 = AlgebraPresentation(_z_gens(), MA.cocycle, name="C4")
    X, _, _ = tensor(MH, C4, braided=False, name=f"{MH.name}(x)C4")
    imgs = {}
    for g in T.alg.gens:
        if g.name.startswith("z"):
            imgs[g.name] = grouplike(X, g.degree) * X.gen(g.name)
        else:
            imgs[g.name] = X.gen(g.name)
    return BetaMap(T.alg, X, Hom(T.alg, X, imgs, check=False))


def beta_checks(beta: BetaMap, names: Optional[Sequence[str]] = None) -> Dict[str, bool]:
    """Multiplicativity on generator pairs and star preservation on generators."""
    S = beta.source
    names = list(names) if names is not None else [g.name for g in S.gens]
    mult = all(beta(S.gen(a) * S.gen(b)) == beta(S.gen(a)) * beta(S.gen(b))
               for a in names for b in names)
    star = all(beta(S.gen(a).star()) == beta(S.gen(a)).star() for a in names)
    return {"multiplicative": mult, "star": star}


# -- coinvariants ---------------------------------------------------------------------

@dataclass
class CoinvariantReport:
    k: int
    exps: Tuple[int, int, int, int]
    generators: Dict[str, NcElement]
    weights: Dict[str, Tuple[int, ...]]
    phases_match: bool
    commutative: bool
    mismatches: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def expected_commutative(self) -> bool:
        r1, r2 = self.exps[0], self.exps[2]
        return r1 + r2 == 1

    @property
    def ok(self) -> bool:
        return self.phases_match and self.commutative == self.expected_commutative


def adhm_coinvariants(MA: MonadAlgebra, r1: int, r2: int) -> CoinvariantReport:
    """Coinvariants M^j_ab u_j in MA >< H for u_j = tau_j^m_j, (m) = (r1, r1, r2, r2).

    Pairwise commutation phases are read off the engine and compared with
    eta_jl^(m_l + m_j - 1).
    """
    F = MA.cocycle
    tau = tau_degrees()
    exps = (r1, r1, r2, r2)
    u = [dscale(m, t) for m, t in zip(exps, tau)]
    H = torus_algebra(F)
    MH, _, _ = tensor(MA.alg, H, braided=True, name=f"{MA.alg.name}><H")
    weights = {}
    for g in MA.alg.gens:
        j = int(g.name[1])
        w = dneg(u[j - 1])
        weights[g.name] = w if not g.name.endswith("s") else dneg(w)
    for g in H.gens:
        weights[g.name] = g.degree
    c = CoactionSpec("weight", MH, weights)
    base = [(mname(j, a, b), MH.gen(mname(j, a, b)))
            for j in range(1, 5) for a in range(1, MA.rows + 1) for b in range(1, MA.k + 1)]
    bound = max(2, abs(r1), abs(r2))
    found = coinvariants_grouplike(c, base, TAU, degree_bound=bound)
    gens = {}
    wts = {}
    for label, h, elt in found:
        gens[label] = elt
        wts[label] = h
    if set(gens) != {lab for lab, _ in base}:
        raise PresentationError("some generator has no coinvariant partner")
    eta = eta_matrix(F)
    mism = []
    commutative = True
    labels = sorted(gens)
    for x in labels:
        for y in labels:
            if x >= y:
                continue
            j, l = int(x[1]), int(y[1])
            X, Y = gens[x], gens[y]
            want = eta[j - 1][l - 1] ** (exps[l - 1] + exps[j - 1] - 1)
            got = X * Y
            if got != (Y * X).scale(want):
                mism.append((x, y))
            if got != Y * X:
                commutative = False
    return CoinvariantReport(MA.k, exps, gens, wts, not mism, commutative, mism)


def coinvariant_phase(MA: MonadAlgebra, r1: int, r2: int, j: int, l: int) -> Optional[int]:
    """Engine exponent e with X_j X_l = zeta^e X_l X_j for the (1,1) entries."""
    rep = adhm_coinvariants(MA, r1, r2)
    X, Y = rep.generators[mname(j, 1, 1)], rep.generators[mname(l, 1, 1)]
    return phase_ratio(X * Y, Y * X)
