"""Sphere presentations, the basic instanton projector and its coacted
families, gauge unitaries and the charge-one parameter spaces."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import (AlgebraPresentation, Generator, Hom, NcElement, NotCertified,
                      PresentationError, ideal_member, tensor)
from .cocycle import CocycleData, dadd, dneg, dscale, dsub, cocycle_value, tau_degrees
from .hopf import (PARTNER, TAU, BraidedMatrixBialgebra, Cobosonisation, aname, astar,
                   grouplike, m_element, torus_algebra)
from .matrixalg import (CheckResult, NcMatrix, check_mvn_equivalence, clear_central_inverse,
                        conjugate_by_unitary, is_projection, is_unitary, mat_mul, residual_zero)
from .scalars import PhaseScalar

Z = ("z1", "z2", "z3", "z4")
VARIANTS = ("C4", "S7", "S4")


class ProjectorError(AssertionError):
    """A projector identity failed; this signals a convention bug."""


def _z_gens() -> List[Generator]:
    out = []
    for j, t in enumerate(tau_degrees(), start=1):
        out.append(Generator(f"z{j}s", dneg(t), f"z{j}"))
        out.append(Generator(f"z{j}", t, f"z{j}s"))
    return out


def _central(name: str, n: int = 2) -> Generator:
    return Generator(name, (0,) * n, name, central=True)


@dataclass
class SpherePresentation:
    variant: str
    presentation: AlgebraPresentation
    extras: Tuple[str, ...] = ()

    @property
    def alg(self) -> AlgebraPresentation:
        return self.presentation


def sphere_sum(A: AlgebraPresentation) -> NcElement:
    """sum_a z_a^* z_a."""
    return sum((A.g(f"z{j}s", f"z{j}") for j in range(1, 5)), A.zero())


def verify_r2_central(F: CocycleData) -> bool:
    """[sum z*z, z_j] = [sum z*z, z_j*] = 0 in the free phase algebra."""
    C4 = AlgebraPresentation(_z_gens(), F, name="C4")
    E = sphere_sum(C4)
    return all(C4.commutator(E, C4.gen(g.name)).is_zero() for g in C4.gens)


def build_sphere(variant: str, F: Optional[CocycleData] = None,
                 extras: Sequence[str] = ()) -> SpherePresentation:
    """C4: free phase algebra on z_j, z_j*.  S7: the radius family with
    central r2, r2inv and the rule z4* z4 -> r2 - sum_{a<4} z_a* z_a.  S4:
    alpha, beta, x and r2 with the quadric registered as a relation.

    ``extras`` adjoins further central self-adjoint letters (S7 only)."""
    F = F or CocycleData.standard()
    if F.n != 2:
        raise PresentationError("sphere presentations need the two-torus")
    if variant == "C4":
        return SpherePresentation("C4", AlgebraPresentation(_z_gens(), F, name="C4"))
    if variant == "S7":
        if not verify_r2_central(F):
            raise ProjectorError("sum z*z is not central")
        gens = [_central("r2"), _central("r2inv")] + [_central(x) for x in extras] + _z_gens()
        A = AlgebraPresentation(gens, F, name="S7r")
        A.add_rule(["r2", "r2inv"], A.one())
        A.add_rule(["z4s", "z4"], A.gen("r2") - sum((A.g(f"z{j}s", f"z{j}") for j in range(1, 4)),
                                                     A.zero()))
        return SpherePresentation("S7", A, tuple(extras))
    if variant == "S4":
        t = tau_degrees()
        da, db = dadd(t[0], t[3]), dadd(t[1], t[3])
        gens = [_central("r2"), _central("r2inv"),
                Generator("alpha", da, "alphas"), Generator("alphas", dneg(da), "alpha"),
                Generator("beta", db, "betas"), Generator("betas", dneg(db), "beta"),
                Generator("x", (0, 0), "x")]
        A = AlgebraPresentation(gens, F, name="S4r")
        A.add_rule(["r2", "r2inv"], A.one())
        A.add_relation(A.g("alphas", "alpha") + A.g("betas", "beta") + A.g("x", "x")
                       - A.g("r2", "r2"), with_star=False)
        return SpherePresentation("S4", A)
    raise ValueError(f"unknown sphere variant {variant!r}")


def _require(S: SpherePresentation, variant: str):
    if S.variant != variant:
        raise PresentationError(f"operation needs the {variant} presentation, got {S.variant}")


def u_matrix(A: AlgebraPresentation) -> NcMatrix:
    """Columns (z1, z2, z3, z4) and (-z2*, z1*, -z4*, z3*)."""
    g = A.gen
    return NcMatrix(A, [[g("z1"), -g("z2s")], [g("z2"), g("z1s")],
                        [g("z3"), -g("z4s")], [g("z4"), g("z3s")]])


def alpha_beta_x(A: AlgebraPresentation) -> Dict[str, NcElement]:
    """alpha, beta, x as elements of the z-algebra (deformed product)."""
    g = A.g
    return {
        "alpha": (g("z1", "z3s") + g("z2s", "z4")).scale(2),
        "beta": (g("z2", "z3s") - g("z1s", "z4")).scale(2),
        "x": g("z1", "z1s") + g("z2", "z2s") - g("z3", "z3s") - g("z4", "z4s"),
    }


def rescaled_matrix(A: AlgebraPresentation, r2: NcElement,
                    abx: Dict[str, NcElement]) -> NcMatrix:
    """The explicit matrix equal to 2 r^2 q, written in alpha, beta, x."""
    p = A.cocycle.params
    mu, mub = p.mu(), p.mu_bar()
    a, b, x = abx["alpha"], abx["beta"], abx["x"]
    z = A.zero()
    return NcMatrix(A, [
        [r2 + x, z, a, -b.star().scale(mub)],
        [z, r2 + x, b, a.star().scale(mu)],
        [a.star(), b.star(), r2 - x, z],
        [-b.scale(mu), a.scale(mub), z, r2 - x],
    ])


def basic_projector(S: SpherePresentation):
    """(u, q, p) with q = u r^-2 u^*; raises ProjectorError if any identity fails."""
    _require(S, "S7")
    A = S.alg
    u = u_matrix(A)
    r2, r2inv = A.gen("r2"), A.gen("r2inv")
    if mat_mul(u.adjoint(), u) != NcMatrix.diagonal(A, [r2, r2]):
        raise ProjectorError("u^* u != r^2 I")
    q = mat_mul(u.rscale(r2inv), u.adjoint())
    chk = is_projection(q)
    if not chk:
        raise ProjectorError("q is not a projection: " + chk.detail)
    if q.scale(r2).scale(2) != rescaled_matrix(A, r2, alpha_beta_x(A)):
        raise ProjectorError("2 r^2 q does not match the explicit matrix")
    p = NcMatrix.identity(A, 4) - q
    return u, q, p


def s4_inclusion(S4: SpherePresentation, S7: SpherePresentation) -> Hom:
    """alpha, beta, x, r2 into the radius family of S7."""
    _require(S4, "S4")
    _require(S7, "S7")
    A = S7.alg
    abx = alpha_beta_x(A)
    imgs = {"r2": A.gen("r2"), "r2inv": A.gen("r2inv"), "alpha": abx["alpha"],
            "alphas": abx["alpha"].star(), "beta": abx["beta"], "betas": abx["beta"].star(),
            "x": abx["x"]}
    return Hom(S4.alg, A, imgs)


def J_map(A: AlgebraPresentation) -> Hom:
    """The anti-linear anti-homomorphism J(z1, z2, z3, z4) = (-z2*, z1*, -z4*, z3*)."""
    g = A.gen
    imgs = {"z1": -g("z2s"), "z2": g("z1s"), "z3": -g("z4s"), "z4": g("z3s"),
            "z1s": -g("z2"), "z2s": g("z1"), "z3s": -g("z4"), "z4s": g("z3")}
    for gen in A.gens:
        if gen.name not in imgs and gen.central:
            imgs[gen.name] = g(gen.name)
    return Hom(A, A, imgs, reverse=True, antilinear=True)


# -- coacted projectors -----------------------------------------------------

@dataclass
class InstantonFamily:
    projector: NcMatrix
    parameter_presentation: AlgebraPresentation
    provenance: str
    unitary: Optional[NcMatrix] = None
    isometry: Optional[NcMatrix] = None
    reducer: Optional[object] = None
    relations: Optional[list] = None
    base: Optional[NcMatrix] = None
    checks: Dict[str, bool] = field(default_factory=dict)
    extra: Dict[str, object] = field(default_factory=dict)


def _diag(A, items):
    return NcMatrix.diagonal(A, items)


def torus_coaction(S: SpherePresentation):
    """Delta_L(z_j) = tau_j (x) z_j into H (x) S (ordinary tensor)."""
    A = S.alg
    H = torus_algebra(A.cocycle)
    T, iH, iA = tensor(H, A, braided=False, name="H(x)S7r")
    imgs = {}
    for j in range(1, 5):
        imgs[f"z{j}"] = T.gen(TAU[j - 1]) * T.gen(f"z{j}")
        imgs[f"z{j}s"] = T.gen(TAU[PARTNER[j - 1]]) * T.gen(f"z{j}s")
    for g in A.gens:
        if g.central:
            imgs[g.name] = T.gen(g.name)
    return T, Hom(A, T, imgs, check=False), iA


class CobosonisedSphere:
    """(B >⊲· H) (x) S7r with the coaction u_ia -> sum_b A_ib tau_b (x) u_ba."""

    def __init__(self, S: SpherePresentation, kind: str):
        _require(S, "S7")
        if kind not in ("SL", "Sp"):
            raise ValueError(kind)
        self.S = S
        self.kind = kind
        F = S.alg.cocycle
        self.B = BraidedMatrixBialgebra(F, kind)
        self.C = Cobosonisation(self.B)
        T, iC, iS = tensor(self.C.alg, S.alg, braided=False, name=f"C{kind}(x)S7r")
        self.T, self.iC, self.iS = T, iC, iS
        self.relations = list(T.relations)
        u = u_matrix(S.alg)
        imgs = {}
        for i in range(1, 5):
            e = sum((T.gen(aname(i, b)) * T.gen(TAU[b - 1]) * iS(u[b - 1, 0])
                     for b in range(1, 5)), T.zero())
            imgs[f"z{i}"] = e
            imgs[f"z{i}s"] = e.star()
        self.rho2 = sum((imgs[f"z{j}s"] * imgs[f"z{j}"] for j in range(1, 5)), T.zero())
        if kind == "SL":
            if "rho2inv" not in S.extras:
                raise PresentationError("the SL family needs the adjoined rho2inv letter")
            imgs["r2"] = self.rho2
            imgs["r2inv"] = T.gen("rho2inv")
        else:
            imgs["r2"] = T.gen("r2")
            imgs["r2inv"] = T.gen("r2inv")
        self.delta = Hom(S.alg, T, imgs, check=False)

    def utilde(self) -> NcMatrix:
        return u_matrix(self.S.alg).apply(self.delta)

    def reducer(self):
        return clear_central_inverse("rho2inv", self.rho2) if self.kind == "SL" else None

    def closed_form(self) -> NcMatrix:
        """sum rho^-2 A_ka (A^*)_bl tau_a tau_b^* (x) (u u^*)_ab F^-2(tau_b tau_l^*, tau_a tau_b^*)."""
        T = self.T
        S = self.S.alg
        tau = tau_degrees()
        F = S.cocycle
        u = u_matrix(S)
        uu = mat_mul(u, u.adjoint())
        inv = T.gen("rho2inv")
        rows = []
        for k in range(1, 5):
            row = []
            for l in range(1, 5):
                acc = T.zero()
                for a in range(1, 5):
                    for b in range(1, 5):
                        ph = cocycle_value(F, dsub(tau[b - 1], tau[l - 1]),
                                           dsub(tau[a - 1], tau[b - 1])) ** -2
                        left = (T.gen(aname(k, a)) * astar(T, b, l) * T.gen(TAU[a - 1])
                                * T.gen(TAU[PARTNER[b - 1]]))
                        acc = acc + (inv * left * self.iS(uu[a - 1, b - 1])).scale(ph)
                row.append(acc)
            rows.append(row)
        return NcMatrix(T, rows)

    def isometry(self, with_radius: bool = True) -> NcMatrix:
        """V_kl = rho^-1 [r] sum_a (A_ka tau_a) (x) q_al."""
        T = self.T
        _, q, _ = basic_projector(self.S)
        pre = T.gen("rhoinv") * (T.gen("r1") if with_radius else T.one())
        rows = []
        for k in range(1, 5):
            row = []
            for l in range(1, 5):
                acc = sum((T.gen(aname(k, a)) * T.gen(TAU[a - 1]) * self.iS(q[a - 1, l - 1])
                           for a in range(1, 5)), T.zero())
                row.append(pre * acc)
            rows.append(row)
        return NcMatrix(T, rows)

    def isometry_checks(self, V: NcMatrix, Qt: NcMatrix) -> Tuple[bool, bool]:
        """Certify V^*V = 1 (x) q and V V^* = Qt.

        rho^-2 commutes with C (x) 1 and with Delta(S) but not with 1 (x) S,
        so V^*V is not computed by moving rho^-2 to the front.  Instead
        V = rho^-1 r^-1 Delta(u) (1 (x) u^*) is checked entrywise, then
        Delta(u)^* rho^-2 Delta(u) = 1 inside the subalgebra where rho^2 is
        central; V^*V = r^-2 (1 (x) u u^*) = 1 (x) q follows.
        """
        T, red = self.T, self.reducer()
        u = u_matrix(self.S.alg)
        Du = self.utilde()
        us = u.adjoint().apply(self.iS)
        pre = T.gen("rhoinv") * T.gen("r1") * T.gen("r2inv")
        factored = mat_mul(Du, us).scale(pre)
        left = bool(residual_zero(V - factored, red))
        G = mat_mul(Du.adjoint(), Du).scale(T.gen("rho2inv"))
        left = left and bool(residual_zero(G - NcMatrix.identity(T, 2), red))
        _, q, _ = basic_projector(self.S)
        left = left and mat_mul(u, u.adjoint()).scale(self.S.alg.gen("r2inv")) == q
        right = residual_zero(mat_mul(V, V.adjoint()) - Qt, red)
        return left, bool(right)

    def gauge_unitary(self) -> NcMatrix:
        """U_kl = A_kl tau_l (x) 1."""
        T = self.T
        return NcMatrix(T, [[T.gen(aname(k, l)) * T.gen(TAU[l - 1]) for l in range(1, 5)]
                            for k in range(1, 5)])


SL_EXTRAS = ("rho2inv", "rhoinv", "r1")


def sl_family_sphere(F: Optional[CocycleData] = None) -> SpherePresentation:
    S = build_sphere("S7", F, extras=SL_EXTRAS)
    A = S.alg
    A.add_rule(["rhoinv", "rhoinv"], A.gen("rho2inv"))
    A.add_rule(["r1", "r1"], A.gen("r2"))
    return S


def coacted_projector(S: SpherePresentation, which: str) -> InstantonFamily:
    """Apply the chosen coaction to q and verify the resulting family."""
    _require(S, "S7")
    _, q, p = basic_projector(S)
    if which == "H_F":
        T, D, iA = torus_coaction(S)
        qp = q.apply(D)
        chk = is_projection(qp)
        if not chk:
            raise ProjectorError("coacted q is not a projection: " + chk.detail)
        U = _diag(T, [T.gen(TAU[k]) for k in range(4)])
        conj = conjugate_by_unitary(U, q.apply(iA))
        fam = InstantonFamily(qp, T, "torus coaction", unitary=U, base=q.apply(iA))
        fam.checks["projection"] = True
        fam.checks["gauge"] = conj == qp
        fam.checks["p_gauge"] = conjugate_by_unitary(U, p.apply(iA)) == p.apply(D)
        return fam
    if which == "Sp_cobos":
        cs = CobosonisedSphere(S, "Sp")
        Qt = q.apply(cs.delta)
        U = cs.gauge_unitary()
        rels = cs.relations
        uni = is_unitary(U, relations=rels)
        if not uni:
            raise ProjectorError("gauge unitary is not unitary: " + uni.detail)
        conj = mat_mul(mat_mul(U, q.apply(cs.iS)), U.adjoint())
        eq = residual_zero(Qt - conj, relations=rels)
        if not eq:
            raise ProjectorError("coacted projector differs from U(1(x)q)U^*")
        fam = InstantonFamily(Qt, cs.T, "Sp cobosonised coaction; projection by certified "
                              "unitary conjugation of q", unitary=U, relations=rels,
                              base=q.apply(cs.iS))
        fam.checks.update(projection=True, unitary=True, gauge=True)
        fam.extra["coaction"] = cs
        return fam
    if which == "SL_cobos":
        if "rho2inv" not in S.extras:
            S = sl_family_sphere(S.alg.cocycle)
            _, q, p = basic_projector(S)
        cs = CobosonisedSphere(S, "SL")
        red = cs.reducer()
        Qt = q.apply(cs.delta)
        chk = is_projection(Qt, red)
        if not chk:
            raise ProjectorError("coacted projector is not a projection: " + chk.detail)
        closed = residual_zero(Qt - cs.closed_form(), red)
        V = cs.isometry(with_radius=True)
        left, right = cs.isometry_checks(V, Qt)
        fam = InstantonFamily(Qt, cs.T, "SL cobosonised coaction", isometry=V, reducer=red,
                              base=q.apply(cs.iS))
        fam.checks.update(projection=True, closed_form=bool(closed),
                          isometry_left=left, isometry_right=right, isometry=left and right)
        fam.extra["coaction"] = cs
        return fam
    raise ValueError(f"unknown coaction {which!r}")


# -- delta_u and the parameter spaces ------------------------------------------

def delta_u_gauge_check(u: Sequence[Sequence[int]], F: Optional[CocycleData] = None,
                        unitary: str = "both", family: Optional[InstantonFamily] = None) -> Dict:
    """Compare (delta_u (x) id)(Q) with U (1 (x) Q) U^* for diagonal U.

    delta_u sends A_kl to h^(u_k - u_l) A_kl and each torus letter t to
    h^deg(t) t, landing in the ordinary tensor product (with the braided
    one it is not multiplicative).  Two diagonal gauges are tried:
    U_kk = h^(u_k + tau_k) ("printed") and U_kk = h^(u_k) ("weight").
    ``ok`` is true when one of the requested gauges matches exactly.
    """
    u = [tuple(x) for x in u]
    if len(u) != 4 or u[1] != dneg(u[0]) or u[3] != dneg(u[2]):
        raise ValueError("u must satisfy u1* = u2 and u3* = u4")
    kinds = ("printed", "weight") if unitary == "both" else (unitary,)
    for k in kinds:
        if k not in ("printed", "weight"):
            raise ValueError(unitary)
    if family is None:
        family = coacted_projector(sl_family_sphere(F), "SL_cobos")
    cs: CobosonisedSphere = family.extra["coaction"]
    C, S = cs.C.alg, cs.S.alg
    Hh = torus_algebra(C.cocycle, prefix="h")
    HC, _, _ = tensor(Hh, C, braided=False, name="H(x)C")
    W, _, _ = tensor(HC, S, braided=False, name="H(x)C(x)S7r")
    tau = tau_degrees()
    imgs = {}
    for k in range(1, 5):
        for l in range(1, 5):
            imgs[aname(k, l)] = grouplike(W, dsub(u[k - 1], u[l - 1]), "h") * W.gen(aname(k, l))
    for t in TAU:
        imgs[t] = grouplike(W, C.gens[C.index[t]].degree, "h") * W.gen(t)
    for g in S.gens:
        imgs[g.name] = W.gen(g.name)
    T = cs.T
    lhs = family.projector.apply(Hom(T, W, imgs, check=False))
    base = family.projector.apply(Hom(T, W, {g.name: W.gen(g.name) for g in T.gens}, check=False))
    report = {"u": u, "mismatched_entries": {}}
    for k in kinds:
        shift = (lambda i: dadd(u[i], tau[i])) if k == "printed" else (lambda i: u[i])
        U = NcMatrix.diagonal(W, [grouplike(W, shift(i), "h") for i in range(4)])
        if not is_unitary(U):
            raise ProjectorError("diagonal gauge matrix is not unitary")
        diff = lhs - mat_mul(mat_mul(U, base), U.adjoint())
        bad = [(i, j) for i in range(4) for j in range(4) if not diff[i, j].is_zero()]
        report[k] = not bad
        report["mismatched_entries"][k] = bad
    report["ok"] = any(report[k] for k in kinds)
    return report


@dataclass
class ChargeOneReport:
    """Relations among m, n, g1, g2 for u = (tau1^r1, tau2^r1, tau3^r2, tau4^r2).

    ``relations`` holds the printed relations with nu = mu^(r1-r2+1),
    reading g1*, g2* as the matrix entries M_31, M_14.  The engine finds
    g1 g2 = mu^(2(1-r1-r2)) g2 g1, so these agree only when r1 = 0.  ``nu_exponent``
    is the exponent k with g1 g2 = z^k g2 g1 found by the engine, and
    ``entry_vs_star`` the exponents e with M_31 = z^e g1^*, M_14 = z^e' g2^*.
    """

    r1: int
    r2: int
    nu: PhaseScalar
    elements: Dict[str, NcElement]
    relations: Dict[str, bool]
    quadric: bool
    quadric_true_adjoint: bool
    matrix_pattern: bool
    commutative: bool
    nu_exponent: Optional[int]
    entry_vs_star: Tuple[Optional[int], Optional[int]]

    @property
    def ok(self) -> bool:
        return all(self.relations.values()) and self.quadric and self.matrix_pattern


def phase_ratio(a: NcElement, b: NcElement, span: int = 64) -> Optional[int]:
    """k with a == z^k b, or None."""
    if a.is_zero() or b.is_zero():
        return 0 if a.is_zero() and b.is_zero() else None
    w = next(iter(b.terms))
    ca, cb = a.terms.get(w), b.terms[w]
    if ca is None:
        return None
    r = ca * cb.inverse() if cb.is_monomial() else None
    if r is None or not r.is_monomial():
        return None
    k = r.exponents()[0]
    if r.coefficient(k) != 1 or abs(k) > span:
        return None
    return k if a == b.scale(r) else None


def charge_one_parameter_space(r1: int, r2: int, F: Optional[CocycleData] = None) -> ChargeOneReport:
    """Coinvariant generators M_ij = m_ij u_i^* u_j and their relations."""
    F = F or CocycleData.standard()
    C = Cobosonisation(BraidedMatrixBialgebra(F, "SL")).alg
    tau = tau_degrees()
    uw = [dscale(r1, tau[0]), dscale(r1, tau[1]), dscale(r2, tau[2]), dscale(r2, tau[3])]

    def M(i, j):
        return m_element(C, i, j) * grouplike(C, dsub(uw[j - 1], uw[i - 1]))

    params = F.params
    nu = params.nu(r1, r2)
    mu, mub = params.mu(), params.mu_bar()
    m, n, g1, g2 = M(1, 1), M(3, 3), M(1, 3), M(4, 1)
    g1s, g2s = M(3, 1), M(1, 4)
    els = {"m": m, "n": n, "g1": g1, "g2": g2, "g1*": g1s, "g2*": g2s}
    nu2 = nu * nu
    rel = {
        "g1 g2 = nu^2 g2 g1": g1 * g2 == (g2 * g1).scale(nu2),
        "g1 g2* = nubar^2 g2* g1": g1 * g2s == (g2s * g1).scale(nu2.star()),
        "g1 g1* = g1* g1": g1 * g1s == g1s * g1,
        "g2 g2* = g2* g2": g2 * g2s == g2s * g2,
    }
    others = [g1, g2, g1s, g2s, m, n]
    rel["m central"] = all(m * y == y * m for y in others)
    rel["n central"] = all(n * y == y * n for y in others)
    det = (m_element(C, 1, 1) * m_element(C, 3, 3) - m_element(C, 3, 1) * m_element(C, 1, 3)
           + m_element(C, 4, 1) * m_element(C, 1, 4))

    def quad(a1, a2):
        return m * n - (a1 * g1).scale(nu.star() * mu) + (a2 * g2).scale(nu * mub) == det

    gens = [m, n, g1, g2, g1s, g2s]
    commutative = all(a * b == b * a for a in gens for b in gens)
    return ChargeOneReport(
        r1, r2, nu, els, rel, quad(g1s, g2s), quad(g1.star(), g2.star()),
        _charge_one_pattern(M, m, n, g1, g2, g1s, g2s, mu, C), commutative,
        phase_ratio(g1 * g2, g2 * g1), (phase_ratio(g1s, g1.star()), phase_ratio(g2s, g2.star())))


def _charge_one_pattern(M, m, n, g1, g2, g1s, g2s, nu, C) -> bool:
    """M^u = [[m,0,g1,g2*],[0,m,-nubar g2, nu g1*],[g1*,-nu g2*,n,0],[g2,nubar g1,0,n]].

    The off-diagonal phase is a property of the torus part alone, so the
    caller passes mu here for every u.
    """
    z = C.zero()
    nub = nu.star()
    want = [[m, z, g1, g2s],
            [z, m, -g2.scale(nub), g1s.scale(nu)],
            [g1s, -g2s.scale(nu), n, z],
            [g2, g1.scale(nub), z, n]]
    return all(M(i + 1, j + 1) == want[i][j] for i in range(4) for j in range(4))
