"""Twisted differential calculi on C^4, the radius family over it, and S^4.

A :class:`DgaPresentation` doubles the letters of a base presentation: every
letter x that is not d-closed gets a partner ``d[x]`` of form degree one and
the same torus degree, so the graded swap rule of the engine produces the
calculus relations.  d is applied letterwise to normal words with Koszul
signs.  A letter may instead carry an explicit differential (the adjoined
inverse radius uses d(s) = -s^2 dE).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Iterable, Mapping, Optional, Sequence, Tuple

from .algebra import AlgebraPresentation, Generator, NcElement, PresentationError
from .cocycle import CocycleData
from .scalars import GaussianRational, PhaseScalar
from .matrixalg import NcMatrix, clear_central_inverse, is_projection, mat_mul
from .spheres import ProjectorError, _central, _z_gens, build_sphere, sphere_sum, u_matrix


def dname(name: str) -> str:
    return f"d[{name}]"


class DgaPresentation:
    """Base letters plus their differentials, with d defined letterwise."""

    def __init__(self, base: AlgebraPresentation, closed: Iterable[str] = (),
                 custom: Optional[Mapping[str, Callable[["DgaPresentation"], NcElement]]] = None,
                 name: str = ""):
        closed = frozenset(closed)
        custom = dict(custom or {})
        for nm in list(closed) + list(custom):
            if nm not in base.index:
                raise PresentationError(f"unknown letter {nm!r}")
        if closed & set(custom):
            raise PresentationError("a letter is either closed or has an explicit differential")
        for g in base.gens:
            if g.form:
                raise PresentationError("the base must consist of zero-forms")
        for lhs, _ in base.rules:
            loose = [base.gens[i].name for i in lhs if base.gens[i].name not in closed]
            if loose:
                raise PresentationError(
                    f"rule on {loose[0]!r}: rewrite rules may only involve d-closed letters")
        self.base = base
        self.closed = closed
        gens = list(base.gens)
        self.partner: Dict[int, int] = {}
        for i, g in enumerate(base.gens):
            if g.name in closed or g.name in custom:
                continue
            self.partner[i] = len(gens)
            gens.append(Generator(dname(g.name), g.degree,
                                  dname(g.star) if g.star else None, g.star_coeff,
                                  g.factor, False, 1))
        A = AlgebraPresentation(gens, base.cocycle, base.plain_pairs,
                                name or f"Omega({base.name})")
        for lhs, rhs in base.rules:
            A.add_rule([base.gens[i].name for i in lhs], self._lift(A, rhs))
        self.alg = A
        self._dimg: Dict[int, NcElement] = {}
        for i, j in self.partner.items():
            self._dimg[i] = A.gen(gens[j].name)
        for nm, f in custom.items():
            img = f(self)
            if img.alg is not A:
                raise PresentationError("explicit differential must lie in the calculus")
            self._dimg[base.index[nm]] = img
        for r in base.relations:
            lr = self._lift(A, r)
            A.relations.append(lr)
            dr = self.d(lr)
            if not dr.is_zero():
                A.relations.append(dr)

    @staticmethod
    def _lift(A: AlgebraPresentation, e: NcElement) -> NcElement:
        return NcElement(A, dict(e.raw_items()))

    def lift(self, e: NcElement) -> NcElement:
        if e.alg is not self.base:
            raise PresentationError("element is not in the base presentation")
        return self._lift(self.alg, e)

    def gen(self, name: str) -> NcElement:
        return self.alg.gen(name)

    def dgen(self, name: str) -> NcElement:
        """d of a base letter."""
        return self.d(self.alg.gen(name))

    def d(self, e: NcElement) -> NcElement:
        """Graded Leibniz extension; d vanishes on d-letters and closed letters."""
        A = self.alg
        if e.alg is not A:
            raise PresentationError("element is not in this calculus")
        nb = len(self.base.gens)
        out: dict = {}
        acc = A.zero()
        for (w, k), c in e.raw_items():
            sign = 1
            for pos, i in enumerate(w):
                if i < nb and i in self._dimg:
                    img = self._dimg[i]
                    cc = c if sign > 0 else (-c[0], -c[1])
                    if i in self.partner:
                        nw = w[:pos] + (self.partner[i],) + w[pos + 1:]
                        key = (nw, k)
                        old = out.get(key)
                        if old is None:
                            out[key] = cc
                        else:
                            out[key] = (old[0] + cc[0], old[1] + cc[1])
                    else:
                        pre = NcElement(A, {(w[:pos], k): cc})
                        post = NcElement(A, {(w[pos + 1:], 0): (1, 0)})
                        acc = acc + pre * img * post
                if A.gens[i].form % 2:
                    sign = -sign
        out = {key: v for key, v in out.items() if v[0] or v[1]}
        return A.normalize(NcElement(A, out)) + acc

    def form_degree(self, e: NcElement) -> Optional[int]:
        fs = {self.alg.word_form(w) for w in e.terms}
        return fs.pop() if len(fs) == 1 else (0 if not fs else None)

    def d_matrix(self, M: NcMatrix) -> NcMatrix:
        return M.map(self.d, self.alg)


# -- concrete calculi -------------------------------------------------------------

def c4_calculus(F: Optional[CocycleData] = None) -> DgaPresentation:
    """Omega(C^4_theta) on z_j, z_j^*."""
    S = build_sphere("C4", F)
    return DgaPresentation(S.alg, name="Omega(C4)")


def radius_calculus(F: Optional[CocycleData] = None) -> DgaPresentation:
    """Omega(C^4_theta) with a central letter s standing for (sum z^* z)^-1.

    d(s) = -s^2 dE keeps s E - 1 a differential ideal, so identities are
    certified by clearing s against E.
    """
    F = F or CocycleData.standard()
    base = AlgebraPresentation([_central("r2inv")] + _z_gens(), F, name="C4[r^-2]")

    def ds(D: DgaPresentation) -> NcElement:
        s = D.gen("r2inv")
        return -(s * s * D.d(D.lift(sphere_sum(D.base))))

    return DgaPresentation(base, custom={"r2inv": ds}, name="Omega(C4[r^-2])")


def radius_reducer(D: DgaPresentation):
    return clear_central_inverse("r2inv", D.lift(sphere_sum(D.base)))


def s4_calculus(F: Optional[CocycleData] = None) -> DgaPresentation:
    """Omega(S^4_theta) on the fixed-radius slice (r^2 and r^-2 d-closed)."""
    S = build_sphere("S4", F)
    return DgaPresentation(S.alg, closed=("r2", "r2inv"), name="Omega(S4r)")


def basic_projector_forms(D: DgaPresentation) -> Tuple[NcMatrix, NcMatrix, NcMatrix]:
    """(u, q, p) with q = s u u^* inside the radius calculus."""
    A = D.alg
    u = u_matrix(A)
    q = mat_mul(u, u.adjoint()).scale(A.gen("r2inv"))
    red = radius_reducer(D)
    chk = is_projection(q, red)
    if not chk:
        raise ProjectorError("q is not a projection in the radius calculus: " + chk.detail)
    return u, q, NcMatrix.identity(A, 4) - q


def s4_projector_forms(D: DgaPresentation) -> NcMatrix:
    """q = r^-2/2 [[r2+x, 0, alpha, -mubar beta*], ...] written in the S^4 letters."""
    A = D.alg
    p = A.cocycle.params
    mu, mub = p.mu(), p.mu_bar()
    g = A.gen
    r2, a, b, x = g("r2"), g("alpha"), g("beta"), g("x")
    z = A.zero()
    M = NcMatrix(A, [
        [r2 + x, z, a, -g("betas").scale(mub)],
        [z, r2 + x, b, g("alphas").scale(mu)],
        [g("alphas"), g("betas"), r2 - x, z],
        [-b.scale(mu), a.scale(mub), z, r2 - x],
    ])
    return M.scale(g("r2inv")).scale(PhaseScalar.coerce(GaussianRational(Fraction(1, 2))))


def curvature(D: DgaPresentation, P: NcMatrix, reducer=None) -> NcMatrix:
    """P (dP)(dP), after checking that P is a projection."""
    chk = is_projection(P, reducer)
    if not chk:
        raise ProjectorError("curvature needs a projection: " + chk.detail)
    dP = D.d_matrix(P)
    out = mat_mul(mat_mul(P, dP), dP)
    return out.map(reducer, D.alg) if reducer else out


def differential(D: DgaPresentation, e: NcElement) -> NcElement:
    return D.d(e)


def calculus_relation_table(D: DgaPresentation) -> Dict[Tuple[str, str], bool]:
    """For base letters a, b with a b = c b a: a db = c db a, da b = c b da, da db = -c db da."""
    B, A = D.base, D.alg
    out = {}
    names = [g.name for g in B.gens if g.name not in D.closed]
    for x in names:
        for y in names:
            X, Y = B.gen(x), B.gen(y)
            xy, yx = X * Y, Y * X
            if xy.is_zero() or yx.is_zero() or len(yx.terms) != 1 or len(xy.terms) != 1:
                continue
            c = xy.terms[next(iter(xy.terms))] * yx.terms[next(iter(yx.terms))].inverse()
            ax, ay = A.gen(x), A.gen(y)
            dx, dy = D.d(ax), D.d(ay)
            ok = (ax * dy == (dy * ax).scale(c) and dx * ay == (ay * dx).scale(c)
                  and dx * dy == -(dy * dx).scale(c))
            out[(x, y)] = ok
    return out
