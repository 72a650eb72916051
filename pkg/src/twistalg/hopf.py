"""Braided matrix bialgebras over the two-torus, their cobosonisation,
coactions given by grouplike weights, and coinvariant bookkeeping."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from .algebra import (AlgebraPresentation, Generator, Hom, NcElement, NotCertified,
                      PresentationError, ideal_member, tensor)
from .cocycle import CocycleData, TorusDegree, cocycle_value, dadd, dneg, dsub, tau_degrees
from .scalars import PhaseScalar

TAU = ("t1", "t1s", "t2", "t2s")
EPS = (1, -1, 1, -1)
PARTNER = (1, 0, 3, 2)   # tau_i* = tau_{i'}


def aname(i: int, j: int) -> str:
    """Name of the hatted generator A_ij (1-based)."""
    return f"A{i}{j}"


# -- the torus Hopf algebra -------------------------------------------------

def torus_algebra(F: CocycleData, prefix: str = "t", name: str = "H") -> AlgebraPresentation:
    """Commutative *-algebra of the two-torus with t_j t_j* = 1."""
    gens = []
    for j in (1, 2):
        e = tuple(1 if i == j - 1 else 0 for i in range(F.n))
        gens.append(Generator(f"{prefix}{j}", e, f"{prefix}{j}s"))
        gens.append(Generator(f"{prefix}{j}s", dneg(e), f"{prefix}{j}"))
    H = AlgebraPresentation(gens, F, plain_pairs=[(0, 0)], name=name)
    for j in (1, 2):
        H.add_rule([f"{prefix}{j}", f"{prefix}{j}s"], H.one())
    return H


def grouplike(A: AlgebraPresentation, deg: Sequence[int], prefix: str = "t") -> NcElement:
    """The grouplike t^deg as a word in the torus letters of A."""
    out = A.one()
    for j, k in enumerate(deg, start=1):
        letter = f"{prefix}{j}" if k > 0 else f"{prefix}{j}s"
        for _ in range(abs(k)):
            out = out * A.gen(letter)
    return out


def tau_word(A: AlgebraPresentation, i: int, star: bool = False, prefix: str = "t") -> NcElement:
    """tau_i (1-based) or its star as a letter of A."""
    idx = PARTNER[i - 1] if star else i - 1
    return A.gen(prefix + TAU[idx][1:])


# -- braided matrix bialgebra -------------------------------------------------

def matrix_presentation(F: CocycleData, name: str = "B") -> AlgebraPresentation:
    """16 hatted generators A_ij of degree tau_i - tau_j with the quaternionic
    star pattern (A_ij)* = eps_i eps_j F^2(tau_i, tau_j) A_i'j'."""
    tau = tau_degrees()
    gens = []
    for i in range(1, 5):
        for j in range(1, 5):
            ip, jp = PARTNER[i - 1] + 1, PARTNER[j - 1] + 1
            c = cocycle_value(F, tau[i - 1], tau[j - 1]) ** 2 * (EPS[i - 1] * EPS[j - 1])
            gens.append(Generator(aname(i, j), dsub(tau[i - 1], tau[j - 1]),
                                  aname(ip, jp), c))
    return AlgebraPresentation(gens, F, name=name)


def astar(A: AlgebraPresentation, i: int, j: int) -> NcElement:
    """(A^*)_ij := (A_ji)^*, the (i, j) entry of the adjoint matrix."""
    return A.gen(aname(j, i)).star()


def sp_relations(A: AlgebraPresentation) -> List[NcElement]:
    """sum_a (A^*)_ia A_aj - delta_ij and sum_a A_ia (A^*)_aj - delta_ij."""
    rels = []
    for i in range(1, 5):
        for j in range(1, 5):
            d = A.one() if i == j else A.zero()
            r1 = sum((astar(A, i, a) * A.gen(aname(a, j)) for a in range(1, 5)), A.zero()) - d
            r2 = sum((A.gen(aname(i, a)) * astar(A, a, j) for a in range(1, 5)), A.zero()) - d
            rels.extend([r1, r2])
    return rels


def _perm_sign(p: Sequence[int]) -> int:
    s = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def cofactor(A: AlgebraPresentation, i: int, j: int) -> NcElement:
    """Adjugate entry adj_ij = (-1)^(i+j) det(minor deleting row j, column i),
    expanded over S_3 with letters multiplied in row order."""
    rows = [r for r in range(1, 5) if r != j]
    cols = [c for c in range(1, 5) if c != i]
    out = A.zero()
    for perm in itertools.permutations(range(3)):
        term = A.one()
        for r, p in zip(rows, perm):
            term = term * A.gen(aname(r, cols[p]))
        out = out + term.scale(_perm_sign(perm))
    return out.scale((-1) ** (i + j))


@dataclass
class Report:
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, msg: str):
        self.failures.append(msg)


def _suffix(s: str):
    return lambda n: n + s


def triple_maps(A: AlgebraPresentation, Delta: Hom, T2: AlgebraPresentation, braided: bool):
    """(Delta (x) id) and (id (x) Delta) from A(x)A into A(x)A(x)A."""
    T12, _, _ = tensor(A, A, braided=braided, rename1=_suffix("_1"), rename2=_suffix("_2"))
    T3, _, _ = tensor(T12, A, braided=braided, rename2=_suffix("_3"))
    lift12 = Hom.by_names(T2, T3, {g.name: g.name for g in T2.gens}, check=False)
    shift = Hom.by_names(T2, T3, {g.name: g.name[:-2] + ("_2" if g.name.endswith("_1") else "_3")
                                  for g in T2.gens}, check=False)
    left, right = {}, {}
    for g in A.gens:
        left[g.name + "_1"] = lift12(Delta.image(g.name))
        left[g.name + "_2"] = T3.gen(g.name + "_3")
        right[g.name + "_1"] = T3.gen(g.name + "_1")
        right[g.name + "_2"] = shift(Delta.image(g.name))
    return T3, Hom(T2, T3, left, check=False), Hom(T2, T3, right, check=False)


def split_legs(T: AlgebraPresentation, n1: int, e: NcElement):
    """Yield (coeff_exp, coeff, leg-1 word, leg-2 word) for an element of a
    two-fold tensor whose first n1 generators form leg 1."""
    for (w, k), c in e.raw_items():
        w1 = tuple(i for i in w if i < n1)
        w2 = tuple(i - n1 for i in w if i >= n1)
        yield k, c, w1, w2


def _word_elt(A: AlgebraPresentation, w) -> NcElement:
    return A.element([(A.names(tuple(w)), 1)])


def leg_contract(A: AlgebraPresentation, T: AlgebraPresentation, e: NcElement,
                 f1: Callable[[NcElement], NcElement],
                 f2: Callable[[NcElement], NcElement]) -> NcElement:
    """m o (f1 (x) f2) on an element of the ordinary tensor A (x) A."""
    n1 = len(A.gens)
    out = A.zero()
    for k, c, w1, w2 in split_legs(T, n1, e):
        coeff = PhaseScalar.from_raw({k: c})
        out = out + (f1(_word_elt(A, w1)) * f2(_word_elt(A, w2))).scale(coeff)
    return out


class BraidedMatrixBialgebra:
    """B(M_theta(2,H)) with braided coproduct into the braided tensor square.

    ``kind`` is "M", "SL" or "Sp"; for Sp the quadratic unitarity relations
    are registered for certification.
    """

    def __init__(self, F: CocycleData, kind: str = "M"):
        if kind not in ("M", "SL", "Sp"):
            raise ValueError(f"unknown kind {kind!r}")
        self.F = F
        self.kind = kind
        self.alg = matrix_presentation(F, name=f"B({kind})")
        if kind == "Sp":
            for r in sp_relations(self.alg):
                self.alg.relations.append(r)
        self._t2 = None
        self._delta = None

    def A(self, i: int, j: int) -> NcElement:
        return self.alg.gen(aname(i, j))

    def Astar(self, i: int, j: int) -> NcElement:
        return astar(self.alg, i, j)

    @property
    def tensor_square(self) -> AlgebraPresentation:
        if self._t2 is None:
            self._t2, self._i1, self._i2 = tensor(self.alg, self.alg, braided=True,
                                                  rename1=_suffix("_1"), rename2=_suffix("_2"),
                                                  name="B(x)B")
        return self._t2

    @property
    def delta(self) -> Hom:
        if self._delta is None:
            T = self.tensor_square
            imgs = {}
            for i in range(1, 5):
                for j in range(1, 5):
                    imgs[aname(i, j)] = sum((T.g(aname(i, a) + "_1", aname(a, j) + "_2")
                                             for a in range(1, 5)), T.zero())
            self._delta = Hom(self.alg, T, imgs)
        return self._delta

    def coproduct(self, e: NcElement) -> NcElement:
        return self.delta(e)

    def counit(self, e: NcElement) -> PhaseScalar:
        one = AlgebraPresentation([], self.F, name="k")
        eps = Hom(self.alg, one, {aname(i, j): (1 if i == j else 0)
                                  for i in range(1, 5) for j in range(1, 5)})
        return eps(e).scalar_part()

    def verify_bialgebra(self, pairs=None) -> Report:
        """Delta(x y) == Delta(x) Delta(y) on generator pairs, and the
        counit laws on generators."""
        rep = Report()
        names = [g.name for g in self.alg.gens]
        if pairs is None:
            pairs = [(a, b) for a in names for b in names]
        D = self.delta
        for a, b in pairs:
            rep.checked += 1
            x, y = self.alg.gen(a), self.alg.gen(b)
            if D(x * y) != D(x) * D(y):
                rep.fail(f"Delta not multiplicative on ({a}, {b})")
        T = self.tensor_square
        n1 = len(self.alg.gens)
        for nm in names:
            g = self.alg.gen(nm)
            dg = D(g)
            left = leg_contract(self.alg, T, dg, lambda w: self.alg.scalar(self.counit(w)), lambda w: w)
            right = leg_contract(self.alg, T, dg, lambda w: w, lambda w: self.alg.scalar(self.counit(w)))
            rep.checked += 1
            if left != g or right != g:
                rep.fail(f"counit law fails on {nm}")
        return rep

    def verify_coassociativity(self) -> Report:
        rep = Report()
        T3, L, R = triple_maps(self.alg, self.delta, self.tensor_square, braided=True)
        for g in self.alg.gens:
            rep.checked += 1
            d = self.delta.image(g.name)
            if L(d) != R(d):
                rep.fail(f"coassociativity fails on {g.name}")
        return rep

    def antipode_image(self, i: int, j: int) -> NcElement:
        if self.kind == "Sp":
            return self.Astar(i, j)
        return cofactor(self.alg, i, j)

    @property
    def antipode(self) -> Hom:
        """Braided antipode, extended multiplicatively.

        In a braided-commutative algebra the braided anti-multiplicativity
        S(xy) = F^2(x,y) S(y) S(x) coincides with S(xy) = S(x) S(y) for
        degree-preserving S; tests check the braided form explicitly."""
        if getattr(self, "_anti", None) is None:
            self._anti = Hom(self.alg, self.alg, {aname(i, j): self.antipode_image(i, j)
                                                  for i in range(1, 5) for j in range(1, 5)})
        return self._anti

    def braided_antipode(self, e: NcElement) -> NcElement:
        return self.antipode(e)


# -- cobosonisation -----------------------------------------------------------

class Cobosonisation:
    """B >⊲· H_F: hatted letters followed by torus letters t1, t1s, t2, t2s."""

    def __init__(self, B: BraidedMatrixBialgebra, name: str = ""):
        self.B = B
        F = B.F
        H = torus_algebra(F)
        self.H = H
        gens = list(B.alg.gens) + [Generator(g.name, g.degree, g.star, g.star_coeff, 1)
                                   for g in H.gens]
        C = AlgebraPresentation(gens, F, plain_pairs=[(1, 1)], name=name or f"{B.alg.name}xH")
        for j in (1, 2):
            C.add_rule([f"t{j}", f"t{j}s"], C.one())
        inc = Hom.by_names(B.alg, C, {g.name: g.name for g in B.alg.gens}, check=False)
        for r in B.alg.relations:
            C.relations.append(inc(r))
        self.alg = C
        self.include = inc
        self._t2 = None
        self._delta = None
        self._anti = None

    def A(self, i, j):
        return self.alg.gen(aname(i, j))

    def Astar(self, i, j):
        return astar(self.alg, i, j)

    def tau(self, i, star=False):
        return tau_word(self.alg, i, star)

    @property
    def tensor_square(self) -> AlgebraPresentation:
        if self._t2 is None:
            self._t2, _, _ = tensor(self.alg, self.alg, braided=False, rename1=_suffix("_1"),
                                    rename2=_suffix("_2"), name="C(x)C")
        return self._t2

    def cross_coproduct_formula(self, i: int, j: int, h: Sequence[int]) -> NcElement:
        """sum_a A_ia (x) tau_a tau_j* h (x) A_aj (x) h, built directly."""
        T = self.tensor_square
        out = T.zero()
        for a in range(1, 5):
            left = T.gen(aname(i, a) + "_1")
            left = left * T.gen(TAU[a - 1] + "_1") * T.gen(TAU[PARTNER[j - 1]] + "_1")
            left = left * grouplike_suffixed(T, h, "_1")
            right = T.gen(aname(a, j) + "_2") * grouplike_suffixed(T, h, "_2")
            out = out + left * right
        return out

    @property
    def delta(self) -> Hom:
        if self._delta is None:
            T = self.tensor_square
            imgs = {}
            for i in range(1, 5):
                for j in range(1, 5):
                    imgs[aname(i, j)] = self.cross_coproduct_formula(i, j, (0, 0))
            for t in TAU:
                imgs[t] = T.gen(t + "_1") * T.gen(t + "_2")
            self._delta = Hom(self.alg, T, imgs, check=False)
        return self._delta

    def counit_hom(self) -> Hom:
        k = AlgebraPresentation([], self.B.F, name="k")
        imgs = {aname(i, j): (1 if i == j else 0) for i in range(1, 5) for j in range(1, 5)}
        imgs.update({t: 1 for t in TAU})
        return Hom(self.alg, k, imgs, check=False)

    def counit(self, e: NcElement) -> PhaseScalar:
        return self.counit_hom()(e).scalar_part()

    def pi_H(self) -> Hom:
        """pi_H = counit (x) id onto the torus algebra."""
        imgs = {aname(i, j): (1 if i == j else 0) for i in range(1, 5) for j in range(1, 5)}
        imgs.update({t: self.H.gen(t) for t in TAU})
        return Hom(self.alg, self.H, imgs, check=False)

    def right_H_coaction(self, e: NcElement) -> NcElement:
        """(id (x) pi_H) o Delta, landing in C (x) H."""
        if getattr(self, "_cxh", None) is None:
            self._cxh, _, _ = tensor(self.alg, self.H, braided=False, rename2=_suffix("'"),
                                     name="C(x)H")
            T = self.tensor_square
            pi = self.pi_H()
            imgs = {}
            for g in self.alg.gens:
                imgs[g.name + "_1"] = self._cxh.gen(g.name)
                pim = pi(self.alg.gen(g.name))
                imgs[g.name + "_2"] = Hom.by_names(self.H, self._cxh,
                                                   {h.name: h.name + "'" for h in self.H.gens},
                                                   check=False)(pim)
            self._legmap = Hom(T, self._cxh, imgs, check=False)
        return self._legmap(self.delta(e))

    def is_H_coinvariant(self, e: NcElement) -> bool:
        self.right_H_coaction(e)
        lift = Hom.by_names(self.alg, self._cxh, {g.name: g.name for g in self.alg.gens}, check=False)
        return self.right_H_coaction(e) == lift(e)

    @property
    def antipode(self) -> Hom:
        """S(A_ij h) = (tau_j tau_i^* h^*) S_braided(A_ij), an anti-homomorphism."""
        if self._anti is None:
            C = self.alg
            Sb = self.B.antipode
            imgs = {}
            for i in range(1, 5):
                for j in range(1, 5):
                    sb = self.include(Sb.image(aname(i, j)))
                    imgs[aname(i, j)] = self.tau(j) * self.tau(i, star=True) * sb
            for t in TAU:
                imgs[t] = C.gen(t).star()
            self._anti = Hom(C, C, imgs, reverse=True, check=False)
        return self._anti

    def antipode_residuals(self, names: Optional[Sequence[str]] = None):
        """m(S (x) id)Delta(x) - eps(x) and m(id (x) S)Delta(x) - eps(x)."""
        C = self.alg
        T = self.tensor_square
        S = self.antipode
        out = {}
        for nm in names or [g.name for g in C.gens]:
            x = C.gen(nm)
            d = self.delta(x)
            eps = C.scalar(self.counit(x))
            left = leg_contract(C, T, d, S, lambda w: w) - eps
            right = leg_contract(C, T, d, lambda w: w, S) - eps
            out[nm] = (left, right)
        return out

    def verify(self, pairs=None) -> Report:
        """Multiplicativity of Delta on generator pairs, counit laws,
        coassociativity on generators and that pi_H is multiplicative."""
        rep = Report()
        C = self.alg
        names = [g.name for g in C.gens]
        D = self.delta
        if pairs is None:
            pairs = [(a, b) for a in names for b in names]
        for a, b in pairs:
            rep.checked += 1
            x, y = C.gen(a), C.gen(b)
            if D(x * y) != D(x) * D(y):
                rep.fail(f"Delta not multiplicative on ({a}, {b})")
        T = self.tensor_square
        for nm in names:
            g = C.gen(nm)
            dg = D(g)
            left = leg_contract(C, T, dg, lambda w: C.scalar(self.counit(w)), lambda w: w)
            right = leg_contract(C, T, dg, lambda w: w, lambda w: C.scalar(self.counit(w)))
            rep.checked += 1
            if left != g or right != g:
                rep.fail(f"counit law fails on {nm}")
        T3, L, R = triple_maps(C, D, T, braided=False)
        for nm in names:
            rep.checked += 1
            d = D.image(nm)
            if L(d) != R(d):
                rep.fail(f"coassociativity fails on {nm}")
        pi = self.pi_H()
        for a, b in pairs:
            rep.checked += 1
            x, y = C.gen(a), C.gen(b)
            if pi(x * y) != pi(x) * pi(y):
                rep.fail(f"pi_H not multiplicative on ({a}, {b})")
        return rep


def grouplike_suffixed(T: AlgebraPresentation, deg: Sequence[int], suffix: str) -> NcElement:
    out = T.one()
    for j, k in enumerate(deg, start=1):
        letter = (f"t{j}" if k > 0 else f"t{j}s") + suffix
        for _ in range(abs(k)):
            out = out * T.gen(letter)
    return out


# -- coactions ------------------------------------------------------------------

@dataclass
class CoactionSpec:
    """A coaction given either by grouplike weights or by a substitution.

    weight: generator name -> torus degree; the coaction sends a letter x
    to t^weight(x) (x) x in the ordinary tensor product H (x) A (such a
    map does not preserve total degree, so the braided product would not
    make it multiplicative).  substitution: an explicit Hom into a tensor
    algebra, whose degree preservation Hom checks at construction.
    """

    kind: str
    source: AlgebraPresentation
    weights: Optional[Dict[str, TorusDegree]] = None
    hom: Optional[Hom] = None
    target: Optional[AlgebraPresentation] = None
    prefix: str = "h"

    def __post_init__(self):
        if self.kind not in ("weight", "substitution"):
            raise ValueError(f"unknown coaction kind {self.kind!r}")
        if self.kind == "weight":
            if self.weights is None:
                raise ValueError("weight coaction needs weights")
            for nm, w in self.weights.items():
                g = self.source.gens[self.source.index[nm]]
                if g.star is not None and g.star in self.weights:
                    if tuple(self.weights[g.star]) != dneg(w):
                        raise PresentationError(f"weight of {g.star} must be minus the weight of {nm}")
            if self.target is None:
                self._build_weight_target()
        elif self.hom is None:
            raise ValueError("substitution coaction needs a Hom")
        else:
            self.target = self.hom.target

    def _build_weight_target(self):
        H = torus_algebra(self.source.cocycle, prefix=self.prefix)
        T, iH, iA = tensor(H, self.source, braided=False, name=f"H(x){self.source.name}")
        imgs = {}
        for g in self.source.gens:
            w = self.weights.get(g.name, (0,) * self.source.cocycle.n)
            imgs[g.name] = grouplike(T, w, self.prefix) * T.gen(g.name)
        self.target = T
        self.hom = Hom(self.source, T, imgs, check=False)
        self._inc = iA

    def __call__(self, e: NcElement) -> NcElement:
        return self.hom(e)

    def is_coinvariant(self, e: NcElement) -> bool:
        if self.kind != "weight":
            raise ValueError("coinvariance test needs a weight coaction")
        return self.hom(e) == self._inc(e)


def apply_coaction(c: CoactionSpec, e: NcElement) -> NcElement:
    return c(e)


def coinvariants_grouplike(c: CoactionSpec, base, h_letters: Sequence[str] = TAU,
                           degree_bound: int = 3) -> List[Tuple[str, TorusDegree, NcElement]]:
    """For each nonzero base element x, the grouplikes h (|h_i| <= bound) with x h coinvariant.

    ``base`` holds generator names or (label, element) pairs; elements must
    be weight-homogeneous.  Every candidate is verified by applying the
    coaction.  ``h_letters`` names the torus letters of the source.
    """
    if c.kind != "weight":
        raise ValueError("coinvariant search needs a weight coaction")
    A = c.source
    n = A.cocycle.n
    out = []
    for item in base:
        label, x = (item, A.gen(item)) if isinstance(item, str) else item
        if x.is_zero():
            continue
        w = element_weight(c, x)
        for h in itertools.product(range(-degree_bound, degree_bound + 1), repeat=n):
            if dadd(w, _h_weight(c, h, h_letters)) != (0,) * n:
                continue
            elt = x * _h_elt(A, h, h_letters)
            if c.is_coinvariant(elt):
                out.append((label, tuple(h), elt))
    return out


def element_weight(c: CoactionSpec, x: NcElement) -> TorusDegree:
    """The common weight of the words of x under a weight coaction."""
    n = x.alg.cocycle.n
    ws = set()
    for w in x.terms:
        tot = (0,) * n
        for i in w:
            tot = dadd(tot, c.weights.get(x.alg.gens[i].name, (0,) * n))
        ws.add(tot)
    if len(ws) > 1:
        raise ValueError("element is not weight-homogeneous")
    return ws.pop() if ws else (0,) * n


def _h_elt(A, h, letters):
    out = A.one()
    for j, k in enumerate(h):
        nm = letters[2 * j] if k > 0 else letters[2 * j + 1]
        for _ in range(abs(k)):
            out = out * A.gen(nm)
    return out


def _h_weight(c, h, letters):
    n = len(h)
    tot = (0,) * n
    for j, k in enumerate(h):
        nm = letters[2 * j] if k > 0 else letters[2 * j + 1]
        w = c.weights.get(nm, (0,) * n)
        for _ in range(abs(k)):
            tot = dadd(tot, w)
    return tot


# -- the Sp coaction on the parameter space ---------------------------------------

def m_element(C: AlgebraPresentation, i: int, j: int) -> NcElement:
    """m_ij = sum_a (A_ai)^* A_aj."""
    return sum((C.gen(aname(a, i)).star() * C.gen(aname(a, j)) for a in range(1, 5)), C.zero())


class SpCoaction:
    """delta_L : A -> C (x) A with A = B(SL) >⊲· H and C = B(Sp), braided."""

    def __init__(self, F: CocycleData):
        self.F = F
        self.SL = BraidedMatrixBialgebra(F, "SL")
        self.A = Cobosonisation(self.SL)
        self.Sp = BraidedMatrixBialgebra(F, "Sp")
        Cs = self.Sp.alg
        ren = lambda n: n + "'"
        T, iC, iA = tensor(Cs, self.A.alg, braided=True, rename1=ren, name="Sp(x)A")
        self.target = T
        self.iA = iA
        imgs = {}
        for i in range(1, 5):
            for j in range(1, 5):
                imgs[aname(i, j)] = sum((T.gen(aname(i, a) + "'") * T.gen(aname(a, j))
                                         for a in range(1, 5)), T.zero())
        for t in TAU:
            imgs[t] = T.gen(t)
        self.hom = Hom(self.A.alg, T, imgs)
        self.relations = [iC(r) for r in Cs.relations]

    def __call__(self, e):
        return self.hom(e)

    def coinvariance_residual(self, e: NcElement) -> NcElement:
        return self.hom(e) - self.iA(e)

    def certify_coinvariant(self, e: NcElement):
        return ideal_member(self.target, self.coinvariance_residual(e), self.relations)


def verify_coinvariance_spL(samples: Sequence[Tuple[int, int, Sequence[int]]],
                            F: Optional[CocycleData] = None, perturb: bool = False) -> Report:
    """Certify delta_L(m_ij h) - 1 (x) m_ij h against the Sp relation span."""
    F = F or CocycleData.standard()
    co = SpCoaction(F)
    A = co.A.alg
    rep = Report()
    for i, j, h in samples:
        rep.checked += 1
        e = m_element(A, i, j) * grouplike(A, h)
        if perturb:
            e = e + A.gen(aname(1, 1)).star() * A.gen(aname(1, j)) * grouplike(A, h)
        try:
            co.certify_coinvariant(e)
        except NotCertified as exc:
            rep.fail(f"m_{i}{j} h={tuple(h)}: {exc}")
    return rep


@dataclass
class GaloisWitness:
    target: TorusDegree
    b: NcElement
    b_prime: NcElement
    image: NcElement


def galois_witness(c: CoactionSpec, targets: Sequence[Sequence[int]],
                   h_letters: Sequence[str] = TAU) -> List[GaloisWitness]:
    """For each grouplike h, the pair (h, h^*) with chi(b (x) b') = h (x) 1.

    chi(b (x) b') = delta(b) b'; for b = h, b' = h^* in the torus leg this is
    h (x) h h^* = h (x) 1.
    """
    A = c.source
    T = c.target
    out = []
    for h in targets:
        b = _h_elt(A, h, h_letters)
        bp = _h_elt(A, dneg(h), h_letters)
        img = c(b) * c._inc(bp)
        want = grouplike(T, _h_weight(c, h, h_letters), c.prefix)
        if img != want:
            raise AssertionError(f"Galois witness for {tuple(h)} failed")
        out.append(GaloisWitness(tuple(h), b, bp, img))
    return out
