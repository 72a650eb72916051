"""Torus bicharacter cocycles.

A cocycle on the group algebra of Z^n is fixed by an antisymmetric matrix
Theta with rational entries measured in units of theta:

    F(a, b) = exp(i pi a.Theta.b) = z^(D a.Theta.b),   z = exp(i pi theta / D).

``convention="flip"`` (default) uses the negated matrix internally, which
reproduces the printed commutation relations of the four-dimensional
examples.  ``convention="verbatim"`` uses the matrix as given.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple

from .scalars import DeformationParams, PhaseScalar, lcm_all

TorusDegree = Tuple[int, ...]

FLIP = "flip"
VERBATIM = "verbatim"


def degree(*entries: int) -> TorusDegree:
    return tuple(int(e) for e in entries)


def dadd(a: Sequence[int], b: Sequence[int]) -> TorusDegree:
    return tuple(x + y for x, y in zip(a, b))


def dneg(a: Sequence[int]) -> TorusDegree:
    return tuple(-x for x in a)


def dsub(a: Sequence[int], b: Sequence[int]) -> TorusDegree:
    return tuple(x - y for x, y in zip(a, b))


def dscale(k: int, a: Sequence[int]) -> TorusDegree:
    return tuple(k * x for x in a)


def tau_degrees() -> List[TorusDegree]:
    """Degrees of (t1, t1*, t2, t2*)."""
    return [(1, 0), (-1, 0), (0, 1), (0, -1)]


class CocycleData:
    """Immutable cocycle description."""

    __slots__ = ("n", "theta", "convention", "effective", "D", "params", "_int")

    def __init__(self, theta: Sequence[Sequence], convention: str = FLIP):
        rows = [[Fraction(x) for x in row] for row in theta]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("theta matrix must be square")
        for i in range(n):
            for j in range(n):
                if rows[i][j] != -rows[j][i]:
                    raise ValueError("theta matrix must be antisymmetric")
        if convention not in (FLIP, VERBATIM):
            raise ValueError(f"unknown convention {convention!r}")
        self.n = n
        self.theta = tuple(tuple(r) for r in rows)
        self.convention = convention
        sign = -1 if convention == FLIP else 1
        self.effective = tuple(tuple(sign * x for x in r) for r in rows)
        self.D = lcm_all(x.denominator for r in self.effective for x in r)
        self._int = tuple(tuple(int(x * self.D) for x in r) for r in self.effective)
        self.params = DeformationParams(self.D, trivial=not any(any(r) for r in self._int))

    @classmethod
    def classical(cls, n: int = 2) -> "CocycleData":
        """The zero matrix: the undeformed product (zeta = 1)."""
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def standard(cls, convention: str = FLIP) -> "CocycleData":
        """The rank-two cocycle Theta = 1/2 [[0, theta], [-theta, 0]]."""
        h = Fraction(1, 2)
        return cls([[0, h], [-h, 0]], convention)

    def exponent(self, a: Sequence[int], b: Sequence[int]) -> int:
        if len(a) != self.n or len(b) != self.n:
            raise ValueError(f"degree length must be {self.n}")
        m = self._int
        total = 0
        for i, ai in enumerate(a):
            if ai:
                row = m[i]
                for j, bj in enumerate(b):
                    if bj:
                        total += ai * row[j] * bj
        return total

    def with_convention(self, convention: str) -> "CocycleData":
        return CocycleData(self.theta, convention)

    def __eq__(self, other):
        return (isinstance(other, CocycleData) and self.theta == other.theta
                and self.convention == other.convention)

    def __hash__(self):
        return hash((self.theta, self.convention))

    def __repr__(self):
        return f"CocycleData(theta={[[str(x) for x in r] for r in self.theta]}, convention={self.convention!r})"


def cocycle_value(F: CocycleData, a: Sequence[int], b: Sequence[int]) -> PhaseScalar:
    return PhaseScalar.monomial(F.exponent(a, b))


def cocycle_inverse_value(F: CocycleData, a, b) -> PhaseScalar:
    return PhaseScalar.monomial(-F.exponent(a, b))


def swap_phase(F: CocycleData, x, y) -> PhaseScalar:
    """Phase p with X Y = p Y X for letters of degrees x, y."""
    return PhaseScalar.monomial(2 * F.exponent(x, y))


def r_matrix(F: CocycleData, a, b) -> PhaseScalar:
    """R_F = F^-2."""
    return PhaseScalar.monomial(-2 * F.exponent(a, b))


def eta_matrix(F: CocycleData, degrees: Sequence[Sequence[int]] | None = None):
    degs = list(degrees) if degrees is not None else tau_degrees()
    return [[r_matrix(F, a, b) for b in degs] for a in degs]


def printed_eta(params: DeformationParams):
    """The 4x4 eta matrix as printed for the rank-two example."""
    one = PhaseScalar.one()
    mu, mub = params.mu(), params.mu_bar()
    return [[one, one, mu, mub],
            [one, one, mub, mu],
            [mub, mu, one, one],
            [mu, mub, one, one]]


@dataclass
class CocycleReport:
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_cocycle_condition(F: CocycleData, triples) -> CocycleReport:
    """Check the two-cocycle identity, unitality, invertibility and the
    bicharacter laws on grouplike triples (f, g, h)."""
    rep = CocycleReport()
    zero = (0,) * F.n
    one = PhaseScalar.one()
    for f, g, h in triples:
        rep.checked += 1
        lhs = (cocycle_value(F, g, f) * cocycle_value(F, h, dadd(g, f))
               * cocycle_inverse_value(F, dadd(h, g), f) * cocycle_inverse_value(F, h, g))
        if lhs != one:
            rep.failures.append(f"cocycle {f},{g},{h}: {lhs}")
        for a in (f, g, h):
            if cocycle_value(F, a, zero) != one or cocycle_value(F, zero, a) != one:
                rep.failures.append(f"unital {a}")
        if cocycle_value(F, f, g) * cocycle_inverse_value(F, f, g) != one:
            rep.failures.append(f"invertible {f},{g}")
        if cocycle_value(F, dadd(f, g), h) != cocycle_value(F, f, h) * cocycle_value(F, g, h):
            rep.failures.append(f"left bicharacter {f},{g},{h}")
        if cocycle_value(F, f, dadd(g, h)) != cocycle_value(F, f, h) * cocycle_value(F, f, g):
            rep.failures.append(f"right bicharacter {f},{g},{h}")
        if r_matrix(F, f, g) * r_matrix(F, g, f) != one:
            rep.failures.append(f"cotriangular {f},{g}")
    return rep


def box_triples(n: int, radius: int = 1):
    pts = list(itertools.product(range(-radius, radius + 1), repeat=n))
    return itertools.product(pts, pts, pts)


@dataclass(frozen=True)
class TwistData:
    U: PhaseScalar
    V: PhaseScalar
    antipode_degree: TorusDegree
    star_degree: TorusDegree


def grouplike_twist_data(F: CocycleData, h: Sequence[int]) -> TwistData:
    """U(h) = F(h, Sh) and V(h) = U^-1(h) U(S^-1 h) on a grouplike t^h.

    For grouplikes the twisted antipode U S U^-1 and the twisted star
    conj(V^-1) (.)^* conj(V) only rescale by these values, so both keep
    the undeformed degree when U = V = 1.
    """
    h = tuple(h)
    U = cocycle_value(F, h, dneg(h))
    V = U.inverse() * cocycle_value(F, dneg(h), h)
    anti = dneg(h)
    star = dneg(h)
    return TwistData(U, V, anti, star)


def is_real_cocycle(F: CocycleData, a, b) -> bool:
    """conj F(a, b) == F((S^2 b)^*, (S^2 a)^*) for grouplikes."""
    return cocycle_value(F, a, b).star() == cocycle_value(F, dneg(b), dneg(a))
