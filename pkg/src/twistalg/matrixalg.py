"""Matrices over NcElement and the projection / isometry predicates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

from .algebra import (AlgebraPresentation, Hom, NcElement, NotCertified, PresentationError,
                      ideal_member)

Reducer = Callable[[NcElement], NcElement]


class NcMatrix:
    __slots__ = ("alg", "rows", "cols", "entries")

    def __init__(self, alg: AlgebraPresentation, entries: Sequence[Sequence]):
        self.alg = alg
        ent = [[e if isinstance(e, NcElement) else alg.scalar(e) for e in row] for row in entries]
        if not ent or not ent[0]:
            raise ValueError("matrix must be non-empty")
        if any(len(r) != len(ent[0]) for r in ent):
            raise ValueError("ragged matrix rows")
        for row in ent:
            for e in row:
                if e.alg is not alg:
                    raise PresentationError("matrix entry from a different presentation")
        self.entries: List[List[NcElement]] = ent
        self.rows = len(ent)
        self.cols = len(ent[0])

    @classmethod
    def identity(cls, alg, n: int) -> "NcMatrix":
        return cls(alg, [[alg.one() if i == j else alg.zero() for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, alg, r: int, c: int) -> "NcMatrix":
        return cls(alg, [[alg.zero()] * c for _ in range(r)])

    @classmethod
    def diagonal(cls, alg, diag: Sequence) -> "NcMatrix":
        n = len(diag)
        return cls(alg, [[diag[i] if i == j else alg.zero() for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @property
    def shape(self):
        return (self.rows, self.cols)

    def _same(self, other: "NcMatrix"):
        if other.alg is not self.alg:
            raise PresentationError("matrices over different presentations")

    def __add__(self, other: "NcMatrix") -> "NcMatrix":
        self._same(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return NcMatrix(self.alg, [[a + b for a, b in zip(r1, r2)]
                                   for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self):
        return NcMatrix(self.alg, [[-a for a in r] for r in self.entries])

    def __sub__(self, other: "NcMatrix") -> "NcMatrix":
        return self + (-other)

    def scale(self, s) -> "NcMatrix":
        """Entrywise s * M for a scalar or an element multiplied on the left."""
        if isinstance(s, NcElement):
            return NcMatrix(self.alg, [[s * a for a in r] for r in self.entries])
        return NcMatrix(self.alg, [[a.scale(s) for a in r] for r in self.entries])

    def rscale(self, s: NcElement) -> "NcMatrix":
        return NcMatrix(self.alg, [[a * s for a in r] for r in self.entries])

    def __matmul__(self, other: "NcMatrix") -> "NcMatrix":
        return mat_mul(self, other)

    def adjoint(self) -> "NcMatrix":
        return NcMatrix(self.alg, [[self.entries[j][i].star() for j in range(self.rows)]
                                   for i in range(self.cols)])

    def map(self, f: Callable[[NcElement], NcElement], alg: Optional[AlgebraPresentation] = None) -> "NcMatrix":
        out = [[f(a) for a in r] for r in self.entries]
        return NcMatrix(alg or (out[0][0].alg), out)

    def apply(self, hom: Hom) -> "NcMatrix":
        return NcMatrix(hom.target, [[hom(a) for a in r] for r in self.entries])

    def is_zero(self) -> bool:
        return all(a.is_zero() for r in self.entries for a in r)

    def transpose(self) -> "NcMatrix":
        return NcMatrix(self.alg, [[self.entries[j][i] for j in range(self.rows)] for i in range(self.cols)])

    def block(self, other: "NcMatrix") -> "NcMatrix":
        """Horizontal concatenation (self other)."""
        self._same(other)
        if self.rows != other.rows:
            raise ValueError("row mismatch")
        return NcMatrix(self.alg, [r1 + r2 for r1, r2 in zip(self.entries, other.entries)])

    def __eq__(self, other):
        return (isinstance(other, NcMatrix) and other.alg is self.alg and self.shape == other.shape
                and all(a == b for r1, r2 in zip(self.entries, other.entries) for a, b in zip(r1, r2)))

    def __hash__(self):
        return hash((self.rows, self.cols))

    def render(self) -> str:
        return "[" + ",\n ".join("[" + ", ".join(a.render() for a in r) + "]" for r in self.entries) + "]"

    __str__ = render

    def __repr__(self):
        return f"NcMatrix({self.rows}x{self.cols})"


def mat_mul(A: NcMatrix, B: NcMatrix) -> NcMatrix:
    A._same(B)
    if A.cols != B.rows:
        raise ValueError(f"cannot multiply {A.shape} by {B.shape}")
    alg = A.alg
    out = []
    for i in range(A.rows):
        row = []
        for j in range(B.cols):
            acc = alg.zero()
            for k in range(A.cols):
                a = A.entries[i][k]
                if a.is_zero():
                    continue
                b = B.entries[k][j]
                if b.is_zero():
                    continue
                acc = acc + a * b
            row.append(acc)
        out.append(row)
    return NcMatrix(alg, out)


@dataclass
class CheckResult:
    """Outcome of a matrix predicate; residual is None on success."""

    ok: bool
    residual: Optional[NcMatrix] = None
    detail: str = ""

    def __bool__(self):
        return self.ok

    def render(self) -> str:
        if self.ok:
            return "ok"
        return self.detail + ("" if self.residual is None else "\n" + self.residual.render())


def _reduce_entry(e: NcElement, reducer: Optional[Reducer], relations) -> NcElement:
    if reducer is not None:
        e = reducer(e)
    if e.is_zero() or relations is None:
        return e
    try:
        ideal_member(e.alg, e, relations)
        return e.alg.zero()
    except NotCertified:
        return e


def residual_zero(M: NcMatrix, reducer: Optional[Reducer] = None, relations=None) -> CheckResult:
    R = M.map(lambda e: _reduce_entry(e, reducer, relations), M.alg)
    if R.is_zero():
        return CheckResult(True)
    return CheckResult(False, R, "nonzero residual")


def is_projection(M: NcMatrix, reducer: Optional[Reducer] = None, relations=None) -> CheckResult:
    """M^2 == M and M^* == M, each residual entry optionally reduced."""
    if M.rows != M.cols:
        return CheckResult(False, None, "not square")
    r1 = residual_zero(mat_mul(M, M) - M, reducer, relations)
    if not r1:
        r1.detail = "M^2 - M"
        return r1
    r2 = residual_zero(M.adjoint() - M, reducer, relations)
    if not r2:
        r2.detail = "M^* - M"
        return r2
    return CheckResult(True)


def is_unitary(U: NcMatrix, reducer: Optional[Reducer] = None, relations=None) -> CheckResult:
    if U.rows != U.cols:
        return CheckResult(False, None, "not square")
    I = NcMatrix.identity(U.alg, U.rows)
    r = residual_zero(mat_mul(U, U.adjoint()) - I, reducer, relations)
    if not r:
        r.detail = "U U^* - 1"
        return r
    r = residual_zero(mat_mul(U.adjoint(), U) - I, reducer, relations)
    if not r:
        r.detail = "U^* U - 1"
        return r
    return CheckResult(True)


def check_mvn_equivalence(V: NcMatrix, P: NcMatrix, Q: NcMatrix,
                          reducer: Optional[Reducer] = None, relations=None) -> CheckResult:
    """V^* V == P and V V^* == Q."""
    r = residual_zero(mat_mul(V.adjoint(), V) - P, reducer, relations)
    if not r:
        r.detail = "V^* V - P"
        return r
    r = residual_zero(mat_mul(V, V.adjoint()) - Q, reducer, relations)
    if not r:
        r.detail = "V V^* - Q"
        return r
    return CheckResult(True)


class NotUnitary(ValueError):
    def __init__(self, result: CheckResult):
        super().__init__("matrix is not unitary: " + result.detail)
        self.result = result


def conjugate_by_unitary(U: NcMatrix, M: NcMatrix, reducer: Optional[Reducer] = None,
                         relations=None) -> NcMatrix:
    """U M U^*, after verifying U U^* = U^* U = 1."""
    chk = is_unitary(U, reducer, relations)
    if not chk:
        raise NotUnitary(chk)
    return mat_mul(mat_mul(U, M), U.adjoint())


def clear_central_inverse(inv_name: str, value: NcElement) -> Reducer:
    """Reducer for an adjoined central inverse s = value^-1.

    An element sum_n c_n s^n is replaced by sum_n c_n value^(N-n), with N
    the top power of s.  This vanishes iff the original does in the
    localisation, provided value is central and not a zero divisor.
    """
    A = value.alg
    s = A.index[inv_name]

    def reduce(e: NcElement) -> NcElement:
        if e.is_zero():
            return e
        by_power: dict = {}
        for (w, k), c in e.raw_items():
            n = w.count(s)
            rest = tuple(i for i in w if i != s)
            by_power.setdefault(n, {})[(rest, k)] = c
        top = max(by_power)
        out = A.zero()
        powers = {0: A.one()}
        for n in range(1, top + 1):
            powers[n] = powers[n - 1] * value
        for n, d in by_power.items():
            out = out + A.normalize(NcElement(A, d)) * powers[top - n]
        return out

    return reduce
