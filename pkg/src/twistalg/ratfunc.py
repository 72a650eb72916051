"""Rational functions in z over Q(i) and a sparse exact linear solver.

Used by the ideal-membership certifier.  Numerators and denominators are
Laurent polynomials (PhaseScalar); denominators are kept as ordinary
polynomials with constant term present and leading coefficient one.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from .scalars import GaussianRational, PhaseScalar


def _to_poly(p: PhaseScalar) -> Tuple[int, List[GaussianRational]]:
    """Split a nonzero Laurent polynomial as z^shift * (dense polynomial)."""
    ks = p.exponents()
    lo, hi = ks[0], ks[-1]
    coeffs = [GaussianRational()] * (hi - lo + 1)
    for k, c in p.items():
        coeffs[k - lo] = c
    return lo, coeffs


def _from_poly(shift: int, coeffs: Sequence[GaussianRational]) -> PhaseScalar:
    return PhaseScalar({shift + i: c for i, c in enumerate(coeffs) if not c.is_zero()})


def _trim(c: List[GaussianRational]) -> List[GaussianRational]:
    while c and c[-1].is_zero():
        c.pop()
    return c


def _divmod(a: List[GaussianRational], b: List[GaussianRational]):
    a = list(a)
    q = [GaussianRational()] * max(len(a) - len(b) + 1, 0)
    inv = b[-1].inverse()
    while len(_trim(a)) >= len(b):
        f = a[-1] * inv
        s = len(a) - len(b)
        q[s] = f
        for i, bc in enumerate(b):
            a[s + i] = a[s + i] - f * bc
        a.pop()
    return q, _trim(a)


def _gcd(a: List[GaussianRational], b: List[GaussianRational]) -> List[GaussianRational]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _divmod(a, b)
        a, b = b, r
    inv = a[-1].inverse()
    return [c * inv for c in a]


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _canonical=False):
        num = PhaseScalar.coerce(num)
        den = PhaseScalar.one() if den is None else PhaseScalar.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if _canonical:
            self.num, self.den = num, den
            return
        if num.is_zero():
            self.num, self.den = num, PhaseScalar.one()
            return
        if den.is_monomial():
            self.num, self.den = num * den.inverse(), PhaseScalar.one()
            return
        ns, nc = _to_poly(num)
        ds, dc = _to_poly(den)
        g = _gcd(nc, dc)
        if len(g) > 1:
            nc, _ = _divmod(nc, g)
            dc, _ = _divmod(dc, g)
        lead = dc[-1].inverse()
        nc = [c * lead for c in nc]
        dc = [c * lead for c in dc]
        self.num = _from_poly(ns - ds, nc)
        self.den = _from_poly(0, dc)

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        return cls(PhaseScalar.coerce(x), None, True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_unit_monomial(self) -> bool:
        return self.num.is_monomial() and self.den == 1

    def is_polynomial(self) -> bool:
        return self.den == 1

    def __add__(self, other):
        o = RationalFunction.coerce(other)
        if self.den == o.den:
            if self.den == 1:
                return RationalFunction(self.num + o.num, None, True)
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, True)

    def __sub__(self, other):
        return self + (-RationalFunction.coerce(other))

    def __mul__(self, other):
        o = RationalFunction.coerce(other)
        if self.den == 1 and o.den == 1:
            return RationalFunction(self.num * o.num, None, True)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.num.is_monomial():
            return RationalFunction(self.den * self.num.inverse(), None, True)
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        return self * RationalFunction.coerce(other).inverse()

    def __eq__(self, other):
        o = RationalFunction.coerce(other)
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def render(self) -> str:
        if self.den == 1:
            return self.num.render()
        return f"[{self.num.render()}] / [{self.den.render()}]"

    __str__ = render
    __repr__ = render


def solve_sparse(rows: List[Dict[int, RationalFunction]], rhs: List[RationalFunction],
                 ncols: int) -> Optional[List[RationalFunction]]:
    """Solve sum_j rows[i][j] x_j = rhs[i].  Returns one solution (free
    variables set to zero) or None if the system is inconsistent."""
    work = [(dict(r), b) for r, b in zip(rows, rhs)]
    pivots: List[Tuple[int, Dict[int, RationalFunction], RationalFunction]] = []
    active = [i for i in range(len(work))]
    while active:
        # choose a pivot: prefer unit monomials, then short rows
        best = None
        for i in active:
            row, _ = work[i]
            if not row:
                continue
            for j, v in row.items():
                score = (0 if v.is_unit_monomial() else 1, len(row), j)
                if best is None or score < best[0]:
                    best = (score, i, j)
            if best is not None and best[0][0] == 0 and best[0][1] <= 2:
                break
        if best is None:
            break
        _, pi, pj = best
        prow, pb = work[pi]
        inv = prow[pj].inverse()
        prow = {j: v * inv for j, v in prow.items()}
        pb = pb * inv
        active.remove(pi)
        for i in active:
            row, b = work[i]
            f = row.get(pj)
            if f is None:
                continue
            for j, v in prow.items():
                nv = row.get(j)
                nv = -(f * v) if nv is None else nv - f * v
                if nv.is_zero():
                    row.pop(j, None)
                else:
                    row[j] = nv
            work[i] = (row, b - f * pb)
        pivots.append((pj, prow, pb))
    for i in active:
        row, b = work[i]
        if not row and not b.is_zero():
            return None
    x: List[RationalFunction] = [RationalFunction(0)] * ncols
    for pj, prow, pb in reversed(pivots):
        acc = pb
        for j, v in prow.items():
            if j != pj and not x[j].is_zero():
                acc = acc - v * x[j]
        x[pj] = acc
    return x
