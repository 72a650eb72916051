"""Exact coefficient arithmetic.

Coefficients are Laurent polynomials in one formal unit-modulus phase ``z``
with Gaussian-rational coefficients.  The phase is conjugated by inversion,
so ``star(z**k) == z**-k``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

from gmpy2 import mpq

Q = mpq
_ZERO = mpq(0)
_ONE = mpq(1)


def to_q(value) -> mpq:
    """Coerce ints, Fractions, strings like ``"3/4"`` and mpq to mpq."""
    if isinstance(value, type(_ZERO)):
        return value
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, (int, str)):
        return mpq(value)
    raise TypeError(f"cannot use {value!r} as an exact rational")


def _fmt_q(x) -> str:
    x = to_q(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class GaussianRational:
    """a + b i with exact rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = to_q(re)
        self.im = to_q(im)

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, complex):
            raise TypeError("floating point complex numbers are not exact")
        return cls(value, 0)

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __add__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * GaussianRational.coerce(other).inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({_fmt_q(self.re)}, {_fmt_q(self.im)})"

    def render(self) -> str:
        if not self.im:
            return _fmt_q(self.re)
        im = f"{_fmt_q(abs(self.im))}*i"
        if not self.re:
            return im if self.im > 0 else "-" + im
        sign = "+" if self.im > 0 else "-"
        return f"{_fmt_q(self.re)} {sign} {im}"

    __str__ = render


# -- raw coefficient helpers used by the hot paths of the engine -----------
# A raw coefficient is a pair (re, im) of mpq.

def cmul(a, b):
    ar, ai = a
    br, bi = b
    if not ai and not bi:
        return (ar * br, _ZERO)
    return (ar * br - ai * bi, ar * bi + ai * br)


def cneg(a):
    return (-a[0], -a[1])


class PhaseScalar:
    """Finite sum of c_k z^k; immutable, canonical (no zero coefficients)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean: Dict[int, GaussianRational] = {}
        if terms:
            for k, c in terms.items():
                c = GaussianRational.coerce(c)
                if not c.is_zero():
                    clean[int(k)] = c
        self._terms = clean
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def _raw(cls, terms: Dict[int, GaussianRational]) -> "PhaseScalar":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def from_raw(cls, raw: Mapping[int, Tuple]) -> "PhaseScalar":
        out = {}
        for k, (re, im) in raw.items():
            if re or im:
                g = GaussianRational.__new__(GaussianRational)
                g.re, g.im = re, im
                out[k] = g
        return cls._raw(out)

    @classmethod
    def coerce(cls, value) -> "PhaseScalar":
        if isinstance(value, PhaseScalar):
            return value
        return cls({0: GaussianRational.coerce(value)})

    @classmethod
    def monomial(cls, k: int, coeff=1) -> "PhaseScalar":
        return cls({k: coeff})

    @classmethod
    def zero(cls) -> "PhaseScalar":
        return cls._raw({})

    @classmethod
    def one(cls) -> "PhaseScalar":
        return cls.monomial(0)

    # inspection ---------------------------------------------------------
    @property
    def terms(self) -> Dict[int, GaussianRational]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def exponents(self) -> Tuple[int, ...]:
        return tuple(sorted(self._terms))

    def coefficient(self, k: int) -> GaussianRational:
        return self._terms.get(k, GaussianRational())

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        try:
            o = PhaseScalar.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for k, c in o._terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return PhaseScalar._raw(out)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return PhaseScalar._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        try:
            o = PhaseScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return PhaseScalar.coerce(other) - self

    def __mul__(self, other):
        try:
            o = PhaseScalar.coerce(other)
        except TypeError:
            return NotImplemented
        out: Dict[int, GaussianRational] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in o._terms.items():
                k = k1 + k2
                s = out.get(k)
                p = c1 * c2
                out[k] = p if s is None else s + p
        return PhaseScalar._raw({k: c for k, c in out.items() if not c.is_zero()})

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomial phases are invertible")
            return self.inverse() ** (-n)
        out = PhaseScalar.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> "PhaseScalar":
        if not self.is_monomial():
            raise ValueError("only monomial phases are invertible in the Laurent ring")
        (k, c), = self._terms.items()
        return PhaseScalar._raw({-k: c.inverse()})

    def shift(self, k: int) -> "PhaseScalar":
        return PhaseScalar._raw({e + k: c for e, c in self._terms.items()})

    def star(self) -> "PhaseScalar":
        return PhaseScalar._raw({-k: c.conj() for k, c in self._terms.items()})

    def at_one(self) -> GaussianRational:
        """Specialise z = 1."""
        total = GaussianRational()
        for c in self._terms.values():
            total = total + c
        return total

    # comparison ---------------------------------------------------------
    def __eq__(self, other):
        try:
            o = PhaseScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"PhaseScalar({self.render()!r})"

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, c in sorted(self._terms.items()):
            if k == 0:
                parts.append(f"({c.render()})")
            elif c == 1:
                parts.append(f"z^{k}")
            else:
                parts.append(f"({c.render()})*z^{k}")
        return " + ".join(parts)

    __str__ = render

    @classmethod
    def parse(cls, text: str, params: "DeformationParams | None" = None) -> "PhaseScalar":
        from .textio import parse_scalar
        return parse_scalar(text, params)


def phase_mul(a: PhaseScalar, b: PhaseScalar) -> PhaseScalar:
    return PhaseScalar.coerce(a) * PhaseScalar.coerce(b)


def phase_star(a: PhaseScalar) -> PhaseScalar:
    return PhaseScalar.coerce(a).star()


class DeformationParams:
    """The global denominator D with z = exp(i pi theta / D).

    ``trivial`` marks the undeformed cocycle (a zero matrix): theta then
    plays no role and mu, lambda and nu are all 1.
    """

    __slots__ = ("D", "trivial")

    def __init__(self, D: int = 2, trivial: bool = False):
        if D < 1:
            raise ValueError("denominator must be positive")
        self.D = int(D)
        self.trivial = bool(trivial)

    def _pow(self, k: int) -> PhaseScalar:
        return PhaseScalar.one() if self.trivial else PhaseScalar.monomial(self.D * k)

    def mu(self) -> PhaseScalar:
        return self._pow(1)

    def mu_bar(self) -> PhaseScalar:
        return self._pow(-1)

    def lam(self) -> PhaseScalar:
        return self._pow(2)

    def nu(self, r1: int, r2: int) -> PhaseScalar:
        return self._pow(r1 - r2 + 1)

    def aliases(self) -> Dict[str, PhaseScalar]:
        return {"mu": self.mu(), "lambda": self.lam()}

    def __eq__(self, other):
        return (isinstance(other, DeformationParams) and other.D == self.D
                and other.trivial == self.trivial)

    def __hash__(self):
        return hash((self.D, self.trivial))

    def __repr__(self):
        return f"DeformationParams(D={self.D}{', trivial' if self.trivial else ''})"


def lcm_all(values: Iterable[int]) -> int:
    from math import lcm
    out = 1
    for v in values:
        out = lcm(out, int(v))
    return out
