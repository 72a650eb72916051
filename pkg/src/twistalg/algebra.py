"""Normal-ordering engine for phase-commuting *-algebras.

Every pair of generators commutes up to a phase: X Y = F^2(x, y) Y X for
letters of torus degrees x and y, with three refinements:

* central generators commute with everything with phase one;
* letters of two factors listed in ``plain_pairs`` commute with phase one
  (ordinary, unbraided tensor products, and the commutative group-like leg
  of a cross product);
* two letters of odd form degree pick up an extra sign, so the square of
  an odd letter vanishes.

Words are tuples of generator indices.  The canonical form of a word is the
stable sort by index, followed by single-word rewrite rules applied to a
fixpoint.  Elements store a flat map ``(word, z-exponent) -> (re, im)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .cocycle import CocycleData, TorusDegree, dadd
from .ratfunc import RationalFunction, solve_sparse
from .scalars import GaussianRational, PhaseScalar, cmul, to_q

_ZERO = to_q(0)
_ONE = (to_q(1), _ZERO)
_MONE = (to_q(-1), _ZERO)

Word = Tuple[int, ...]


class RewriteError(RuntimeError):
    """A rule set failed to terminate within the iteration guard."""


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Generator:
    name: str
    degree: TorusDegree
    star: Optional[str] = None
    star_coeff: Optional[PhaseScalar] = None
    factor: int = 0
    central: bool = False
    form: int = 0


def _acc(d: dict, key, c):
    old = d.get(key)
    if old is None:
        d[key] = c
    else:
        re = old[0] + c[0]
        im = old[1] + c[1]
        if re or im:
            d[key] = (re, im)
        else:
            del d[key]


def _scalar_raw(s: PhaseScalar):
    return [(k, (c.re, c.im)) for k, c in s.items()]


class AlgebraPresentation:
    """Ordered generators, cocycle, rewrite rules and relation span."""

    MAX_REWRITES = 200000

    def __init__(self, generators: Sequence[Generator], cocycle: CocycleData,
                 plain_pairs: Iterable[Tuple[int, int]] = (), name: str = ""):
        self.name = name
        self.gens: Tuple[Generator, ...] = tuple(generators)
        self.cocycle = cocycle
        self.index: Dict[str, int] = {}
        for i, g in enumerate(self.gens):
            if g.name in self.index:
                raise PresentationError(f"duplicate generator {g.name!r}")
            if len(g.degree) != cocycle.n:
                raise PresentationError(f"generator {g.name!r} has degree of wrong length")
            self.index[g.name] = i
        self.plain_pairs = frozenset(tuple(sorted(p)) for p in plain_pairs)
        self.rules: List[Tuple[Word, "NcElement"]] = []
        self.relations: List["NcElement"] = []
        self._build_tables()
        self._raw_cache: Dict[Word, list] = {}
        self._rule_letters: frozenset = frozenset()

    # -- tables ---------------------------------------------------------
    def _build_tables(self):
        n = len(self.gens)
        F = self.cocycle
        E = [[0] * n for _ in range(n)]
        N = [[False] * n for _ in range(n)]
        for i, a in enumerate(self.gens):
            for j, b in enumerate(self.gens):
                N[i][j] = bool(a.form % 2 and b.form % 2)
                if a.central or b.central:
                    continue
                if tuple(sorted((a.factor, b.factor))) in self.plain_pairs:
                    continue
                E[i][j] = 2 * F.exponent(a.degree, b.degree)
        self._E = E
        self._odd = frozenset(i for i, g in enumerate(self.gens) if g.form % 2)
        self._N = N
        self._star_idx: List[Optional[int]] = []
        self._star_coeff: List[Optional[list]] = []
        for g in self.gens:
            if g.star is None:
                self._star_idx.append(None)
                self._star_coeff.append(None)
                continue
            if g.star not in self.index:
                raise PresentationError(f"star partner {g.star!r} of {g.name!r} is undeclared")
            self._star_idx.append(self.index[g.star])
            c = g.star_coeff
            self._star_coeff.append(None if c is None or c == 1 else _scalar_raw(c))
        for i, g in enumerate(self.gens):
            j = self._star_idx[i]
            if j is None:
                continue
            h = self.gens[j]
            if h.star != g.name:
                raise PresentationError(f"star pairing of {g.name!r} is not an involution")
            if tuple(-x for x in g.degree) != h.degree:
                raise PresentationError(f"deg({g.name}*) must be -deg({g.name})")
            if g.form != h.form:
                raise PresentationError(f"{g.name} and its star differ in form degree")
            c1 = g.star_coeff if g.star_coeff is not None else PhaseScalar.one()
            c2 = h.star_coeff if h.star_coeff is not None else PhaseScalar.one()
            if c1 * c2.star() != 1:
                raise PresentationError(f"star coefficients of {g.name!r} do not give an involution")

    # -- basic queries ----------------------------------------------------
    def __len__(self):
        return len(self.gens)

    def __contains__(self, name):
        return name in self.index

    def gen(self, name: str) -> "NcElement":
        try:
            i = self.index[name]
        except KeyError:
            raise PresentationError(f"unknown generator {name!r}") from None
        return NcElement(self, {((i,), 0): _ONE})

    def g(self, *names: str) -> "NcElement":
        """Product of the named generators."""
        out = self.one()
        for n in names:
            out = out * self.gen(n)
        return out

    def one(self) -> "NcElement":
        return NcElement(self, {((), 0): _ONE})

    def zero(self) -> "NcElement":
        return NcElement(self, {})

    def scalar(self, s) -> "NcElement":
        s = PhaseScalar.coerce(s)
        return NcElement(self, {((), k): c for k, c in _scalar_raw(s)})

    def word_degree(self, w: Word) -> TorusDegree:
        d = (0,) * self.cocycle.n
        for i in w:
            d = dadd(d, self.gens[i].degree)
        return d

    def word_form(self, w: Word) -> int:
        return sum(self.gens[i].form for i in w)

    def swap_exponent(self, i: int, j: int) -> Tuple[int, bool]:
        return self._E[i][j], self._N[i][j]

    def names(self, w: Word) -> Tuple[str, ...]:
        return tuple(self.gens[i].name for i in w)

    # -- normal ordering ---------------------------------------------------
    def _sort(self, raw: Word) -> Tuple[Word, int, bool]:
        E, N = self._E, self._N
        e = 0
        neg = False
        L = len(raw)
        for p in range(L):
            a = raw[p]
            Ea, Na = E[a], N[a]
            for q in range(p + 1, L):
                b = raw[q]
                if a > b:
                    e += Ea[b]
                    if Na[b]:
                        neg = not neg
        return tuple(sorted(raw)), e, neg

    def _nf_raw(self, raw: Word, _depth: int = 0) -> list:
        """Normal form of a raw word as [(word, exp, coeff)]."""
        hit = self._raw_cache.get(raw)
        if hit is not None:
            return hit
        s, e, neg = self._sort(raw)
        if self._odd and any(a == b and a in self._odd for a, b in zip(s, s[1:])):
            self._raw_cache[raw] = []
            return []
        if not self.rules or self._rule_letters.isdisjoint(s):
            out = [(s, e, _MONE if neg else _ONE)]
        else:
            base = self._nf_sorted(s, _depth)
            out = []
            for w, e2, c in base:
                out.append((w, e + e2, (-c[0], -c[1]) if neg else c))
        self._raw_cache[raw] = out
        return out

    def _nf_sorted(self, s: Word, depth: int) -> list:
        if depth > 400:
            raise RewriteError("rewrite depth exceeded; rule set does not terminate")
        cnt = None
        for lhs, rhs, lhs_count in self._rule_data:
            if cnt is None:
                cnt = Counter(s)
            if all(cnt[g] >= k for g, k in lhs_count.items()):
                rest_count = cnt - lhs_count
                rest = tuple(sorted(rest_count.elements()))
                _, pe, pneg = self._sort(lhs + rest)
                acc: dict = {}
                for (rw, re_), rc in rhs._d.items():
                    for w, e2, c2 in self._nf_raw(rw + rest, depth + 1):
                        c = cmul(rc, c2)
                        if pneg:
                            c = (-c[0], -c[1])
                        _acc(acc, (w, re_ + e2 - pe), c)
                return [(w, e, c) for (w, e), c in acc.items()]
        return [(s, 0, _ONE)]

    def _normalize_dict(self, d: Mapping) -> dict:
        out: dict = {}
        for (w, e), c in d.items():
            for w2, e2, c2 in self._nf_raw(w):
                _acc(out, (w2, e + e2), cmul(c, c2) if c2 is not _ONE else c)
        return out

    def normalize(self, e: "NcElement") -> "NcElement":
        self._check_owner(e)
        return NcElement(self, self._normalize_dict(e._d))

    def element(self, raw_terms: Iterable[Tuple[Sequence[str], object]]) -> "NcElement":
        """Build and normalise sum(coeff * word) from generator names."""
        d: dict = {}
        for names, coeff in raw_terms:
            w = tuple(self.index[n] for n in names)
            for k, c in _scalar_raw(PhaseScalar.coerce(coeff)):
                _acc(d, (w, k), c)
        return NcElement(self, self._normalize_dict(d))

    def multiply(self, a: "NcElement", b: "NcElement") -> "NcElement":
        self._check_owner(a)
        self._check_owner(b)
        out: dict = {}
        nf = self._nf_raw
        for (w1, e1), c1 in a._d.items():
            for (w2, e2), c2 in b._d.items():
                c = cmul(c1, c2)
                base = e1 + e2
                for w, e3, c3 in nf(w1 + w2):
                    _acc(out, (w, base + e3), c if c3 is _ONE else cmul(c, c3))
        return NcElement(self, out)

    def star(self, e: "NcElement") -> "NcElement":
        self._check_owner(e)
        d: dict = {}
        sidx, scoef = self._star_idx, self._star_coeff
        for (w, k), (re, im) in e._d.items():
            try:
                raw = tuple(sidx[i] for i in reversed(w))
            except TypeError:
                raise PresentationError("star of a generator without a star partner") from None
            if None in raw:
                bad = [self.gens[i].name for i in w if sidx[i] is None]
                raise PresentationError(f"generator {bad[0]!r} has no star partner")
            terms = [(-k, (re, -im))]
            for i in w:
                sc = scoef[i]
                if sc is not None:
                    terms = [(k1 + k2, cmul(c1, c2)) for k1, c1 in terms for k2, c2 in sc]
            for k2, c in terms:
                _acc(d, (raw, k2), c)
        return NcElement(self, self._normalize_dict(d))

    # -- rules and relations -----------------------------------------------
    def _measure_ok(self, lhs: Word, w: Word) -> bool:
        if len(w) != len(lhs):
            return len(w) < len(lhs)
        return tuple(sorted(w, reverse=True)) < tuple(sorted(lhs, reverse=True))

    def add_rule(self, lhs_names: Sequence[str], rhs: "NcElement") -> None:
        """Register the oriented rule lhs -> rhs (lhs a single word)."""
        self._check_owner(rhs)
        lhs = tuple(sorted(self.index[n] for n in lhs_names))
        dl = self.word_degree(lhs)
        fl = self.word_form(lhs)
        for (w, _k) in rhs._d:
            if self.word_degree(w) != dl or self.word_form(w) != fl:
                raise PresentationError(f"rule {self.names(lhs)} -> ... is not degree homogeneous")
            if not self._measure_ok(lhs, w):
                raise PresentationError(f"rule {self.names(lhs)} does not decrease the word order")
        self.rules.append((lhs, rhs))
        self._rule_data = [(l, r, Counter(l)) for l, r in self.rules]
        self._rule_letters = frozenset(i for l, _ in self.rules for i in l)
        self._raw_cache.clear()

    _rule_data: list = []

    def add_relation(self, rel: "NcElement", with_star: bool = True) -> None:
        self._check_owner(rel)
        if rel.is_zero():
            return
        self.relations.append(rel)
        if with_star:
            s = self.star(rel)
            if s != rel and (-s) != rel:
                self.relations.append(s)

    def _check_owner(self, e: "NcElement"):
        if e.alg is not self:
            raise PresentationError("element belongs to a different presentation")

    # -- predicates -------------------------------------------------------
    def commutator(self, a: "NcElement", b: "NcElement") -> "NcElement":
        return a * b - b * a

    def is_central(self, name: str) -> bool:
        x = self.gen(name)
        return all((self.commutator(x, self.gen(g.name))).is_zero() for g in self.gens)

    def __repr__(self):
        return f"AlgebraPresentation({self.name!r}, {len(self.gens)} generators)"


class NcElement:
    """Immutable noncommutative polynomial with phase coefficients."""

    __slots__ = ("alg", "_d")

    def __init__(self, alg: AlgebraPresentation, d: dict):
        self.alg = alg
        self._d = d

    # coercion -----------------------------------------------------------
    def _lift(self, other) -> "NcElement":
        if isinstance(other, NcElement):
            if other.alg is not self.alg:
                raise PresentationError("elements from different presentations")
            return other
        return self.alg.scalar(other)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = self._lift(other)
        d = dict(self._d)
        for k, c in o._d.items():
            _acc(d, k, c)
        return NcElement(self.alg, d)

    __radd__ = __add__

    def __neg__(self):
        return NcElement(self.alg, {k: (-c[0], -c[1]) for k, c in self._d.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, s) -> "NcElement":
        s = PhaseScalar.coerce(s)
        d: dict = {}
        raw = _scalar_raw(s)
        for (w, k), c in self._d.items():
            for k2, c2 in raw:
                _acc(d, (w, k + k2), cmul(c, c2))
        return NcElement(self.alg, d)

    def __mul__(self, other):
        if isinstance(other, NcElement):
            return self.alg.multiply(self, self._lift(other))
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, NcElement):
            return other.__mul__(self)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __pow__(self, n: int):
        out = self.alg.one()
        for _ in range(n):
            out = out * self
        return out

    def star(self) -> "NcElement":
        return self.alg.star(self)

    # inspection ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self._d

    def __bool__(self):
        return bool(self._d)

    @property
    def terms(self) -> Dict[Word, PhaseScalar]:
        grouped: Dict[Word, dict] = {}
        for (w, k), c in self._d.items():
            grouped.setdefault(w, {})[k] = c
        return {w: PhaseScalar.from_raw(t) for w, t in grouped.items()}

    def named_terms(self) -> Dict[Tuple[str, ...], PhaseScalar]:
        return {self.alg.names(w): s for w, s in self.terms.items()}

    def words(self) -> List[Word]:
        return sorted({w for (w, _k) in self._d}, key=lambda w: (len(w), w))

    def coefficient(self, names: Sequence[str]) -> PhaseScalar:
        w = tuple(sorted(self.alg.index[n] for n in names))
        return self.terms.get(w, PhaseScalar.zero())

    def raw_items(self):
        return self._d.items()

    def num_terms(self) -> int:
        return len({w for (w, _k) in self._d})

    def degrees(self) -> set:
        return {self.alg.word_degree(w) for (w, _k) in self._d}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> Optional[TorusDegree]:
        ds = self.degrees()
        if len(ds) > 1:
            raise ValueError("element is not homogeneous")
        return next(iter(ds)) if ds else None

    def max_length(self) -> int:
        return max((len(w) for (w, _k) in self._d), default=0)

    def at_one(self) -> Dict[Tuple[str, ...], GaussianRational]:
        """Coefficients with z specialised to 1, keyed by generator names."""
        out: Dict[Tuple[str, ...], GaussianRational] = {}
        for w, s in self.terms.items():
            v = s.at_one()
            if not v.is_zero():
                out[self.alg.names(w)] = v
        return out

    def scalar_part(self) -> PhaseScalar:
        return self.terms.get((), PhaseScalar.zero())

    def __eq__(self, other):
        if isinstance(other, NcElement):
            return self.alg is other.alg and self._d == other._d
        try:
            return self == self.alg.scalar(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._d.items()))

    def render(self) -> str:
        from .textio import render_element
        return render_element(self)

    __str__ = render

    def __repr__(self):
        return f"NcElement({self.render()})"


# -- module-level operations ------------------------------------------------

def normalize(A: AlgebraPresentation, e: NcElement) -> NcElement:
    return A.normalize(e)


def multiply(A: AlgebraPresentation, a: NcElement, b: NcElement) -> NcElement:
    return A.multiply(a, b)


def star(A: AlgebraPresentation, e: NcElement) -> NcElement:
    return A.star(e)


def _rebase(gens, offset, rename):
    out = []
    for g in gens:
        out.append(Generator(rename(g.name), g.degree,
                             None if g.star is None else rename(g.star),
                             g.star_coeff, g.factor + offset, g.central, g.form))
    return out


def tensor(A1: AlgebraPresentation, A2: AlgebraPresentation, *, braided: bool = True,
           rename1: Callable[[str], str] = lambda s: s,
           rename2: Callable[[str], str] = lambda s: s,
           name: str = "") -> Tuple[AlgebraPresentation, "Hom", "Hom"]:
    """Tensor product with A1 letters ordered before A2 letters.

    Cross-factor letters swap by the uniform rule when ``braided`` and with
    phase one otherwise.  Returns the product and the two inclusions.
    """
    if A1.cocycle != A2.cocycle:
        raise PresentationError("tensor factors must share the cocycle")
    f1 = {g.factor for g in A1.gens} or {0}
    offset = max(f1) + 1
    f2 = {g.factor + offset for g in A2.gens}
    gens = _rebase(A1.gens, 0, rename1) + _rebase(A2.gens, offset, rename2)
    plain = set(A1.plain_pairs)
    plain |= {(a + offset, b + offset) for a, b in A2.plain_pairs}
    if not braided:
        plain |= {(a, b) for a in f1 for b in f2}
    T = AlgebraPresentation(gens, A1.cocycle, plain, name or f"{A1.name}(x){A2.name}")
    i1 = Hom.by_names(A1, T, {g.name: rename1(g.name) for g in A1.gens}, check=False)
    i2 = Hom.by_names(A2, T, {g.name: rename2(g.name) for g in A2.gens}, check=False)
    for lhs, rhs in A1.rules:
        T.add_rule([rename1(A1.gens[i].name) for i in lhs], i1(rhs))
    for lhs, rhs in A2.rules:
        T.add_rule([rename2(A2.gens[i].name) for i in lhs], i2(rhs))
    for r in A1.relations:
        T.relations.append(i1(r))
    for r in A2.relations:
        T.relations.append(i2(r))
    return T, i1, i2


def braided_tensor(A1, A2, **kw):
    return tensor(A1, A2, braided=True, **kw)


class Hom:
    """Substitution map generator -> element, extended multiplicatively.

    ``reverse`` folds the letters of each word right-to-left (an
    anti-homomorphism); ``antilinear`` conjugates scalar coefficients.
    """

    def __init__(self, source: AlgebraPresentation, target: AlgebraPresentation,
                 images: Mapping[str, NcElement], *, reverse: bool = False,
                 antilinear: bool = False, check: bool = True):
        self.source = source
        self.target = target
        self.reverse = reverse
        self.antilinear = antilinear
        self._img: List[Optional[NcElement]] = [None] * len(source.gens)
        for nm, im in images.items():
            i = source.index[nm]
            if not isinstance(im, NcElement):
                im = target.scalar(im)
            if im.alg is not target:
                raise PresentationError(f"image of {nm!r} is not in the target")
            self._img[i] = im
        if check:
            for i, im in enumerate(self._img):
                if im is None or im.is_zero():
                    continue
                want = source.gens[i].degree
                for d in im.degrees():
                    if d != want:
                        raise PresentationError(
                            f"substitution of {source.gens[i].name!r} does not preserve degree: {d} != {want}")
        self._word_cache: Dict[Word, NcElement] = {}

    @classmethod
    def by_names(cls, source, target, names: Mapping[str, str], **kw) -> "Hom":
        return cls(source, target, {a: target.gen(b) for a, b in names.items()}, **kw)

    def image(self, name: str) -> NcElement:
        im = self._img[self.source.index[name]]
        if im is None:
            raise PresentationError(f"no image for {name!r}")
        return im

    def _word(self, w: Word) -> NcElement:
        hit = self._word_cache.get(w)
        if hit is not None:
            return hit
        if not w:
            out = self.target.one()
        elif len(w) == 1:
            im = self._img[w[0]]
            if im is None:
                raise PresentationError(f"no image for {self.source.gens[w[0]].name!r}")
            out = im
        else:
            head = self._word(w[:-1])
            last = self._word(w[-1:])
            out = last * head if self.reverse else head * last
        self._word_cache[w] = out
        return out

    def __call__(self, e: NcElement) -> NcElement:
        if e.alg is not self.source:
            raise PresentationError("element is not in the source presentation")
        out: dict = {}
        for (w, k), (re, im) in e._d.items():
            if self.antilinear:
                k, im = -k, -im
            img = self._word(w)
            for (w2, k2), c2 in img._d.items():
                _acc(out, (w2, k + k2), cmul((re, im), c2))
        return NcElement(self.target, out)


def substitute(hom: Hom, e: NcElement) -> NcElement:
    return hom(e)


# -- ideal membership ---------------------------------------------------------

@dataclass
class Certificate:
    """e == sum over components of (sum_i c_i relation_i) (x) leg-word."""

    components: List[Tuple[Word, List[Tuple[int, RationalFunction]]]] = field(default_factory=list)
    verified: bool = False

    def size(self) -> int:
        return sum(len(c) for _, c in self.components)


class NotCertified(Exception):
    def __init__(self, message: str, residual: Optional[NcElement] = None):
        super().__init__(message)
        self.residual = residual


class DegreeTooHigh(ValueError):
    pass


def split_components(A: AlgebraPresentation, e: NcElement, letters: frozenset):
    """Write e = sum_o e_o * o with e_o in the letters of ``letters`` and o a
    word in the remaining letters.  Returns {o: e_o}."""
    comps: Dict[Word, dict] = {}
    for (w, k), c in e._d.items():
        r = tuple(i for i in w if i in letters)
        o = tuple(i for i in w if i not in letters)
        _, pe, pneg = A._sort(r + o)
        if pneg:
            c = (-c[0], -c[1])
        _acc(comps.setdefault(o, {}), (r, k - pe), c)
    return {o: NcElement(A, d) for o, d in comps.items() if d}


def _solve_span(A: AlgebraPresentation, target: NcElement, rels: List[NcElement],
                by_word: Dict[Word, List[int]]):
    words = set(target.terms)
    used: List[int] = []
    seen_rel = set()
    frontier = list(words)
    while frontier:
        w = frontier.pop()
        for ri in by_word.get(w, ()):
            if ri in seen_rel:
                continue
            seen_rel.add(ri)
            used.append(ri)
            for w2 in rels[ri].terms:
                if w2 not in words:
                    words.add(w2)
                    frontier.append(w2)
    if not used:
        return None if not target.is_zero() else []
    used.sort()
    col = {ri: j for j, ri in enumerate(used)}
    wl = sorted(words)
    row_of = {w: i for i, w in enumerate(wl)}
    rows: List[Dict[int, RationalFunction]] = [dict() for _ in wl]
    for ri in used:
        for w, s in rels[ri].terms.items():
            rows[row_of[w]][col[ri]] = RationalFunction(s, None, True)
    tt = target.terms
    rhs = [RationalFunction(tt.get(w, PhaseScalar.zero()), None, True) for w in wl]
    sol = solve_sparse(rows, rhs, len(used))
    if sol is None:
        return None
    return [(ri, sol[col[ri]]) for ri in used if not sol[col[ri]].is_zero()]


def ideal_member(A: AlgebraPresentation, e: NcElement,
                 relations: Optional[Sequence[NcElement]] = None,
                 max_degree: int = 2) -> Certificate:
    """Certify that e lies in the ideal spanned by the relations.

    e is split by the letters that occur in the relations; each component
    must have at most ``max_degree`` such letters and is solved for in the
    linear span of the relations over Q(i)(z).  Raises NotCertified when no
    combination exists.  Every certificate is re-verified before return.
    """
    rels = list(A.relations if relations is None else relations)
    cert = Certificate()
    if e.is_zero():
        cert.verified = True
        return cert
    if not rels:
        raise NotCertified("no relations to certify against", e)
    letters = frozenset(i for r in rels for (w, _k) in r._d for i in w)
    by_word: Dict[Word, List[int]] = {}
    for ri, r in enumerate(rels):
        for w in r.terms:
            by_word.setdefault(w, []).append(ri)
    comps = split_components(A, e, letters)
    for o in sorted(comps, key=lambda w: (len(w), w)):
        ce = comps[o]
        if ce.max_length() > max_degree:
            raise DegreeTooHigh(f"component of degree {ce.max_length()} exceeds {max_degree}")
        sol = _solve_span(A, ce, rels, by_word)
        if sol is None:
            raise NotCertified(f"component {A.names(o)} is not in the relation span", ce)
        cert.components.append((o, sol))
    _verify_certificate(A, e, rels, cert)
    return cert


def _verify_certificate(A, e, rels, cert: Certificate):
    letters = frozenset(i for r in rels for (w, _k) in r._d for i in w)
    comps = split_components(A, e, letters)
    if set(comps) - {o for o, _ in cert.components}:
        raise NotCertified("certificate misses a component", e)
    for o, combo in cert.components:
        den = PhaseScalar.one()
        for _, c in combo:
            if not c.is_polynomial():
                den = den * c.den
        total = A.zero()
        for ri, c in combo:
            scaled = c * den
            if not scaled.is_polynomial():
                raise NotCertified("certificate coefficient is not clearable", e)
            total = total + rels[ri].scale(scaled.num)
        want = comps.get(o, A.zero()).scale(den)
        if total != want:
            raise NotCertified("certificate failed re-verification", want - total)
    cert.verified = True


def is_certified(A, e, relations=None, max_degree: int = 2) -> bool:
    try:
        ideal_member(A, e, relations, max_degree)
        return True
    except NotCertified:
        return False
