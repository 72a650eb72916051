"""Scenario files, built-in suites and report emission.

Scenario grammar (one statement per line, ``#`` starts a comment)::

    torus N theta [[a, b], [c, d]]
    gen NAME deg (d1, ..., dN) [star NAME] [central]
    rule NAME NAME ... -> EXPR
    relation EXPR
    elem NAME = EXPR
    matrix NAME = [[EXPR, ...], ...]
    check KIND ARGS
    suite NAME [--charge K]

Check kinds: normalizes-to, projection, unitary, mvn, bialgebra, coaction,
coinvariants, quadric, adhm, cocycle.  Exit codes: 0 all checks pass,
1 some check fails, 2 parse or semantic error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import adhm as ad
from . import suites as su
from .algebra import AlgebraPresentation, Generator, NcElement, PresentationError
from .cocycle import CocycleData, dneg
from .matrixalg import NcMatrix, check_mvn_equivalence, is_projection, is_unitary
from .textio import ParseError, parse_element

CHECK_KINDS = ("normalizes-to", "projection", "unitary", "mvn", "bialgebra", "coaction",
               "coinvariants", "quadric", "adhm", "cocycle")


class ScenarioError(ValueError):
    """Syntax or semantic error with a 1-based line and column."""

    def __init__(self, message: str, line: int, col: int = 1):
        self.line = line
        self.col = col
        self.message = message
        super().__init__(f"line {line}, column {col}: {message}")


# -- AST ---------------------------------------------------------------------------------

@dataclass(frozen=True)
class Stmt:
    kind: str
    args: Tuple
    line: int = field(default=0, compare=False)
    col: int = field(default=1, compare=False)


@dataclass
class Scenario:
    statements: List[Stmt] = field(default_factory=list)
    lines: List[str] = field(default_factory=list, compare=False, repr=False)

    def __eq__(self, other):
        return isinstance(other, Scenario) and self.statements == other.statements


_NAME = r"[A-Za-z_][A-Za-z0-9_']*"
_NAME_RE = re.compile(_NAME + r"$")
_RAT = re.compile(r"\s*(-?\d+(?:/\d+)?)\s*")


def _fail(msg, line, text, pos):
    raise ScenarioError(msg, line, pos + 1)


def _parse_rational_matrix(text: str, line: int, offset: int):
    """[[a, b], [c, d]] with exact rationals."""
    pos = 0

    def ws():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def expect(ch):
        nonlocal pos
        ws()
        if pos >= len(text) or text[pos] != ch:
            found = text[pos] if pos < len(text) else "end of line"
            _fail(f"expected {ch!r}, found {found!r}", line, text, offset + pos)
        pos += 1

    def number():
        nonlocal pos
        m = _RAT.match(text, pos)
        if not m:
            _fail("expected a rational number", line, text, offset + pos)
        pos = m.end()
        return Fraction(m.group(1))

    rows = []
    expect("[")
    while True:
        expect("[")
        row = [number()]
        ws()
        while pos < len(text) and text[pos] == ",":
            pos += 1
            row.append(number())
            ws()
        expect("]")
        rows.append(tuple(row))
        ws()
        if pos < len(text) and text[pos] == ",":
            pos += 1
            continue
        expect("]")
        break
    ws()
    if pos != len(text):
        _fail(f"unexpected text {text[pos:]!r}", line, text, offset + pos)
    return tuple(rows)


def _split_top(text: str, sep: str = ","):
    """Split at separators outside parentheses and brackets.

    A bracket that directly follows a name character is a name suffix
    like d[z1] and is skipped."""
    parts, depth, start, i = [], 0, 0, 0
    while i < len(text):
        ch = text[i]
        if ch == "[" and i and (text[i - 1].isalnum() or text[i - 1] == "_"):
            j = text.find("]", i)
            i = j + 1 if j > 0 else len(text)
            continue
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append((start, text[start:i]))
            start = i + 1
        i += 1
    parts.append((start, text[start:]))
    return parts


def _parse_expr_matrix(text: str, line: int, offset: int):
    t = text.strip()
    lead = len(text) - len(text.lstrip())
    if not (t.startswith("[") and t.endswith("]")):
        _fail("matrix literal must be [[...], ...]", line, text, offset + lead)
    inner = t[1:-1]
    rows = []
    for start, part in _split_top(inner):
        p = part.strip()
        if not (p.startswith("[") and p.endswith("]")):
            _fail("malformed matrix row", line, text, offset + lead + 1 + start + (len(part) - len(part.lstrip())))
        entries = []
        row_off = offset + lead + 1 + start + part.index("[") + 1
        for s2, e in _split_top(p[1:-1]):
            if not e.strip():
                _fail("empty matrix entry", line, text, row_off + s2)
            entries.append((" ".join(e.split()), row_off + s2 + (len(e) - len(e.lstrip()))))
        rows.append(entries)
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        _fail("ragged matrix rows", line, text, offset + lead)
    return tuple(tuple(r) for r in rows)


def _parse_line(raw: str, line: int) -> Optional[Stmt]:
    text = raw.split("#", 1)[0].rstrip()
    if not text.strip():
        return None
    lead = len(text) - len(text.lstrip())
    body = text.strip()
    kw, _, rest = body.partition(" ")
    rest_off = lead + len(kw) + 1 + (len(rest) - len(rest.lstrip()))
    rest = rest.strip()
    if kw == "torus":
        m = re.match(r"(\d+)\s+theta\s+(.*)$", rest)
        if not m:
            _fail("expected 'torus N theta MATRIX'", line, text, rest_off)
        n = int(m.group(1))
        mat = _parse_rational_matrix(m.group(2), line, rest_off + m.start(2))
        if len(mat) != n or any(len(r) != n for r in mat):
            _fail(f"theta must be {n}x{n}", line, text, rest_off + m.start(2))
        return Stmt("torus", (n, mat), line, lead + 1)
    if kw == "gen":
        m = re.match(rf"({_NAME})\s+deg\s+\(([^)]*)\)\s*(?:star\s+({_NAME}))?\s*(central)?\s*$", rest)
        if not m:
            _fail("expected 'gen NAME deg (d1, ...) [star NAME] [central]'", line, text, rest_off)
        try:
            deg = tuple(int(x) for x in m.group(2).split(","))
        except ValueError:
            _fail("degree entries must be integers", line, text, rest_off + m.start(2))
        return Stmt("gen", (m.group(1), deg, m.group(3), bool(m.group(4))), line, lead + 1)
    if kw == "rule":
        lhs, arrow, rhs = rest.partition("->")
        if not arrow:
            _fail("expected 'rule WORD -> EXPR'", line, text, rest_off + len(rest))
        names = tuple(lhs.split())
        for i, n in enumerate(names):
            if not _NAME_RE.match(n):
                _fail(f"bad letter {n!r}", line, text, rest_off)
        if not names:
            _fail("empty rule word", line, text, rest_off)
        return Stmt("rule", (names, " ".join(rhs.split())), line, lead + 1)
    if kw == "relation":
        if not rest:
            _fail("empty relation", line, text, rest_off)
        return Stmt("relation", (" ".join(rest.split()),), line, lead + 1)
    if kw in ("elem", "matrix"):
        m = re.match(rf"({_NAME})\s*=\s*(.*)$", rest)
        if not m:
            _fail(f"expected '{kw} NAME = ...'", line, text, rest_off)
        if kw == "elem":
            return Stmt("elem", (m.group(1), " ".join(m.group(2).split())), line, lead + 1)
        rows = _parse_expr_matrix(m.group(2), line, rest_off + m.start(2))
        return Stmt("matrix", (m.group(1), tuple(tuple(e for e, _ in r) for r in rows)), line, lead + 1)
    if kw == "check":
        kind, _, args = rest.partition(" ")
        if kind not in CHECK_KINDS:
            _fail(f"unknown check kind {kind!r}", line, text, rest_off)
        return Stmt("check", (kind, " ".join(args.split())), line, lead + 1)
    if kw == "suite":
        m = re.match(rf"({_NAME}(?:-{_NAME})*)(?:\s+u=\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))?"
                     r"(?:\s+--charge\s+(\d+))?\s*$", rest)
        if not m:
            _fail("expected 'suite NAME [u=(r1,r2)] [--charge K]'", line, text, rest_off)
        name = m.group(1)
        if name not in su.SUITES:
            _fail(f"unknown suite {name!r}", line, text, rest_off)
        u = (int(m.group(2)), int(m.group(3))) if m.group(2) is not None else None
        if u is not None and name != "charge-one":
            _fail("u=(r1,r2) only applies to the charge-one suite", line, text, rest_off + m.start(2) - 3)
        charge = int(m.group(4)) if m.group(4) else None
        return Stmt("suite", (name, charge, u), line, lead + 1)
    _fail(f"unknown directive {kw!r}", line, text, lead)


def parse_scenario(text: str) -> Scenario:
    sc = Scenario()
    sc.lines = text.splitlines()
    for i, raw in enumerate(sc.lines, start=1):
        st = _parse_line(raw, i)
        if st is not None:
            sc.statements.append(st)
    return sc


def _fmt_frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def render_scenario(sc: Scenario) -> str:
    out = []
    for st in sc.statements:
        k, a = st.kind, st.args
        if k == "torus":
            mat = "[" + ", ".join("[" + ", ".join(_fmt_frac(x) for x in r) + "]" for r in a[1]) + "]"
            out.append(f"torus {a[0]} theta {mat}")
        elif k == "gen":
            s = f"gen {a[0]} deg ({', '.join(str(d) for d in a[1])})"
            if a[2]:
                s += f" star {a[2]}"
            if a[3]:
                s += " central"
            out.append(s)
        elif k == "rule":
            out.append(f"rule {' '.join(a[0])} -> {a[1]}")
        elif k == "relation":
            out.append(f"relation {a[0]}")
        elif k == "elem":
            out.append(f"elem {a[0]} = {a[1]}")
        elif k == "matrix":
            out.append(f"matrix {a[0]} = [" + ", ".join("[" + ", ".join(r) + "]" for r in a[1]) + "]")
        elif k == "check":
            out.append(f"check {a[0]} {a[1]}".rstrip())
        elif k == "suite":
            out.append(f"suite {a[0]}" + (f" u=({a[2][0]},{a[2][1]})" if a[2] else "")
                       + (f" --charge {a[1]}" if a[1] is not None else ""))
    return "\n".join(out) + ("\n" if out else "")


# -- semantic phase ----------------------------------------------------------------------

@dataclass
class Options:
    convention: str = "flip"
    classical: bool = False
    jobs: int = 1
    max_charge: int = ad.MAX_CHARGE
    timing: bool = True


@dataclass
class Job:
    name: str
    suite: Optional[str] = None
    ctx: Optional[su.SuiteContext] = None
    thunk: Optional[object] = None


class _Env:
    def __init__(self, opts: Options, lines: Sequence[str] = ()):
        self.opts = opts
        self.lines = list(lines)
        self.theta = None
        self.gens: List[Generator] = []
        self.alg: Optional[AlgebraPresentation] = None
        self.elems: Dict[str, NcElement] = {}
        self.mats: Dict[str, NcMatrix] = {}

    @property
    def F(self) -> CocycleData:
        if self.opts.classical:
            return CocycleData.classical(len(self.theta) if self.theta else 2)
        if self.theta is None:
            return CocycleData.standard(self.opts.convention)
        return CocycleData(self.theta, self.opts.convention)

    def ctx(self, charge: int = 1, exps=(0, 1)) -> su.SuiteContext:
        theta = self.theta or ((0, Fraction(1, 2)), (Fraction(-1, 2), 0))
        th = tuple(tuple(_fmt_frac(Fraction(x)) for x in r) for r in theta)
        return su.SuiteContext(th, self.opts.convention, self.opts.classical, charge, tuple(exps))

    def presentation(self, st: Stmt) -> AlgebraPresentation:
        if self.alg is None:
            if self.theta is None:
                raise ScenarioError("declare 'torus' before using generators", st.line, st.col)
            self.alg = AlgebraPresentation(self.gens, self.F, name="scenario")
        return self.alg

    def _column(self, st: Stmt, text: str, pos: int) -> int:
        if 0 < st.line <= len(self.lines):
            at = self.lines[st.line - 1].find(text)
            if at >= 0:
                return at + pos + 1
        return st.col

    def expr(self, text: str, st: Stmt) -> NcElement:
        A = self.presentation(st)
        names = dict(self.elems)
        try:
            from .textio import parse_expression
            gens = {g.name: A.gen(g.name) for g in A.gens}
            gens.update(names)
            v = parse_expression(text, gens, A.cocycle.params, {"star": lambda x: x.star()})
        except ParseError as exc:
            raise ScenarioError(str(exc).rsplit(" at column", 1)[0], st.line,
                                self._column(st, text, exc.pos)) from None
        if not isinstance(v, NcElement):
            v = A.scalar(v)
        return v


def compile_scenario(sc: Scenario, opts: Optional[Options] = None) -> List[Job]:
    """Evaluate declarations and return the check jobs in file order."""
    opts = opts or Options()
    env = _Env(opts, sc.lines)
    jobs: List[Job] = []
    for st in sc.statements:
        k, a = st.kind, st.args
        if k == "torus":
            if env.theta is not None:
                raise ScenarioError("torus declared twice", st.line, st.col)
            try:
                CocycleData(a[1])
            except ValueError as exc:
                raise ScenarioError(str(exc), st.line, st.col) from None
            env.theta = a[1]
        elif k == "gen":
            if env.alg is not None:
                raise ScenarioError("generators must be declared before they are used", st.line, st.col)
            if env.theta is None:
                raise ScenarioError("declare 'torus' before generators", st.line, st.col)
            name, deg, star, central = a
            if len(deg) != len(env.theta):
                raise ScenarioError(f"degree of {name!r} must have {len(env.theta)} entries", st.line, st.col)
            known = {g.name for g in env.gens}
            if name in known:
                raise ScenarioError(f"generator {name!r} declared twice", st.line, st.col)
            if central and any(deg):
                raise ScenarioError(f"central generator {name!r} must have degree zero", st.line, st.col)
            env.gens.append(Generator(name, deg, star, central=central))
            if star and star != name:
                if star in known:
                    raise ScenarioError(f"generator {star!r} declared twice", st.line, st.col)
                env.gens.append(Generator(star, dneg(deg), name, central=central))
        elif k == "rule":
            A = env.presentation(st)
            for n in a[0]:
                if n not in A.index:
                    raise ScenarioError(f"undeclared generator {n!r}", st.line, st.col)
            try:
                A.add_rule(list(a[0]), env.expr(a[1], st))
            except PresentationError as exc:
                raise ScenarioError(str(exc), st.line, st.col) from None
        elif k == "relation":
            env.presentation(st).add_relation(env.expr(a[0], st))
        elif k == "elem":
            env.elems[a[0]] = env.expr(a[1], st)
        elif k == "matrix":
            A = env.presentation(st)
            env.mats[a[0]] = NcMatrix(A, [[env.expr(e, st) for e in r] for r in a[1]])
        elif k == "check":
            jobs.append(_check_job(env, st))
        elif k == "suite":
            charge = a[1] if a[1] is not None else 1
            if a[0] == "adhm" and charge > opts.max_charge:
                raise ScenarioError(f"charge {charge} exceeds --max-charge {opts.max_charge}", st.line, st.col)
            ctx = env.ctx(charge)
            for n in su.suite_checks(a[0], charge, a[2]):
                jobs.append(Job(n, a[0], ctx))
    return jobs


def _need_mats(env: _Env, names: Sequence[str], st: Stmt) -> List[NcMatrix]:
    out = []
    for n in names:
        if n not in env.mats:
            raise ScenarioError(f"undeclared matrix {n!r}", st.line, st.col)
        out.append(env.mats[n])
    return out


def _certifying_relations(M: NcMatrix):
    return M.alg.relations or None


def _check_job(env: _Env, st: Stmt) -> Job:
    kind, args = st.args
    parts = args.split()
    name = f"check:{st.line:04d}:{kind}"

    def bad_args(msg):
        raise ScenarioError(f"check {kind}: {msg}", st.line, st.col)

    if kind == "normalizes-to":
        lhs, sep, rhs = args.partition("==")
        if not sep:
            bad_args("expected 'EXPR == EXPR'")
        a, b = env.expr(lhs.strip(), st), env.expr(rhs.strip(), st)
        diff = a - b
        return Job(name, thunk=lambda: su._verdict(diff.is_zero(), diff.render()))
    if kind in ("projection", "unitary"):
        if len(parts) != 1:
            bad_args("expected one matrix name")
        (M,) = _need_mats(env, parts, st)
        fn = is_projection if kind == "projection" else is_unitary

        def run():
            r = fn(M, relations=_certifying_relations(M))
            return su._verdict(r.ok, r.render())
        return Job(name, thunk=run)
    if kind == "mvn":
        if len(parts) != 3:
            bad_args("expected 'V P Q'")
        V, P, Q = _need_mats(env, parts, st)

        def run():
            r = check_mvn_equivalence(V, P, Q, relations=_certifying_relations(V))
            return su._verdict(r.ok, r.render())
        return Job(name, thunk=run)
    ctx = env.ctx()
    table = {
        "bialgebra": {"": ["bialgebra.homomorphism", "bialgebra.coassociativity"],
                      "cobos": ["cobos.cross-coproduct", "cobos.laws", "cobos.coinvariants"]},
        "coaction": {"torus": ["instanton.torus-gauge"], "sp": ["gauge.sp"], "sl": ["gauge.isometry"],
                     "delta-u": ["gauge.delta-u"]},
        "coinvariants": {"spL": ["coinvariants.spL"], "cobos": ["cobos.coinvariants"]},
        "cocycle": {"": ["cocycle.conditions", "cocycle.eta"]},
    }
    if kind in table:
        key = parts[0] if parts else ""
        if key not in table[kind]:
            bad_args(f"unknown variant {key!r}; expected one of {sorted(table[kind])}")
        names = table[kind][key]
        return Job(name, thunk=lambda: _combine([su.run_named(n, ctx) for n in names]))
    if kind == "quadric":
        try:
            r1, r2 = (int(x) for x in parts)
        except ValueError:
            bad_args("expected 'r1 r2'")
        return Job(name, thunk=lambda: su._quadric(ctx, r1, r2))
    if kind == "adhm":
        if not parts or not parts[0].isdigit():
            bad_args("expected a charge")
        k = int(parts[0])
        if k > env.opts.max_charge:
            bad_args(f"charge {k} exceeds --max-charge {env.opts.max_charge}")
        reading = parts[1] if len(parts) > 1 else ad.MONAD
        if reading not in ad.READINGS:
            bad_args(f"unknown reading {reading!r}")
        sub = su.SuiteContext(ctx.theta, ctx.convention, ctx.classical, k, ctx.exps, reading)
        return Job(name, thunk=lambda: _combine([su.ADHM_CHECKS[n](sub) for n in su.ADHM_CHECKS]))
    bad_args("unsupported")


def _combine(outs: Sequence[su.Outcome]) -> su.Outcome:
    for o in outs:
        if not o.ok:
            return o
    return su.Outcome(su.PASS)


# -- running -------------------------------------------------------------------------------

@dataclass
class CheckRecord:
    name: str
    status: str
    residual: Optional[str]
    millis: int

    def as_json(self) -> dict:
        d = {"name": self.name, "status": self.status}
        if self.residual:
            d["residual"] = self.residual
        d["millis"] = self.millis
        return d


@dataclass
class Report:
    records: List[CheckRecord]
    convention: str = "flip"
    classical: bool = False

    @property
    def ok(self) -> bool:
        return all(r.status == su.PASS for r in self.records)

    def to_json(self) -> str:
        return json.dumps([r.as_json() for r in self.records], indent=2)

    def to_text(self) -> str:
        lines = [f"# convention={self.convention} classical={str(self.classical).lower()}"]
        for r in self.records:
            line = f"{r.status.upper():14s} {r.name}"
            if r.residual:
                line += "  " + r.residual.splitlines()[0][:200]
            lines.append(line)
        n_pass = sum(r.status == su.PASS for r in self.records)
        lines.append(f"# {n_pass}/{len(self.records)} passed")
        return "\n".join(lines)


def _timed_named(name: str, ctx: su.SuiteContext):
    t0 = time.perf_counter()
    o = su.run_named(name, ctx)
    return o, int(1000 * (time.perf_counter() - t0))


def _timed_thunk(thunk):
    t0 = time.perf_counter()
    try:
        o = thunk()
    except Exception as exc:  # a failing check must not abort the report
        o = su.Outcome(su.ERROR, f"{type(exc).__name__}: {exc}")
    return o, int(1000 * (time.perf_counter() - t0))


def run_checks(jobs: Sequence[Job], opts: Optional[Options] = None) -> Report:
    """Run the jobs (suite checks in worker processes when jobs > 1) and
    aggregate the records sorted by name."""
    opts = opts or Options()
    named = [j for j in jobs if j.thunk is None]
    local = [j for j in jobs if j.thunk is not None]
    results: Dict[str, Tuple[su.Outcome, int]] = {}
    seen = set()
    uniq = []
    for j in named:
        if j.name not in seen:
            seen.add(j.name)
            uniq.append(j)
    if opts.jobs > 1 and len(uniq) > 1:
        with ProcessPoolExecutor(max_workers=opts.jobs) as ex:
            futs = {j.name: ex.submit(_timed_named, j.name, j.ctx) for j in uniq}
            for n, f in futs.items():
                results[n] = f.result()
    else:
        for j in uniq:
            results[j.name] = _timed_named(j.name, j.ctx)
    if local:
        with ThreadPoolExecutor(max_workers=max(1, opts.jobs)) as ex:
            futs = {j.name: ex.submit(_timed_thunk, j.thunk) for j in local}
            for n, f in futs.items():
                results[n] = f.result()
    records = []
    for n in sorted(results):
        o, ms = results[n]
        records.append(CheckRecord(n, o.status, o.residual, ms if opts.timing else 0))
    return Report(records, opts.convention, opts.classical)


# -- the adhm subcommand -------------------------------------------------------------------

def adhm_parameter_report(k: int, r1: int, r2: int, opts: Options, reading: str = ad.MONAD) -> dict:
    F = (CocycleData.classical() if opts.classical else CocycleData.standard(opts.convention))
    MA = ad.build_monad_algebra(k, F, reading)
    co = ad.adhm_coinvariants(MA, r1, r2)
    ctx = su.SuiteContext(convention=opts.convention, classical=opts.classical, charge=k,
                          exps=(r1, r2), reading=reading)
    checks = run_checks([Job(n, "adhm", ctx) for n in su.adhm_check_names(k)
                         if n.startswith(f"adhm.k{k}.")], opts)
    return {
        "charge": k,
        "exps": [r1, r1, r2, r2],
        "reading": reading,
        "generators": {n: list(co.weights[n]) for n in sorted(co.generators)},
        "relations": len(MA.relations),
        "relation_list": [r.render() for r in MA.relations],
        "phases_match": co.phases_match,
        "commutative": co.commutative,
        "expected_commutative": co.expected_commutative,
        "checks": [r.as_json() for r in checks.records],
        "ok": co.ok and checks.ok,
    }


def _adhm_text(rep: dict) -> str:
    lines = [f"ADHM parameter space, charge {rep['charge']}, exponents {rep['exps']}, reading {rep['reading']}",
             f"  coinvariant generators: {len(rep['generators'])} (M^j_ab u_j)",
             f"  star-closed quadratic relations: {rep['relations']}",
             f"  phases match eta_jl^(m_l+m_j-1): {rep['phases_match']}",
             f"  commutative: {rep['commutative']} (expected {rep['expected_commutative']})"]
    for i, r in enumerate(rep["relation_list"], start=1):
        lines.append(f"    R{i}: {r} = 0")
    for c in rep["checks"]:
        lines.append(f"  {c['status'].upper():14s} {c['name']}")
    lines.append("OK" if rep["ok"] else "FAILED")
    return "\n".join(lines)


# -- entry point ----------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser):
    p.add_argument("--convention", choices=("flip", "verbatim"), default="flip")
    p.add_argument("--classical", action="store_true", help="use the undeformed cocycle (zeta = 1)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-charge", type=int, default=ad.MAX_CHARGE)
    p.add_argument("--no-timing", action="store_true", help="report millis as 0 for byte-stable output")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twistalg", description="Exact verification of twisted algebra identities.")
    sub = p.add_subparsers(dest="cmd", required=True)
    r = sub.add_parser("run", help="run a scenario file ('-' for stdin)")
    r.add_argument("scenario")
    _common(r)
    s = sub.add_parser("suite", help="run a built-in suite")
    s.add_argument("name", choices=sorted(su.SUITES))
    s.add_argument("--charge", type=int, default=1)
    s.add_argument("--exps", default=None, help="r1,r2: restrict charge-one to the point u=(r1,r2)")
    _common(s)
    a = sub.add_parser("adhm", help="ADHM parameter space and certification report")
    a.add_argument("--charge", type=int, default=1)
    a.add_argument("--exps", default="0,1", help="r1,r2")
    a.add_argument("--reading", choices=ad.READINGS, default=ad.MONAD)
    _common(a)
    sub.add_parser("list", help="list suites and their checks")
    return p


def _opts(ns) -> Options:
    return Options(ns.convention, ns.classical, max(1, ns.jobs), ns.max_charge, not ns.no_timing)


def _emit(report: Report, as_json: bool, out):
    out.write((report.to_json() if as_json else report.to_text()) + "\n")


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    ns = build_parser().parse_args(argv)
    if ns.cmd == "list":
        for name in sorted(su.SUITES):
            out.write(f"{name}: {', '.join(su.suite_checks(name, 1))}\n")
        return 0
    opts = _opts(ns)
    if ns.cmd == "run":
        try:
            text = sys.stdin.read() if ns.scenario == "-" else open(ns.scenario, encoding="utf-8").read()
        except OSError as exc:
            sys.stderr.write(f"error: {exc}\n")
            return 2
        try:
            jobs = compile_scenario(parse_scenario(text), opts)
        except ScenarioError as exc:
            sys.stderr.write(f"{ns.scenario}:{exc.line}:{exc.col}: error: {exc.message}\n")
            return 2
        report = run_checks(jobs, opts)
        _emit(report, ns.json, out)
        return 0 if report.ok else 1
    if ns.cmd == "suite":
        if ns.name == "adhm" and ns.charge > opts.max_charge:
            sys.stderr.write(f"error: charge {ns.charge} exceeds --max-charge {opts.max_charge}\n")
            return 2
        u = None
        if ns.exps is not None:
            try:
                r1, r2 = (int(x) for x in ns.exps.split(","))
            except ValueError:
                sys.stderr.write("error: --exps expects r1,r2\n")
                return 2
            if ns.name != "charge-one":
                sys.stderr.write("error: --exps only applies to the charge-one suite\n")
                return 2
            u = (r1, r2)
        ctx = su.SuiteContext(convention=opts.convention, classical=opts.classical, charge=ns.charge)
        names = su.suite_checks(ns.name, ns.charge, u)
        report = run_checks([Job(n, ns.name, ctx) for n in names], opts)
        _emit(report, ns.json, out)
        return 0 if report.ok else 1
    if ns.cmd == "adhm":
        if ns.charge < 1 or ns.charge > opts.max_charge:
            sys.stderr.write(f"error: charge must be in 1..{opts.max_charge}\n")
            return 2
        try:
            r1, r2 = (int(x) for x in ns.exps.split(","))
        except ValueError:
            sys.stderr.write("error: --exps expects r1,r2\n")
            return 2
        rep = adhm_parameter_report(ns.charge, r1, r2, opts, ns.reading)
        if not opts.timing:
            for c in rep["checks"]:
                c["millis"] = 0
        out.write((json.dumps(rep, indent=2) if ns.json else _adhm_text(rep)) + "\n")
        return 0 if rep["ok"] else 1
    return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
