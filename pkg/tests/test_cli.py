import io
import json
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from twistalg.cli import (Options, ScenarioError, compile_scenario, main, parse_scenario,
                          render_scenario, run_checks)

ROOT = Path(__file__).resolve().parents[1]
PLANE = """\
torus 2 theta [[0, 1/2], [-1/2, 0]]
gen a deg (1, 0) star as
gen b deg (0, 1) star bs
"""


def run(argv, text=None, tmp_path=None):
    if text is not None:
        p = tmp_path / "s.tw"
        p.write_text(text)
        argv = [argv[0], str(p)] + argv[1:]
    out = io.StringIO()
    return main(argv, out), out.getvalue()


def test_parse_statements():
    sc = parse_scenario(PLANE + "# comment\nelem n = as a + bs b  # trailing\ncheck normalizes-to b a == mu a b\n")
    kinds = [s.kind for s in sc.statements]
    assert kinds == ["torus", "gen", "gen", "elem", "check"]
    assert sc.statements[0].args[1][0][1] == 0.5
    assert sc.statements[1].args == ("a", (1, 0), "as", False)


def test_empty_scenario_is_an_empty_pass():
    rep = run_checks(compile_scenario(parse_scenario("")))
    assert rep.ok and rep.records == []
    assert rep.to_json() == "[]"


@pytest.mark.parametrize("text,line,col", [
    ("torus 2 theta [[0, 1/2], [-1/2 0]]", 1, 32),
    ("torus 2 theta [[0, 1/2]]", 1, 15),
    ("frobnicate", 1, 1),
    ("check sideways a", 1, 7),
    ("suite nowhere", 1, 7),
    (PLANE + "matrix M = [[a, b], [a]]", 4, 12),
])
def test_syntax_errors_have_positions(text, line, col):
    with pytest.raises(ScenarioError) as info:
        compile_scenario(parse_scenario(text))
    assert (info.value.line, info.value.col) == (line, col)


@pytest.mark.parametrize("text,fragment", [
    (PLANE + "elem x = a + q", "undeclared name 'q'"),
    ("torus 2 theta [[0, 1/2], [-1/2, 0]]\ngen a deg (1, 0, 0)", "must have 2 entries"),
    (PLANE + "elem x = a\ngen c deg (0, 0)", "before they are used"),
    ("gen a deg (1, 0)", "before generators"),
    ("torus 2 theta [[0, 1], [1, 0]]", "antisymmetric"),
    (PLANE + "rule a b -> a", "not degree homogeneous"),
    (PLANE + "check projection M", "undeclared matrix"),
    (PLANE + "check adhm 9", "exceeds --max-charge"),
])
def test_semantic_errors(text, fragment):
    with pytest.raises(ScenarioError) as info:
        compile_scenario(parse_scenario(text))
    assert fragment in str(info.value)


def test_expression_error_column():
    with pytest.raises(ScenarioError) as info:
        compile_scenario(parse_scenario(PLANE + "elem x = a + q"))
    assert info.value.col == 14


name = st.from_regex(r"[a-y][a-z0-9]{0,3}", fullmatch=True).filter(lambda s: s not in {"mu", "i", "z", "d"})
rat = st.fractions(min_value=-3, max_value=3, max_denominator=5)


@st.composite
def scenarios(draw):
    t = draw(rat)
    lines = [f"torus 2 theta [[0, {t}], [{-t}, 0]]"]
    gens = draw(st.lists(name, min_size=1, max_size=3, unique=True))
    for g in gens:
        d = draw(st.tuples(st.integers(-2, 2), st.integers(-2, 2)))
        lines.append(f"gen {g} deg ({d[0]}, {d[1]})" + draw(st.sampled_from(["", " central"])))
    lines.append(f"elem e = {gens[0]} + 2 {gens[-1]}")
    lines.append(f"matrix M = [[{gens[0]}, 0], [0, 1/2]]")
    lines.append(draw(st.sampled_from(["check cocycle", "suite sphere4", "suite charge-one u=(0,-1)",
                                       "suite adhm --charge 2", "check quadric 0 1"])))
    return "\n".join(lines) + "\n"


@given(scenarios())
def test_render_parse_roundtrip(text):
    sc = parse_scenario(text)
    again = parse_scenario(render_scenario(sc))
    assert again == sc
    assert render_scenario(again) == render_scenario(sc)


def test_example_scenario_passes():
    code, out = run(["run", str(ROOT / "scenarios" / "quantum_plane.tw"), "--no-timing"])
    assert code == 0, out
    assert "15/15 passed" in out


def test_failing_check_exits_one(tmp_path):
    code, out = run(["run", "--json"], PLANE + "check normalizes-to a b == b a\n", tmp_path)
    assert code == 1
    rec = json.loads(out)
    assert rec[0]["status"] == "fail" and rec[0]["residual"]


def test_syntax_error_exits_two(tmp_path, capsys):
    code, _ = run(["run"], "torus x\n", tmp_path)
    assert code == 2
    assert ":1:7: error:" in capsys.readouterr().err


def test_json_schema_and_order():
    code, out = run(["suite", "sphere4", "--json"])
    recs = json.loads(out)
    assert code == 0
    assert [r["name"] for r in recs] == sorted(r["name"] for r in recs)
    for r in recs:
        assert set(r) <= {"name", "status", "residual", "millis"}
        assert isinstance(r["millis"], int)


def test_reports_identical_across_runs_and_jobs():
    a = run(["suite", "calculus", "--json", "--no-timing"])[1]
    b = run(["suite", "calculus", "--json", "--no-timing", "--jobs", "3"])[1]
    c = run(["suite", "calculus", "--json", "--no-timing"])[1]
    assert a == b == c


def test_json_equal_ignoring_millis():
    strip = lambda s: [{k: v for k, v in r.items() if k != "millis"} for r in json.loads(s)]
    assert strip(run(["suite", "sphere7", "--json"])[1]) == strip(run(["suite", "sphere7", "--json", "--jobs", "2"])[1])


def test_classical_flag_makes_charge_one_commutative():
    code, out = run(["suite", "charge-one", "--classical", "--no-timing", "--exps", "1,0"])
    assert code == 0
    assert "classical=true" in out


def test_charge_one_point_selection():
    code, out = run(["suite", "charge-one", "--exps", "0,1"])
    assert code == 0 and "quadric.0_1" in out and "quadric.1_0" not in out
    assert run(["suite", "sphere7", "--exps", "0,1"])[0] == 2


def test_adhm_subcommand():
    code, out = run(["adhm", "--charge", "1", "--exps", "0,1", "--json", "--no-timing"])
    rep = json.loads(out)
    assert code == 0 and rep["ok"]
    assert rep["relations"] == 10 and len(rep["relation_list"]) == 10
    assert rep["commutative"] is True
    code, out = run(["adhm", "--charge", "1", "--exps", "1,1"])
    assert code == 0 and "commutative: False (expected False)" in out


def test_max_charge_guard():
    assert run(["adhm", "--charge", "4"])[0] == 2
    assert run(["adhm", "--charge", "2", "--max-charge", "1"])[0] == 2
    assert run(["suite", "adhm", "--charge", "4"])[0] == 2


def test_verbatim_convention():
    code, out = run(["suite", "cocycle", "--convention", "verbatim"])
    assert code == 0 and "convention=verbatim" in out


def test_list():
    code, out = run(["list"])
    assert code == 0 and "paper-core:" in out


def test_scenario_suite_directive_and_checks(tmp_path):
    text = PLANE + "\n".join([
        "gen w deg (0, 0) central",
        "rule a as -> 1",
        "elem u = a as",
        "check normalizes-to u == 1",
        "check normalizes-to star(a b) == bs as",
        "check bialgebra",
        "check coinvariants cobos",
        "check coaction torus",
        "check quadric 0 1",
        "check adhm 1",
        "suite charge-one u=(0,0)",
    ]) + "\n"
    code, out = run(["run", "--json", "--no-timing", "--jobs", "2"], text, tmp_path)
    recs = {r["name"]: r for r in json.loads(out)}
    assert code == 0, out
    assert "quadric.0_0" in recs and "check:0013:adhm" in recs
