import pytest
from hypothesis import given, strategies as st

from twistalg.spheres import build_sphere
from twistalg.textio import ParseError, parse_element, parse_scalar, render_element
from twistalg.scalars import DeformationParams, PhaseScalar

S7 = build_sphere("S7").alg
names = [g.name for g in S7.gens if g.name.startswith("z")]
words = st.lists(st.sampled_from(names), min_size=1, max_size=4)


@given(st.lists(st.tuples(words, st.integers(-4, 4), st.integers(-3, 3)), max_size=4))
def test_render_parse_roundtrip(terms):
    e = S7.zero()
    for w, c, k in terms:
        e = e + S7.g(*w).scale(PhaseScalar.monomial(k, c))
    assert parse_element(S7, render_element(e)) == e


def test_expressions():
    z1, z2 = S7.gen("z1"), S7.gen("z2")
    assert parse_element(S7, "z1 z2 - z2 z1") == S7.zero()
    assert parse_element(S7, "star(z1 z3)") == (z1 * S7.gen("z3")).star()
    assert parse_element(S7, "mu z1") == z1.scale(PhaseScalar.monomial(2))
    assert parse_element(S7, "(1/2 + i) z2") == z2.scale(parse_scalar("1/2 + i"))


def test_scalar_aliases():
    assert parse_scalar("lambda", DeformationParams(2)) == PhaseScalar.monomial(4)
    with pytest.raises(ParseError):
        parse_scalar("mu")
    assert parse_scalar("z^-3") == PhaseScalar.monomial(-3)


@pytest.mark.parametrize("text,col", [("z1 + q", 6), ("z1 + ", 6), ("(z1", 4)])
def test_errors_carry_columns(text, col):
    with pytest.raises(ParseError) as info:
        parse_element(S7, text)
    assert info.value.pos + 1 == col
