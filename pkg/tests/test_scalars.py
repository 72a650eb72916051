from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from twistalg.scalars import DeformationParams, GaussianRational, PhaseScalar

rat = st.fractions(min_value=-5, max_value=5, max_denominator=7)
gauss = st.builds(GaussianRational, rat, rat)
phase = st.dictionaries(st.integers(-6, 6), gauss, max_size=4).map(PhaseScalar)


def as_complex(g):
    """Oracle: the pair (re, im) as Fractions with the textbook product."""
    return Fraction(g.re.numerator, g.re.denominator), Fraction(g.im.numerator, g.im.denominator)


@given(gauss, gauss)
def test_gaussian_product_matches_pair_oracle(a, b):
    (ar, ai), (br, bi) = as_complex(a), as_complex(b)
    got = as_complex(a * b)
    assert got == (ar * br - ai * bi, ar * bi + ai * br)


@given(gauss)
def test_gaussian_inverse(a):
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == GaussianRational(1)


@given(phase, phase, phase)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + (-a) == PhaseScalar.zero()


@given(phase, phase)
def test_star_is_conjugation_on_the_unit_circle(a, b):
    assert (a * b).star() == a.star() * b.star()
    assert a.star().star() == a


@given(phase, phase)
def test_evaluation_at_one_is_a_ring_map(a, b):
    assert (a * b).at_one() == a.at_one() * b.at_one()
    assert (a + b).at_one() == a.at_one() + b.at_one()


def test_monomials_invert_exactly():
    z = PhaseScalar.monomial(1)
    assert z * z.inverse() == PhaseScalar.one()
    assert (z ** 3).exponents() == (3,)
    assert not (PhaseScalar.one() + z).is_monomial()


def test_zero_coefficients_are_dropped():
    p = PhaseScalar({2: 0, 3: GaussianRational(1, 1)})
    assert p.exponents() == (3,)
    assert PhaseScalar({0: 0}).is_zero()


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        GaussianRational.coerce(1 + 2j)


def test_deformation_parameters():
    p = DeformationParams(2)
    assert p.mu() == PhaseScalar.monomial(2)
    assert p.lam() == p.mu() * p.mu()
    assert p.mu() * p.mu_bar() == PhaseScalar.one()
    assert p.nu(0, 1) == PhaseScalar.one()
    assert p.nu(1, 0) == p.lam()


def test_trivial_parameters_are_one():
    p = DeformationParams(1, trivial=True)
    assert p.mu() == p.lam() == p.nu(3, -2) == PhaseScalar.one()
    assert p != DeformationParams(1)


def test_denominator_must_be_positive():
    with pytest.raises(ValueError):
        DeformationParams(0)


def test_render_and_parse_roundtrip():
    p = PhaseScalar({-2: GaussianRational(Fraction(1, 2), 3), 4: 1})
    assert PhaseScalar.parse(p.render()) == p
