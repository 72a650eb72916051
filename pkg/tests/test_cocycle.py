from fractions import Fraction
import itertools

import pytest
from hypothesis import given, strategies as st

from twistalg.cocycle import (CocycleData, box_triples, cocycle_value, dadd, eta_matrix,
                              grouplike_twist_data, is_real_cocycle, printed_eta, r_matrix,
                              swap_phase, tau_degrees, verify_cocycle_condition)
from twistalg.scalars import PhaseScalar

deg2 = st.tuples(st.integers(-3, 3), st.integers(-3, 3))
thetas = st.fractions(min_value=-2, max_value=2, max_denominator=6)


def exponent_oracle(theta, convention, a, b):
    """a . Theta_eff . b in units of 1/D, computed directly from the matrix."""
    sign = -1 if convention == "flip" else 1
    n = len(theta)
    val = sum(sign * Fraction(theta[i][j]) * a[i] * b[j] for i in range(n) for j in range(n))
    return val


@given(thetas, deg2, deg2, st.sampled_from(["flip", "verbatim"]))
def test_exponent_matches_direct_bilinear_form(t, a, b, conv):
    theta = [[0, t], [-t, 0]]
    F = CocycleData(theta, conv)
    assert Fraction(F.exponent(a, b), F.D) == exponent_oracle(theta, conv, a, b)


@given(thetas, deg2, deg2, deg2)
def test_cocycle_identity_for_any_rank_two_theta(t, f, g, h):
    F = CocycleData([[0, t], [-t, 0]])
    assert verify_cocycle_condition(F, [(f, g, h)]).ok


@given(deg2, deg2)
def test_r_matrix_is_cotriangular_and_squares_f(a, b):
    F = CocycleData.standard()
    assert r_matrix(F, a, b) * r_matrix(F, b, a) == PhaseScalar.one()
    assert swap_phase(F, a, b) == cocycle_value(F, a, b) ** 2


@given(deg2, deg2)
def test_reality(a, b):
    assert is_real_cocycle(CocycleData.standard(), a, b)


def test_full_box_passes():
    rep = verify_cocycle_condition(CocycleData.standard(), box_triples(2))
    assert rep.checked == 3 ** 6
    assert rep.ok


def test_eta_flip_matches_printed_table():
    F = CocycleData.standard("flip")
    assert eta_matrix(F) == printed_eta(F.params)


def test_eta_verbatim_is_conjugate():
    F = CocycleData.standard("verbatim")
    want = [[x.star() for x in row] for row in printed_eta(F.params)]
    assert eta_matrix(F) == want


def test_eta_frozen_exponents():
    # independent oracle: exponent of eta_jl is -2 D tau_j . Theta_eff . tau_l
    F = CocycleData.standard()
    got = [[e.exponents()[0] if e.exponents() else 0 for e in row] for row in eta_matrix(F)]
    assert got == [[0, 0, 2, -2], [0, 0, -2, 2], [-2, 2, 0, 0], [2, -2, 0, 0]]


def test_tau_degrees():
    assert tau_degrees() == [(1, 0), (-1, 0), (0, 1), (0, -1)]


def test_validation():
    with pytest.raises(ValueError):
        CocycleData([[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        CocycleData([[0, 1, 0], [-1, 0]])
    with pytest.raises(ValueError):
        CocycleData([[0, 1], [-1, 0]], "sideways")
    with pytest.raises(ValueError):
        CocycleData.standard().exponent((1, 0, 0), (1, 0))


def test_classical_is_trivial():
    F = CocycleData.classical()
    assert F.params.trivial
    assert all(x == PhaseScalar.one() for row in eta_matrix(F) for x in row)


def test_grouplike_twist_data_is_trivial_for_antisymmetric_theta():
    F = CocycleData.standard()
    for h in itertools.product(range(-2, 3), repeat=2):
        td = grouplike_twist_data(F, h)
        assert td.U == PhaseScalar.one() and td.V == PhaseScalar.one()
        assert dadd(td.antipode_degree, h) == (0, 0)
