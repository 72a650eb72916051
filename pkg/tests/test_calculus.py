from hypothesis import given, strategies as st
import pytest

from twistalg.algebra import PresentationError
from twistalg.calculus import (DgaPresentation, basic_projector_forms, c4_calculus, calculus_relation_table,
                               curvature, dname, radius_calculus, radius_reducer, s4_calculus)
from twistalg.cocycle import CocycleData
from twistalg.matrixalg import mat_mul
from twistalg.scalars import PhaseScalar

D = c4_calculus()
A = D.alg
BASE = [g.name for g in D.base.gens]
letters = st.sampled_from(BASE)
forms = st.one_of(letters.map(A.gen), letters.map(D.dgen))
elements = st.lists(forms, min_size=1, max_size=3).map(
    lambda xs: __import__("functools").reduce(lambda a, b: a * b, xs))


@given(elements)
def test_d_squared_vanishes(e):
    assert D.d(D.d(e)).is_zero()


@given(elements, elements)
def test_graded_leibniz(x, y):
    sign = PhaseScalar.coerce((-1) ** D.form_degree(x))
    assert D.d(x * y) == D.d(x) * y + (x * D.d(y)).scale(sign)


def test_differentials_follow_the_letter_phases():
    tab = calculus_relation_table(D)
    assert len(tab) == 64 and all(tab.values())


def test_one_forms_anticommute_with_phase():
    z1, z3 = A.gen("z1"), A.gen("z3")
    dz1, dz3 = D.d(z1), D.d(z3)
    c = (z1 * z3).terms[next(iter((z1 * z3).terms))] * (z3 * z1).terms[next(iter((z3 * z1).terms))].inverse()
    assert dz1 * dz3 == -(dz3 * dz1).scale(c)
    assert (dz1 * dz1).is_zero()


def test_dname():
    assert dname("z1") == "d[z1]"


def test_s4_calculus_relations():
    assert all(calculus_relation_table(s4_calculus()).values())


def test_radius_inverse_differential():
    R = radius_calculus()
    red = radius_reducer(R)
    s = R.gen("r2inv")
    from twistalg.spheres import sphere_sum
    E = R.lift(sphere_sum(R.base))
    # d(s E) = 0 once s E = 1 is imposed
    assert red(R.d(s * E)).is_zero()


def test_curvature_is_a_two_form():
    R = radius_calculus()
    red = radius_reducer(R)
    _, _, p = basic_projector_forms(R)
    K = curvature(R, p, red)
    assert K.shape == (4, 4)
    assert any(not K[i, j].is_zero() for i in range(4) for j in range(4))
    assert mat_mul(mat_mul(p, R.d_matrix(p)), p).map(red, R.alg).is_zero()


def test_rules_must_be_closed():
    from twistalg.hopf import torus_algebra
    H = torus_algebra(CocycleData.standard())
    with pytest.raises(PresentationError):
        DgaPresentation(H)
    assert DgaPresentation(H, closed=[g.name for g in H.gens]).alg is not None
