import itertools

import pytest

from twistalg.cocycle import CocycleData, printed_eta, tau_degrees
from twistalg.spheres import (ProjectorError, alpha_beta_x, basic_projector, build_sphere,
                              charge_one_parameter_space, delta_u_gauge_check, phase_ratio,
                              s4_inclusion, sphere_sum, verify_r2_central)

F = CocycleData.standard()


def test_s7_letter_phases_follow_eta(s7):
    A = s7.alg
    eta = printed_eta(F.params)
    # z_j z_l = eta_lj z_l z_j for unstarred letters
    for j, l in itertools.product(range(1, 5), repeat=2):
        assert A.gen(f"z{j}") * A.gen(f"z{l}") == (A.gen(f"z{l}") * A.gen(f"z{j}")).scale(eta[l - 1][j - 1])


def test_radius_is_central():
    assert verify_r2_central(F)


def test_sphere_sum_is_self_adjoint(s7):
    e = sphere_sum(s7.alg)
    assert e.star() == e


def test_alpha_beta_x_relations(s7):
    abx = alpha_beta_x(s7.alg)
    a, b, x = abx["alpha"], abx["beta"], abx["x"]
    lam = F.params.lam()
    assert a * b == (b * a).scale(lam)
    assert x.star() == x


def test_s4_inclusion_kills_the_quadric(s7):
    S4 = build_sphere("S4", F)
    inc = s4_inclusion(S4, s7)
    assert all(inc(r).is_zero() for r in S4.alg.relations)


def test_projector_exists(s7):
    u, q, p = basic_projector(s7)
    assert q.shape == (4, 4)


def test_projector_needs_s7():
    with pytest.raises(Exception):
        basic_projector(build_sphere("S4", F))


def test_unknown_variant():
    with pytest.raises(ValueError):
        build_sphere("S3", F)


@pytest.mark.parametrize("r1,r2", [(0, 0), (0, 1), (3, -3)])
def test_charge_one_structure(r1, r2):
    rep = charge_one_parameter_space(r1, r2, F)
    assert rep.quadric and rep.matrix_pattern
    assert rep.relations["m central"] and rep.relations["n central"]


def test_charge_one_engine_phase_frozen():
    # independent count: g1 g2 picks up mu^(2(1 - r1 - r2)); mu = z^2
    for r1, r2 in [(0, 0), (0, 1), (1, 0), (2, -1), (1, 1)]:
        rep = charge_one_parameter_space(r1, r2, F)
        assert rep.nu_exponent == 4 * (1 - r1 - r2)
        assert rep.commutative == (r1 + r2 == 1)


def test_phase_ratio(s7):
    A = s7.alg
    x = A.gen("z1") * A.gen("z3")
    assert phase_ratio(x.scale(F.params.mu()), x) == 2
    assert phase_ratio(x, A.gen("z2")) is None


def test_delta_u_rejects_non_real_weights():
    with pytest.raises(ValueError):
        delta_u_gauge_check([(1, 0), (1, 0), (0, 1), (0, -1)], F)
