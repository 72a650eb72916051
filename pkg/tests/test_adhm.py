import pytest

from twistalg import adhm as ad
from twistalg.cocycle import CocycleData

F = CocycleData.standard()


@pytest.fixture(scope="module")
def k1():
    MA = ad.build_monad_algebra(1, F)
    return MA, ad.braided_with_c4(MA)


@pytest.fixture(scope="module")
def k2():
    MA = ad.build_monad_algebra(2, F)
    return MA, ad.braided_with_c4(MA)


def test_names():
    assert ad.mname(2, 3, 1) == "M2_3_1"
    assert ad.mname(2, 3, 1, True) == "M2_3_1s"


def test_relation_counts(k1, k2):
    assert len(k1[0].relations) == 10
    assert len(k2[0].relations) == 40
    assert len(ad.build_monad_algebra(2, F, ad.LITERAL).relations) == 36


def test_term_counts(k1):
    assert sorted({r.num_terms() for r in k1[0].relations}) == [4, 8]


def test_relations_are_star_closed(k1):
    MA = k1[0]
    for r in MA.relations:
        assert any(ad._proportional(r.star(), s) for s in MA.relations)


def test_n_is_determined_by_reality(k1):
    MA = k1[0]
    # N^1_ba = -(M^2_ab)^*
    assert MA.N(1, 1, 1) == -MA.M(2, 1, 1).star()
    assert MA.N(2, 1, 1) == MA.M(1, 1, 1).star()


@pytest.mark.parametrize("reading,k,want", [
    (ad.LITERAL, 1, True), (ad.LITERAL, 2, False),
    (ad.SYMMETRIC, 1, True), (ad.SYMMETRIC, 2, True),
    (ad.MONAD, 1, True), (ad.MONAD, 2, True),
])
def test_classical_limit_by_reading(reading, k, want):
    assert ad.classical_limit_check(k, reading).ok is want


@pytest.mark.parametrize("reading,want_ab", [(ad.LITERAL, False), (ad.SYMMETRIC, False), (ad.MONAD, True)])
def test_monad_conditions_by_reading(reading, want_ab):
    MA = ad.build_monad_algebra(1, F, reading)
    rep = ad.verify_monad_conditions(MA, ad.braided_with_c4(MA))
    assert rep.conditions["a"].ok is want_ab
    assert rep.conditions["b"].ok is want_ab
    assert rep.conditions["c"].ok


def test_commutation(k1):
    MA = k1[0]
    assert all(ad.commutation_check(MA, j, l) for j in range(1, 5) for l in range(1, 5))


def test_projector_k1(k1):
    P = ad.adhm_projector(*k1, explicit=True)
    assert P.ok and P.gram and P.rho2_selfadjoint and P.explicit


def test_beta_is_multiplicative_and_star_preserving(k1):
    b = ad.beta_map(*k1)
    assert all(ad.beta_checks(b).values())


def test_beta_is_injective_on_letters(k1):
    b = ad.beta_map(*k1)
    images = [b(b.source.gen(g.name)) for g in b.source.gens]
    assert len({im.render() for im in images}) == len(images)


def test_basic_point():
    MA = ad.build_monad_algebra(1, ad.classical_cocycle())
    assert all(ad.classical_basic_point(MA, ad.braided_with_c4(MA)).values())


@pytest.mark.parametrize("r1,r2", [(0, 1), (1, 0), (0, 0), (2, -1), (1, 1)])
def test_coinvariants(k1, r1, r2):
    rep = ad.adhm_coinvariants(k1[0], r1, r2)
    assert rep.phases_match
    assert rep.commutative == (r1 + r2 == 1) == rep.expected_commutative
    assert len(rep.generators) == 16


def test_coinvariant_phase_frozen(k1):
    # eta_jl^(m_l + m_j - 1) with eta_13 = mu = z^2 and m = (r1, r1, r2, r2)
    assert ad.coinvariant_phase(k1[0], 0, 0, 1, 3) == 2 * (0 + 0 - 1)
    assert ad.coinvariant_phase(k1[0], 2, 1, 1, 3) == 2 * (1 + 2 - 1)
    assert ad.coinvariant_phase(k1[0], 0, 1, 1, 2) == 0


def test_k2_conditions(k2):
    rep = ad.verify_monad_conditions(*k2)
    assert rep.ok


def test_bad_inputs():
    with pytest.raises(ValueError):
        ad.build_monad_algebra(0, F)
    with pytest.raises(ValueError):
        ad.build_monad_algebra(1, F, "sideways")
