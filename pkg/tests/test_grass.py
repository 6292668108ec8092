from collections import Counter

import pytest

from conftest import A1, A2, A3_LINEAR, A3_SINK, A3_SOURCE, corpus_quivers
from qgrass.errors import ConventionMismatch, NotDynkin, OrderAssumptionFails, WeightMismatch
from qgrass.grass import (dual_canonical_all, dual_canonical_data, dual_pbw, dual_root_vector,
                          euler_characteristic, is_grassmannian_nonempty, multiplicity_polynomial,
                          normalize_poincare, point_count, poincare, poincare_for, poincare_raw,
                          poincare_typeA_fast)
from qgrass.laurent import ONE, Q, ZERO, LaurentPoly, quantum_factorial
from qgrass.quiver import Quiver, dim_vectors_up_to, word_i_nu
from qgrass.roots import root_system
from qgrass.shuffle import ShuffleElement
from qgrass.words import commutation_class

P = LaurentPoly.parse
W = ShuffleElement.word


def test_dual_root_vectors():
    assert dual_root_vector(A2, (1, 1)) == W((1, 2))
    assert dual_root_vector(A2, (0, 1)) == W((2,))
    assert commutation_class((1, 2), A3_SINK) == [(2, 1), (1, 2)]


def test_dual_pbw():
    assert dual_pbw(A1, ((1,), (1,))) == W((1, 1), Q + Q ** -1)
    assert dual_pbw(A2, ((1, 1), (1, 0))) == W((1, 2, 1)) + W((1, 1, 2), Q + Q ** -1)
    assert dual_pbw(A2, ((1, 1),)) == dual_root_vector(A2, (1, 1))


@pytest.mark.parametrize("m", range(1, 6))
def test_dual_canonical_single_vertex(m):
    assert dual_canonical_all(A1, (m,)) == {((1,),) * m: W((1,) * m, quantum_factorial(m))}


def test_dual_canonical_simple_root():
    assert dual_canonical_all(A2, (0, 1)) == {((0, 1),): W((2,))}


def test_height_cap():
    with pytest.raises(ValueError):
        dual_canonical_data(A2, (4, 3))
    assert dual_canonical_data(A2, (4, 3), cap=7).partitions


def test_poincare_raw_and_normalize():
    assert poincare_raw(A1, (1,), (1,), ((1,), (1,))) == 1 + Q ** -2
    assert poincare_raw(A2, (1, 0), (1, 1), ((1, 1), (1, 0))) == Q ** -1 + Q ** -3
    for nu in [(2, 1), (0, 3)]:
        lam = root_system(A2).kostant_partitions(nu)[-1]
        res = normalize_poincare(poincare_raw(A2, nu, (0, 0), lam))
        assert res.normalized == ONE
    res = normalize_poincare(Q ** -1 + Q ** -3)
    assert res.normalized == 1 + Q ** 2 and res.shift == 3
    res = normalize_poincare(1 + Q ** -2)
    assert res.normalized == 1 + Q ** 2 and res.shift == 2
    assert normalize_poincare(ZERO).normalized == ZERO
    with pytest.raises(ConventionMismatch):
        normalize_poincare(1 + Q)
    with pytest.raises(WeightMismatch):
        poincare_raw(A2, (1, 0), (1, 1), ((1, 1),))


def test_poincare_examples():
    assert poincare_for(A1, (2,), (1,)).normalized == 1 + Q ** 2
    assert poincare_for(A1, (4,), (2,)).normalized == P("1 + q^2 + 2q^4 + q^6 + q^8")
    assert poincare_for(A2, (1, 1), (1, 0)).is_empty
    res = poincare_for(A2, (2, 1), (1, 1))
    assert res.normalized == 1 + Q ** 2 and res.partition == ((1, 1), (1, 0))
    assert res.label == res.partition and res.notes == ()


def test_poincare_fast_path():
    assert poincare_typeA_fast(A2, ((1, 1), (1, 0)), (1, 0), (1, 1)) == Q ** -1 + Q ** -3
    assert poincare_typeA_fast(A2, ((1, 1), (1, 0)), (2, 1), (0, 0)) == \
        poincare_raw(A2, (2, 1), (0, 0), ((1, 1), (1, 0)))


def test_fast_path_with_commuting_letters():
    # in 1 <- 2 -> 3 the letters 2 and 3 commute, so alpha1+alpha2+alpha3 carries two words
    assert dual_root_vector(A3_SOURCE, (1, 1, 1)) == W((1, 3, 2)) + W((1, 2, 3))
    lam = ((1, 1, 1),)
    for mu in [(0, 0, 0), (0, 1, 0), (0, 1, 1)]:
        nu = tuple(1 - m for m in mu)
        assert poincare_typeA_fast(A3_SOURCE, lam, nu, mu) == poincare_raw(A3_SOURCE, nu, mu, lam)


def test_multiplicity_polynomial():
    assert multiplicity_polynomial(A1, (1,), (1,), ((1,), (1,))) == Q + Q ** -1
    assert multiplicity_polynomial(A2, (1, 0), (1, 1), ((1, 1), (1, 0))) == 1 + Q ** -2
    assert multiplicity_polynomial(A2, (1, 0), (1, 1), ((0, 1), (1, 0), (1, 0))) == ZERO


def test_derived_quantities():
    assert not is_grassmannian_nonempty(A2, ((1, 1),), (0, 1), (1, 0))
    assert is_grassmannian_nonempty(A2, ((1, 1),), (1, 0), (0, 1))
    res = poincare_for(A1, (4,), (2,))
    assert euler_characteristic(res) == 6
    assert point_count(poincare_for(A1, (2,), (1,)), 3) == 4


def test_fallback_for_unadapted_orientation():
    res = poincare_for(A3_SINK, (1, 1, 1), (0, 0, 1))
    assert res.partition == ((1, 1, 1),)
    assert res.label == ((0, 1, 0), (1, 0, 1)) and res.notes
    assert res.normalized == ONE
    with pytest.raises(OrderAssumptionFails):
        poincare_for(A3_SINK, (1, 1, 1), (0, 0, 1), strict=True)
    # adapted orientations never fall back
    assert poincare_for(A3_LINEAR, (1, 1, 1), (0, 0, 1), strict=True).notes == ()


def test_non_dynkin_needs_element():
    kronecker = Quiver(2, ((1, 2), (1, 2)))
    with pytest.raises(NotDynkin):
        poincare(kronecker, (0, 1), (1, 0))
    # indecomposable of dimension (1,1): its only line is at vertex 2
    elem = W((1, 2))
    res = poincare(kronecker, (1, 0), (0, 1), dual_canonical=elem)
    assert res.normalized == ONE and res.notes


def test_user_partition_outside_type_a_warns():
    d4 = Quiver(4, ((1, 4), (2, 4), (3, 4)))
    lam = ((1, 0, 0, 1),)
    with pytest.warns(UserWarning, match="unverified"):
        res = poincare(d4, (1, 0, 0, 0), (0, 0, 0, 1), partition=lam)
    assert res.normalized == ONE
    with pytest.warns(UserWarning):
        assert poincare(d4, (0, 0, 0, 1), (1, 0, 0, 0), partition=lam).is_empty


@pytest.mark.parametrize("name,quiver", corpus_quivers())
def test_max_word_of_dual_pbw(name, quiver):
    # the leading coefficient is the product of quantum factorials of the multiplicities
    rs = root_system(quiver)
    for nu in dim_vectors_up_to(quiver.n, 5, 1):
        for lam in rs.kostant_partitions(nu):
            r = dual_pbw(quiver, lam)
            lead = ONE
            for m in Counter(lam).values():
                lead = lead * quantum_factorial(m)
            assert r.max_word() == rs.good_word(lam) and r.coefficient(r.max_word()) == lead


@pytest.mark.parametrize("name,quiver", corpus_quivers())
def test_single_constant_sheaf_element(name, quiver):
    # exactly one dual canonical element carries the word i_nu
    for nu in dim_vectors_up_to(quiver.n, 5, 1):
        elems = dual_canonical_all(quiver, nu)
        hits = [lam for lam, e in elems.items() if e.coefficient(word_i_nu(nu))]
        assert len(hits) == 1
