import pytest
from hypothesis import given, strategies as st

from conftest import A1, A2, A3_LINEAR, A3_SINK
from qgrass.errors import EmptyWord, LengthMismatch
from qgrass.quiver import dim_vectors_up_to, sub_dim_vectors, word_i_nu
from qgrass.words import (apply_perm, concat, format_word, is_lyndon, lex_compare,
                          lyndon_factorize, parity, parse_word, shuffle_degree, weight)

words = st.lists(st.integers(1, 3), min_size=1, max_size=9).map(tuple)


def test_lex_order():
    assert lex_compare((1,), (1, 2)) == -1
    assert lex_compare((1, 2), (2,)) == -1
    assert lex_compare((2, 1), (2, 1)) == 0


def test_basics():
    assert concat((1,), (1, 2)) == (1, 1, 2)
    assert weight((1, 1, 2), 2) == (2, 1)
    assert weight((), 2) == (0, 0)
    assert parse_word("1,1,2") == (1, 1, 2) and format_word((1, 2)) == "[1,2]"


def test_apply_perm():
    assert apply_perm((1, 2, 3), (2, 1, 2)) == (2, 1, 2)
    assert apply_perm((1, 3, 2), (1, 2, 1)) == (1, 1, 2)
    with pytest.raises(LengthMismatch):
        apply_perm((1, 2), (1, 2, 3))


def test_shuffle_degree():
    assert shuffle_degree((1, 2), (1, 2), A2) == 0
    assert shuffle_degree((2, 1), (1, 1), A1) == -2
    assert shuffle_degree((2, 1), (1, 2), A2) == 1


def test_parity():
    assert parity((1, 1, 2), A2) == 0
    assert parity((2,), A2) == 0
    assert parity((1, 2), A2) == 1


def test_lyndon():
    assert is_lyndon((1, 2)) and not is_lyndon((2, 1)) and not is_lyndon((1, 1))
    assert is_lyndon((3,))
    assert lyndon_factorize((1, 2, 1)) == [(1, 2), (1,)]
    with pytest.raises(EmptyWord):
        is_lyndon(())


@given(words)
def test_factorization_properties(w):
    factors = lyndon_factorize(w)
    assert concat(*factors) == w
    assert all(is_lyndon(f) for f in factors)
    assert all(a >= b for a, b in zip(factors, factors[1:]))


@given(st.permutations(range(1, 7)), st.lists(st.integers(1, 3), min_size=6, max_size=6))
def test_degree_is_sum_of_adjacent_swaps(perm, j):
    # bubble sort the target positions; each adjacent swap of letters a,b costs -a_ab
    j = tuple(j)
    pos = list(perm)
    letters = list(j)
    total = 0
    changed = True
    while changed:
        changed = False
        for k in range(len(pos) - 1):
            if pos[k] > pos[k + 1]:
                total -= A3_LINEAR.cartan(letters[k], letters[k + 1])
                pos[k], pos[k + 1] = pos[k + 1], pos[k]
                letters[k], letters[k + 1] = letters[k + 1], letters[k]
                changed = True
    assert shuffle_degree(tuple(perm), j, A3_LINEAR) == total


@pytest.mark.parametrize("quiver", [A2, A3_LINEAR, A3_SINK])
def test_parity_congruence(quiver):
    for total in dim_vectors_up_to(quiver.n, 5):
        for mu in sub_dim_vectors(total):
            nu = tuple(t - m for t, m in zip(total, mu))
            expected = (quiver.t_factor(nu, mu)
                        + sum(nu[s - 1] * mu[t - 1] for s, t in quiver.arrows)) % 2
            assert parity(word_i_nu(nu) + word_i_nu(mu), quiver) == expected
