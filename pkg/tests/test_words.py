import itertools

import pytest
from hypothesis import given, settings, strategies as st

from pknuth import goldens
from pknuth.poset import INF, enumerate_orders, from_partition, trivial_order, usual_order
from pknuth.verify import oracle_ght, oracle_ginv, oracle_lds
from pknuth.words import (des_p, finv_count, finv_p, format_word, ght_p, ginv_p, is_permutation,
                          is_word, parse_word, stats)

ORDER9 = from_partition(goldens.STATS_EXAMPLE["lambda"], goldens.STATS_EXAMPLE["n"])
W1 = goldens.STATS_EXAMPLE["word"]


def usual_inversions(w):
    return {(w[i], w[j]) for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j]}


def test_statistics_example():
    assert des_p(ORDER9, W1) == {1, 2, 4, 6, 8}
    assert ginv_p(ORDER9, W1) == goldens.STATS_EXAMPLE["ginv"]
    assert ght_p(ORDER9, W1) == 3
    assert finv_p(ORDER9, W1) == goldens.STATS_EXAMPLE["finv"]
    assert finv_count(ORDER9, W1) == 8


def test_stats_dict():
    s = stats(ORDER9, W1)
    assert s["des"] == [1, 2, 4, 6, 8] and s["ght"] == 3 and s["finv_count"] == 8
    assert len(s["ginv"]) == 12


def test_usual_and_trivial_orders():
    for n in range(1, 6):
        U, T = usual_order(n), trivial_order(n)
        for w in itertools.permutations(range(1, n + 1)):
            assert des_p(T, w) == frozenset()
            assert ginv_p(T, w) == frozenset()
            assert ght_p(T, w) == 1
            assert finv_p(T, w) == usual_inversions(w)
            assert ginv_p(U, w) == usual_inversions(w)
            assert finv_p(U, w) == frozenset()
            assert ght_p(U, w) == oracle_lds(w)
        assert des_p(U, tuple(range(1, n + 1))) == frozenset()


def test_ginv_and_ght_agree_with_oracles_n6():
    for n in range(1, 7):
        perms = list(itertools.permutations(range(1, n + 1)))
        for P in enumerate_orders(n):
            for w in perms:
                assert ginv_p(P, w) == oracle_ginv(P, w), (P, w)
                assert ght_p(P, w) == oracle_ght(P, w), (P, w)


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=1, max_value=9).flatmap(
    lambda n: st.tuples(st.permutations(range(1, n + 1)), st.integers(0, 10 ** 6))))
def test_fast_paths_agree_on_random_inputs(data):
    w, k = data
    w = tuple(w)
    orders = list(enumerate_orders(len(w)))
    P = orders[k % len(orders)]
    assert ginv_p(P, w) == oracle_ginv(P, w)
    assert ght_p(P, w) == oracle_ght(P, w)
    assert finv_count(P, w) == len(finv_p(P, w))
    # every comparable out-of-order pair is genuine or not; incomparable pairs never are
    assert all(P.succ(a, b) for a, b in ginv_p(P, w))


def test_parse_and_format():
    assert parse_word("9,5,1,inf") == (9, 5, 1, INF)
    assert parse_word("3241") == (3, 2, 4, 1)
    assert parse_word("oo, 2") == (INF, 2)
    assert parse_word("") == ()
    assert format_word((3, INF, 1)) == "3,inf,1"
    with pytest.raises(ValueError):
        parse_word("3,x")


def test_word_predicates():
    assert is_word((3, INF, 1, INF), 3)
    assert not is_word((3, 3))
    assert not is_word((4,), 3)
    assert is_permutation((2, 1, 3)) and not is_permutation((2, 1, 1))
