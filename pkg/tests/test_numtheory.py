import itertools
import math
from functools import reduce

import pytest
from hypothesis import given, strategies as st

from maxorders.errors import InvalidInput
from maxorders.numtheory import (
    FiniteAbelianGroup,
    GroupElement,
    abelian_groups_of_order,
    divisors,
    element_order,
    factorize,
    lcm_list,
)

# number of partitions of k, k = 0..10
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


@pytest.mark.parametrize("ms, expected", [([7, 7], 7), ([3, 9], 9), ([2, 3, 3], 6)])
def test_lcm_examples(ms, expected):
    assert lcm_list(ms) == expected


def test_lcm_rejects_empty_and_nonpositive():
    with pytest.raises(InvalidInput):
        lcm_list([])
    with pytest.raises(InvalidInput):
        lcm_list([3, 0])


@given(st.lists(st.integers(1, 10**6), min_size=1, max_size=6))
def test_lcm_matches_pairwise_fold(ms):
    L = lcm_list(ms)
    assert all(L % m == 0 for m in ms)
    assert L == reduce(lambda a, b: a * b // math.gcd(a, b), ms)


@given(st.lists(st.integers(1, 12), min_size=1, max_size=4))
def test_lcm_is_least_common_multiple(ms):
    L = lcm_list(ms)
    smallest = next(c for c in itertools.count(1) if all(c % m == 0 for m in ms))
    assert L == smallest


@pytest.mark.parametrize("n, expected", [(1, [1]), (8, [1, 2, 4, 8]), (6, [1, 2, 3, 6])])
def test_divisors_examples(n, expected):
    assert divisors(n) == expected


@given(st.integers(1, 3000))
def test_divisors_match_trial_division(n):
    assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


@given(st.integers(1, 10**6))
def test_factorize_reconstructs(n):
    f = factorize(n)
    assert math.prod(p**e for p, e in f.items()) == n
    assert all(all(p % q for q in range(2, math.isqrt(p) + 1)) for p in f)


def test_groups_of_order_examples():
    assert abelian_groups_of_order(1) == [FiniteAbelianGroup(())]
    assert FiniteAbelianGroup(()).order == 1
    four = abelian_groups_of_order(4)
    assert set(g.invariant_factors for g in four) == {(4,), (2, 2)}
    assert len(abelian_groups_of_order(16)) == 5


@pytest.mark.parametrize("n", range(1, 201))
def test_groups_of_order_count_and_orders(n):
    groups = abelian_groups_of_order(n)
    expected = math.prod(PARTITION_COUNTS[e] for e in factorize(n).values())
    assert len(groups) == expected
    assert len(set(groups)) == len(groups)
    assert all(G.order == n for G in groups)


def test_invariant_factor_validation():
    with pytest.raises(InvalidInput):
        FiniteAbelianGroup((1, 4))
    with pytest.raises(InvalidInput):
        FiniteAbelianGroup((4, 6))


@given(st.lists(st.integers(1, 30), max_size=4), st.randoms())
def test_canonical_form_ignores_factor_order(orders, rnd):
    shuffled = orders[:]
    rnd.shuffle(shuffled)
    G, H = FiniteAbelianGroup.from_cyclic(orders), FiniteAbelianGroup.from_cyclic(shuffled)
    assert G == H
    assert G.order == math.prod(orders)


def test_cyclic_decomposition_merges_coprime_factors():
    assert FiniteAbelianGroup.from_cyclic([2, 3]) == FiniteAbelianGroup.cyclic(6)
    assert FiniteAbelianGroup.from_cyclic([2, 2]) != FiniteAbelianGroup.cyclic(4)


def test_element_order_examples():
    Z6 = FiniteAbelianGroup.cyclic(6)
    assert element_order(Z6, GroupElement((0,))) == 1
    assert element_order(Z6, GroupElement((3,))) == 2
    assert element_order(FiniteAbelianGroup((2, 4)), GroupElement((1, 2))) == 2
    with pytest.raises(InvalidInput):
        element_order(Z6, GroupElement((1, 1)))


def _naive_order(G, x):
    acc, t = x, 1
    while acc != G.zero():
        acc, t = G.add(acc, x), t + 1
    return t


def test_element_order_matches_repeated_addition():
    for n in range(1, 65):
        for G in abelian_groups_of_order(n):
            for x in G.elements():
                assert element_order(G, x) == _naive_order(G, x)


def test_identity_and_element_length():
    G = FiniteAbelianGroup((2, 6))
    assert G.zero() == GroupElement((0, 0))
    assert len(G.element([5, 13]).coords) == G.rank
    assert G.element([5, 13]) == GroupElement((1, 1))
    assert G.generated_by(G.standard_generators())
    assert len(G.subgroup([G.element([0, 2])])) == 3
