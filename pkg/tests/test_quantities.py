import math

import pytest
from hypothesis import given, strategies as st

from maxorders.errors import InvalidGenus
from maxorders.quantities import (
    AE,
    AH,
    AH_MINUS,
    A_MINUS,
    CE,
    CH,
    CH_FULL,
    CH_MINUS,
    A,
    C,
    C_FULL,
    C_MINUS,
    EvenPair,
    ExtType,
    Kind,
    OddPair,
    Quantity,
    a_minus_surface,
    ah_minus,
    all_quantities,
    ch_minus,
    ch_minus_scan,
    ch_minus_scan_table,
    classical_order,
    consistency_check,
    extendable_max,
    extendable_type_max,
    full_handlebody_max,
    max_order,
)

# Optimal value and witnesses for g = 2..20, from a standalone double loop
# over odd pairs (not using the package).
CH_MINUS_FROZEN = {
    2: (6, [(3, 3)]),
    3: (6, [(1, 3)]),
    4: (10, [(5, 5)]),
    5: (10, [(1, 5)]),
    6: (18, [(3, 9), (9, 3)]),
    7: (18, [(3, 3)]),
    8: (30, [(3, 5), (5, 3)]),
    9: (18, [(1, 9)]),
    10: (30, [(3, 15), (15, 3)]),
    11: (30, [(5, 3)]),
    12: (42, [(3, 7), (7, 3)]),
    13: (30, [(3, 5)]),
    14: (42, [(3, 21), (21, 3)]),
    15: (42, [(7, 3)]),
    16: (34, [(17, 17)]),
    17: (34, [(1, 17)]),
    18: (54, [(3, 27), (27, 3)]),
    19: (54, [(9, 3)]),
    20: (66, [(3, 11), (11, 3)]),
}

genus = st.integers(2, 10**4)


@pytest.mark.parametrize(
    "q, g, expected", [(C, 2, 10), (AH, 5, 16), (CE, 3, 4), (A, 7, 32), (CH, 3, 6), (AE, 3, 8)]
)
def test_classical_examples(q, g, expected):
    assert classical_order(q, g) == expected


@given(genus)
def test_classical_formulas(g):
    even = g % 2 == 0
    assert classical_order(C, g) == 4 * g + 2
    assert classical_order(A, g) == 4 * g + 4
    assert classical_order(CH, g) == (2 * g + 2 if even else 2 * g)
    assert classical_order(AH, g) == (16 if g == 5 else 2 * g + 2)
    assert classical_order(CE, g) == (2 * g + 2 if even else 2 * g - 2)
    assert classical_order(AE, g) == 2 * g + 2
    assert classical_order(C_MINUS, g) == (4 * g + 4 if even else 4 * g - 4)
    assert classical_order(C_FULL, g) == (4 * g + 4 if even else 4 * g + 2)


@pytest.mark.parametrize(
    "kind, t, g, expected",
    [
        (Kind.CYCLIC, ExtType.MP, 2, 12),
        (Kind.CYCLIC, ExtType.MIX, 4, None),
        (Kind.ABELIAN, ExtType.MIX, 4, 12),
        (Kind.CYCLIC, ExtType.MM, 3, 6),
        (Kind.ABELIAN, ExtType.MIX, 5, None),
    ],
)
def test_extendable_type_examples(kind, t, g, expected):
    assert extendable_type_max(kind, t, g) == expected


@given(genus)
def test_extendable_type_table(g):
    even = g % 2 == 0
    cyc = {t: extendable_type_max(Kind.CYCLIC, t, g) for t in ExtType}
    ab = {t: extendable_type_max(Kind.ABELIAN, t, g) for t in ExtType}
    assert cyc[ExtType.PP] == classical_order(CE, g)
    assert cyc[ExtType.PM] == 2 * g + 2
    assert cyc[ExtType.MP] == (4 * g + 4 if even else 4 * g - 4)
    assert cyc[ExtType.MM] == 2 * g + 1 + (-1) ** g
    assert cyc[ExtType.MIX] is None
    assert ab[ExtType.PP] == 2 * g + 2
    assert ab[ExtType.PM] == ab[ExtType.MP] == ab[ExtType.MM] == 4 * g + 4
    assert ab[ExtType.MIX] == (2 * g + 4 if even else None)


@pytest.mark.parametrize(
    "kind, g, expected", [(Kind.CYCLIC, 2, 12), (Kind.CYCLIC, 3, 8), (Kind.ABELIAN, 7, 32)]
)
def test_extendable_max_examples(kind, g, expected):
    assert extendable_max(kind, g) == expected


def test_extendable_max_is_max_over_types():
    for g in range(2, 10**4 + 1):
        for kind in Kind:
            values = [v for t in ExtType if (v := extendable_type_max(kind, t, g)) is not None]
            assert extendable_max(kind, g) == max(values)


@pytest.mark.parametrize("g", sorted(CH_MINUS_FROZEN))
def test_ch_minus_frozen(g):
    value, witnesses = ch_minus(g)
    exp_value, exp_pairs = CH_MINUS_FROZEN[g]
    assert value == exp_value
    assert [w.as_tuple() for w in witnesses] == exp_pairs
    assert all(isinstance(w, EvenPair if g % 2 == 0 else OddPair) for w in witnesses)


def test_ch_minus_small_genus_values():
    assert ch_minus(2) == (6, [EvenPair(3, 3)])
    assert ch_minus(6) == (18, [EvenPair(3, 9), EvenPair(9, 3)])
    assert ch_minus(7) == (18, [OddPair(3, 3)])
    assert ch_minus(9) == (18, [OddPair(1, 9)])


@given(genus)
def test_witnesses_satisfy_their_equations(g):
    value, witnesses = ch_minus(g)
    assert witnesses
    for w in witnesses:
        a, b = w.as_tuple()
        assert a % 2 == 1 and b % 2 == 1
        if g % 2 == 0:
            L = math.lcm(a, b)
            assert L - (a + b) // math.gcd(a, b) + 1 == g
            assert 2 * L == value
        else:
            assert a * b - a + 1 == g
            assert 2 * a * b == value


@given(genus)
def test_trivial_pairs_are_feasible_lower_bounds(g):
    value, _ = ch_minus(g)
    if g % 2 == 0:
        w = EvenPair(g + 1, g + 1)
        assert w.genus() == g and w.order() == 2 * g + 2
        assert value >= 2 * g + 2
    else:
        w = OddPair(1, g)
        assert w.genus() == g and w.order() == 2 * g
        assert value >= 2 * g


@given(st.integers(2, 200))
def test_scan_agrees_with_parametrisation(g):
    assert ch_minus_scan(g) == ch_minus(g)


def test_scan_table_agrees_on_even_genera():
    table = ch_minus_scan_table(300)
    for g in range(2, 301, 2):
        value, witnesses = ch_minus(g)
        assert table[g] == (value, witnesses)


def test_large_genus_is_fast_and_exact():
    value, witnesses = ch_minus(10**6)
    assert value >= 2 * 10**6 + 2
    assert all(w.genus() == 10**6 for w in witnesses)


def test_ah_minus_and_surface_variant():
    assert ah_minus(5) == 32
    assert ah_minus(2) == 12
    for g in range(2, 200):
        assert ah_minus(g) == 2 * classical_order(AH, g)
        assert a_minus_surface(g) == ah_minus(g)


@pytest.mark.parametrize(
    "kind, g, expected", [(Kind.CYCLIC, 7, 18), (Kind.ABELIAN, 5, 32), (Kind.CYCLIC, 2, 6)]
)
def test_full_handlebody_examples(kind, g, expected):
    assert full_handlebody_max(kind, g) == expected


@pytest.mark.parametrize("g", [2, 3, 5, 100, 10**4])
def test_consistency_all_hold(g):
    results = consistency_check(g)
    assert results and all(ok for _, ok in results)


def test_consistency_mentions_odd_cyclic_case():
    assert extendable_type_max(Kind.CYCLIC, ExtType.MM, 3) == 6
    assert dict(consistency_check(3))["CE(-,-) = 2g+1+(-1)^g"]


@pytest.mark.parametrize("g", [1, 0, -3])
def test_genus_must_exceed_one(g):
    for fn in (
        lambda: classical_order(C, g),
        lambda: extendable_type_max(Kind.CYCLIC, ExtType.PP, g),
        lambda: extendable_max(Kind.ABELIAN, g),
        lambda: ch_minus(g),
        lambda: ah_minus(g),
        lambda: full_handlebody_max(Kind.CYCLIC, g),
        lambda: consistency_check(g),
    ):
        with pytest.raises(InvalidGenus, match="genus must exceed 1"):
            fn()


def test_quantity_names_round_trip():
    names = [q.name for q in all_quantities()]
    assert len(names) == len(set(names)) == 23
    for q in all_quantities():
        assert Quantity.parse(q.name) == q
        assert Quantity.parse(q.name.lower().replace("-", "−")) == q


def test_max_order_dispatch():
    r = max_order(CH_MINUS, 6)
    assert r.value == 18 and len(r.witnesses) == 2
    assert max_order(CH_FULL, 7).value == 18
    assert max_order(AH_MINUS, 5).value == 32
    assert max_order(A_MINUS, 5).value == 32
    assert max_order(Quantity.parse("CE(Mix)"), 4).value is None
