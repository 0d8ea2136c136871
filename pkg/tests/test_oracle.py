import pytest

from maxorders.errors import InvalidGenus, InvalidInput, SearchTooLarge
from maxorders.grouphom import validate_witness
from maxorders.orbifolds import ClassA, ClassB, OrbifoldGroup, orb_euler_char_2d
from maxorders.oracle import (
    ch_minus_realizations,
    default_cap,
    oracle_ch_minus,
    oracle_max_abelian_op_surface,
    oracle_max_cyclic_op_surface,
    oracle_tables,
    search_abelian_op_surface,
    search_cyclic_op_surface,
)
from maxorders.quantities import ch_minus


@pytest.mark.parametrize("g, expected", [(2, 10), (3, 14), (4, 18)])
def test_cyclic_surface_examples(g, expected):
    assert oracle_max_cyclic_op_surface(g, default_cap(g)) == expected


@pytest.mark.parametrize("g, expected", [(2, 12), (3, 16), (5, 24)])
def test_abelian_surface_examples(g, expected):
    assert oracle_max_abelian_op_surface(g, default_cap(g)) == expected


@pytest.mark.parametrize("g", range(2, 7))
def test_cyclic_surface_matches_formula(g):
    assert oracle_max_cyclic_op_surface(g, 4 * g + 12) == 4 * g + 2


@pytest.mark.parametrize("g", range(2, 6))
def test_abelian_surface_matches_formula(g):
    assert oracle_max_abelian_op_surface(g, 4 * g + 12) == 4 * g + 4


@pytest.mark.parametrize("g", [2, 3, 4])
def test_raising_cap_finds_nothing_new(g):
    assert oracle_max_cyclic_op_surface(g, default_cap(g) + 8) == 4 * g + 2
    assert oracle_max_abelian_op_surface(g, default_cap(g) + 8) == 4 * g + 4


def test_surface_witness_is_consistent():
    for g in (2, 3, 4):
        w = search_abelian_op_surface(g, default_cap(g))
        assert validate_witness(OrbifoldGroup(w.signature), w.group, w.hom)
        assert w.group.order * orb_euler_char_2d(w.signature) == 2 - 2 * g
        w = search_cyclic_op_surface(g, default_cap(g))
        assert w.group.is_cyclic()
        assert validate_witness(OrbifoldGroup(w.signature), w.group, w.hom)


def test_surface_search_limits():
    with pytest.raises(SearchTooLarge):
        oracle_max_cyclic_op_surface(13, default_cap(13))
    with pytest.raises(SearchTooLarge):
        oracle_max_abelian_op_surface(9, default_cap(9))
    with pytest.raises(SearchTooLarge):
        oracle_max_cyclic_op_surface(2, 300)
    with pytest.raises(InvalidInput):
        oracle_max_cyclic_op_surface(3, 13)
    with pytest.raises(InvalidGenus):
        oracle_max_abelian_op_surface(1, 20)


@pytest.mark.parametrize("g, expected", [(6, 18), (7, 18), (2, 6)])
def test_ch_minus_examples(g, expected):
    assert oracle_ch_minus(g) == expected


def test_ch_minus_realizations_record_classes():
    hits = ch_minus_realizations(6)
    assert (ClassB(3, 9), 9, 18) in hits
    assert (ClassA(2, 3, 3), 6, 12) in hits
    assert all(order == 2 * N for _, N, order in ch_minus_realizations(7))


def test_ch_minus_matches_closed_form():
    for g in range(2, 2001):
        assert oracle_ch_minus(g) == ch_minus(g)[0], g


def test_ch_minus_limits():
    with pytest.raises(InvalidGenus):
        oracle_ch_minus(1)
    with pytest.raises(SearchTooLarge):
        oracle_ch_minus(10**4 + 1)


def test_tables_small_range_all_pass():
    cells = oracle_tables(range(2, 7))
    assert {c.quantity for c in cells} == {"c-surface", "a-surface", "ch-minus"}
    assert sum(c.quantity == "c-surface" for c in cells) == 5
    assert all(c.passed for c in cells)


def test_tables_empty_range():
    assert oracle_tables(range(0)) == []


@pytest.mark.slow
@pytest.mark.parametrize("g", range(7, 13))
def test_cyclic_surface_slow(g):
    assert oracle_max_cyclic_op_surface(g, 4 * g + 12) == 4 * g + 2


@pytest.mark.slow
@pytest.mark.parametrize("g", range(6, 9))
def test_abelian_surface_slow(g):
    assert oracle_max_abelian_op_surface(g, 4 * g + 12) == 4 * g + 4
