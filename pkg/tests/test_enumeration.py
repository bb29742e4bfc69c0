import itertools

import pytest

from alexdim.enumeration import (
    brute_force_preorders,
    census,
    census_rows,
    enumerate_posets,
    enumerate_preorders,
    enumerate_topologies,
    rows_to_csv,
    summarize,
)
from alexdim.errors import CarrierTooLarge
from alexdim.space import is_t0, specialisation_preorder

PREORDER_COUNTS = [1, 1, 4, 29, 355, 6942]
POSET_COUNTS = [1, 1, 3, 19, 219, 4231]


@pytest.mark.parametrize("n", range(5))
def test_counts(n):
    assert sum(1 for _ in enumerate_preorders(n)) == PREORDER_COUNTS[n]
    assert sum(1 for _ in enumerate_posets(n)) == POSET_COUNTS[n]


@pytest.mark.extended
def test_counts_n5():
    assert sum(1 for _ in enumerate_preorders(5)) == PREORDER_COUNTS[5]
    assert sum(1 for _ in enumerate_posets(5)) == POSET_COUNTS[5]


@pytest.mark.parametrize("n", range(5))
def test_backtracking_matches_brute_filter(n):
    assert [p.encode() for p in enumerate_preorders(n)] == [p.encode() for p in brute_force_preorders(n)]


@pytest.mark.parametrize("n", range(5))
def test_matches_topology_brute_force(n):
    from_topologies = sorted(specialisation_preorder(t).encode() for t in enumerate_topologies(n))
    assert from_topologies == [p.encode() for p in enumerate_preorders(n)]


@pytest.mark.parametrize("n", range(6))
def test_strictly_ascending(n):
    codes = [p.encode() for p in enumerate_preorders(n)]
    assert all(a < b for a, b in zip(codes, codes[1:]))


@pytest.mark.parametrize("n", range(5))
def test_posets_are_t0_subsequence(n):
    assert [p.encode() for p in enumerate_posets(n)] == [
        p.encode() for p in enumerate_preorders(n) if is_t0(p)
    ]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_closed_under_permutation(n):
    codes = {p.encode() for p in enumerate_preorders(n)}
    for p in enumerate_preorders(n):
        for perm in itertools.permutations(range(n)):
            assert p.permute(perm).encode() in codes


def test_guards():
    with pytest.raises(CarrierTooLarge):
        enumerate_preorders(7, allow_large=True)
    with pytest.raises(CarrierTooLarge):
        enumerate_preorders(6)
    with pytest.raises(CarrierTooLarge):
        enumerate_posets(-1)
    with pytest.raises(CarrierTooLarge):
        census_rows(9)
    with pytest.raises(CarrierTooLarge):
        enumerate_topologies(5)


def test_census_n1():
    rows, summary = census(1)
    assert len(rows) == 1 and rows[0].dimension == 0
    assert summary["total"] == 1


def test_census_n2():
    rows, _ = census(2)
    # ascending encodings: antichain, 1<=0, 0<=1, indiscrete
    assert [(r.is_t0, r.quotient_size, r.dimension) for r in rows] == [
        (True, 2, 0),
        (True, 2, 1),
        (True, 2, 1),
        (False, 1, 0),
    ]


def test_census_n4_row_invariants():
    rows, summary = census(4)
    assert len(rows) == 355 and summary["total"] == 355
    assert [r.space_id for r in rows] == list(range(355))
    for r in rows:
        assert r.dimension <= r.quotient_size - 1
        assert r.dimension <= r.n - 1
    assert sum(c["count"] for c in summary["by_class"]) == 355


def test_census_posets_only():
    rows, _ = census(3, posets_only=True)
    assert len(rows) == 19 and all(r.is_t0 for r in rows)


def test_csv():
    rows, _ = census(2)
    assert rows_to_csv(rows) == (
        "space_id,n,is_t0,quotient_size,dimension\n"
        "0,2,true,2,0\n"
        "1,2,true,2,1\n"
        "2,2,true,2,1\n"
        "3,2,false,1,0\n"
    )


def test_summary_order_independent():
    rows, summary = census(3)
    assert summarize(reversed(rows)) == summary
