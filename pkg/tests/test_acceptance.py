"""Exit criteria, one test per criterion.

Each test appends a PASS/FAIL line that conftest prints in the terminal
summary.  Run the n = 5 extensions with ``pytest --extended``.
"""

import subprocess
import sys
import time
from contextlib import contextmanager

import pytest

from alexdim import bench
from alexdim.dimension import height, krull_dimension_bruteforce, verify_theorem
from alexdim.enumeration import enumerate_posets, enumerate_preorders, enumerate_topologies
from alexdim.irreducible import irreducible_closed_sets, is_irreducible, point_closures
from alexdim.quotient import check_closure_bijection, check_order_reflection, kolmogorov_quotient
from alexdim.space import Preorder, alexandrov_topology, point_closure, specialisation_preorder

from conftest import ACCEPTANCE_LINES

SMALL_TOTAL = 390  # 1 + 1 + 4 + 29 + 355


def spaces(max_n):
    for n in range(max_n + 1):
        yield from enumerate_preorders(n)


@contextmanager
def criterion(name):
    try:
        yield
    except BaseException:
        ACCEPTANCE_LINES.append(f"FAIL  {name}")
        raise
    ACCEPTANCE_LINES.append(f"PASS  {name}")


def test_theorem_exhaustive():
    with criterion("theorem: krull = height = quotient height on all 390 spaces, n <= 4, < 60 s"):
        start = time.perf_counter()
        count = 0
        for p in spaces(4):
            r = verify_theorem(p)
            assert r.krull_bruteforce == r.height_fast == r.quotient_height, (p, r)
            count += 1
        assert count == SMALL_TOTAL
        assert time.perf_counter() - start < 60


@pytest.mark.extended
def test_theorem_exhaustive_n5():
    with criterion("theorem: all 6942 spaces at n = 5, < 10 min"):
        start = time.perf_counter()
        count = 0
        for p in enumerate_preorders(5):
            r = verify_theorem(p)
            assert r.krull_bruteforce == r.height_fast == r.quotient_height, (p, r)
            count += 1
        assert count == 6942
        assert time.perf_counter() - start < 600


def test_irreducibles_are_point_closures():
    with criterion("irreducible closed sets = point closures on all 390 spaces"):
        count = 0
        for p in spaces(4):
            assert set(irreducible_closed_sets(p)) == set(point_closures(p)), p
            count += 1
        assert count == SMALL_TOTAL


def test_point_closures_irreducible():
    with criterion("every point closure passes the definitional irreducibility oracle"):
        for p in spaces(4):
            for x in range(p.n):
                assert is_irreducible(p, point_closure(p, x)).verdict, (p, x)


def test_quotient_properties():
    with criterion("order reflection and closure bijection hold on all 390 spaces"):
        count = 0
        for p in spaces(4):
            q = kolmogorov_quotient(p)
            assert check_order_reflection(p, q), p
            assert check_closure_bijection(p, q), p
            count += 1
        assert count == SMALL_TOTAL


def test_roundtrips():
    with criterion("topology <-> preorder roundtrips exact for n <= 4"):
        topologies = 0
        for n in range(5):
            for t in enumerate_topologies(n):
                assert alexandrov_topology(specialisation_preorder(t)) == t
                topologies += 1
        assert topologies == SMALL_TOTAL
        for p in spaces(4):
            assert specialisation_preorder(alexandrov_topology(p)) == p


def test_census_counts():
    with criterion("census counts 1,1,4,29,355 preorders and 1,1,3,19,219 posets"):
        assert [sum(1 for _ in enumerate_preorders(n)) for n in range(5)] == [1, 1, 4, 29, 355]
        assert [sum(1 for _ in enumerate_posets(n)) for n in range(5)] == [1, 1, 3, 19, 219]


@pytest.mark.extended
def test_census_counts_n5():
    with criterion("census counts at n = 5: 6942 preorders, 4231 posets"):
        assert sum(1 for _ in enumerate_preorders(5)) == 6942
        assert sum(1 for _ in enumerate_posets(5)) == 4231


def test_empty_space():
    with criterion("empty space: dim = height = -1"):
        empty = Preorder(0, ())
        assert krull_dimension_bruteforce(empty) == -1
        assert height(empty) == -1


def test_bench_performance_and_determinism():
    with criterion("bench 1e5 points / 1e6 edges / seed 42: height < 2 s, reports byte-identical"):
        report = bench.run(100_000, 1_000_000, 42)
        assert report.seconds < 2.0, report.seconds
        argv = [sys.executable, "-m", "alexdim", "bench",
                "--points", "100000", "--edges", "1000000", "--seed", "42"]
        first = subprocess.run(argv, capture_output=True, check=True)
        second = subprocess.run(argv, capture_output=True, check=True)
        assert first.stdout == second.stdout
        assert f"height={report.height}".encode() in first.stdout
