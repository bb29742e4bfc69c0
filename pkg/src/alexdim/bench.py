"""Seeded large preorders for timing the fast height path.

The preorder is never stored as a matrix.  It is the reflexive-transitive
closure of a generating digraph held as two arc arrays: a random DAG, plus
"clone" points tied to a random DAG node by arcs in both directions so that
the space is far from T0.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .errors import ResourceGuard
from .graph import condensation, dag_longest_path

DEFAULT_MAX_ELEMENTS = 50_000_000
CLONE_FRACTION = 10  # one clone per this many points


@dataclass(frozen=True)
class BenchGraph:
    points: int
    src: np.ndarray
    dst: np.ndarray
    dag_points: int
    dag_arcs: int

    @property
    def arcs(self) -> int:
        return int(self.src.size)


@dataclass(frozen=True)
class BenchReport:
    points: int
    arcs: int
    seed: int
    classes: int
    height: int
    seconds: float

    def lines(self) -> list[str]:
        """The deterministic part of the report; timing is kept separate."""
        return [
            f"points={self.points}",
            f"arcs={self.arcs}",
            f"seed={self.seed}",
            f"classes={self.classes}",
            f"height={self.height}",
        ]


def generate(points: int, edges: int, seed: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> BenchGraph:
    if points < 0 or edges < 0:
        raise ValueError("points and edges must be non-negative")
    if points + 2 * edges > max_elements:
        raise ResourceGuard(
            f"{points} points and {edges} arcs exceed the bound of {max_elements} elements"
        )
    rng = np.random.default_rng(seed)
    clones = points // CLONE_FRACTION if points >= 2 else 0
    base = points - clones
    if base < 2:
        edges = 0

    u = rng.integers(0, max(base, 1), size=edges)
    v = (u + 1 + rng.integers(0, max(base - 1, 1), size=edges)) % max(base, 1)
    # orient every arc along a random linear order, which keeps the graph acyclic
    rank = rng.permutation(base)
    forward = rank[u] < rank[v]
    dag_src = np.where(forward, u, v)
    dag_dst = np.where(forward, v, u)

    clone_ids = np.arange(base, points, dtype=np.int64)
    twins = rng.integers(0, max(base, 1), size=clones)
    src = np.concatenate([dag_src, clone_ids, twins]).astype(np.int64)
    dst = np.concatenate([dag_dst, twins, clone_ids]).astype(np.int64)
    return BenchGraph(points, src, dst, base, int(edges))


def run(points: int, edges: int, seed: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> BenchReport:
    g = generate(points, edges, seed, max_elements)
    start = time.perf_counter()
    k, _, csrc, cdst = condensation(g.points, g.src, g.dst)
    h = dag_longest_path(k, csrc, cdst)
    elapsed = time.perf_counter() - start
    return BenchReport(points, g.arcs, seed, k, h, elapsed)
