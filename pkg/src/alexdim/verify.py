"""Exhaustive property checks over every space on a few points."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .dimension import verify_theorem
from .enumeration import enumerate_preorders
from .irreducible import irreducible_closed_sets, is_irreducible, point_closures
from .quotient import check_closure_bijection, check_order_reflection, kolmogorov_quotient
from .space import Preorder, alexandrov_topology, point_closure, specialisation_preorder

CHECKS = (
    "theorem",
    "lemma1",
    "lemma2",
    "order_reflection",
    "closure_bijection",
    "roundtrip",
)


def check_space(p: Preorder) -> list[str]:
    """Names of the checks that fail on ``p``; empty when all hold."""
    failed = []
    if not verify_theorem(p).agree:
        failed.append("theorem")
    if not all(is_irreducible(p, point_closure(p, x)).verdict for x in range(p.n)):
        failed.append("lemma1")
    if set(irreducible_closed_sets(p)) != set(point_closures(p)):
        failed.append("lemma2")
    q = kolmogorov_quotient(p)
    if not check_order_reflection(p, q):
        failed.append("order_reflection")
    if not check_closure_bijection(p, q):
        failed.append("closure_bijection")
    t = alexandrov_topology(p)
    back = specialisation_preorder(t)
    if back != p or alexandrov_topology(back) != t:
        failed.append("roundtrip")
    return failed


@dataclass
class LevelResult:
    n: int
    spaces: int = 0
    seconds: float = 0.0
    failures: list[tuple[int, list[str]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_level(n: int, allow_large: bool = False) -> LevelResult:
    result = LevelResult(n)
    start = time.perf_counter()
    for i, p in enumerate(enumerate_preorders(n, allow_large)):
        result.spaces += 1
        failed = check_space(p)
        if failed:
            result.failures.append((i, failed))
    result.seconds = time.perf_counter() - start
    return result


def verify_all(max_n: int, allow_large: bool = False) -> list[LevelResult]:
    enumerate_preorders(max_n, allow_large)  # fail fast on the size guard
    return [verify_level(n, allow_large) for n in range(max_n + 1)]
