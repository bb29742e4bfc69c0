"""Krull dimension and height of finite spaces.

Two independent routes:

* :func:`krull_dimension_bruteforce` builds the strict-inclusion DAG on the
  irreducible closed sets found by the definitional oracle and takes its
  longest path.
* :func:`height` condenses mutually related points and takes the longest
  path of the resulting DAG, in time linear in points plus related pairs.

:func:`verify_theorem` runs both, plus the height of the Kolmogorov
quotient, and reports whether they agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import preorder_height
from .irreducible import irreducible_closed_sets
from .quotient import kolmogorov_quotient
from .space import ClosedSet, Preorder


def _chain_lengths(nodes: list[int]) -> list[int]:
    """For each set, the longest strict chain of nodes starting at it (in arcs)."""
    longest = [0] * len(nodes)
    # a proper superset has strictly more members, so visit big sets first
    order = sorted(range(len(nodes)), key=lambda i: -nodes[i].bit_count())
    for i in order:
        a = nodes[i]
        best = 0
        for j, b in enumerate(nodes):
            if b != a and a & ~b == 0 and longest[j] + 1 > best:
                best = longest[j] + 1
        longest[i] = best
    return longest


def longest_irreducible_chain(p: Preorder) -> list[ClosedSet]:
    """A longest chain ``X0 < X1 < ... < Xn`` of irreducible closed sets.

    Ties go to the smallest bitset at every step.  Empty for the empty space.
    """
    irreducibles = irreducible_closed_sets(p)
    nodes = [a.mask for a in irreducibles]
    if not nodes:
        return []
    longest = _chain_lengths(nodes)
    top = max(longest)
    # nodes are already in ascending bitset order
    i = next(i for i, v in enumerate(longest) if v == top)
    chain = [irreducibles[i]]
    while longest[i] > 0:
        a = nodes[i]
        i = next(
            j
            for j, b in enumerate(nodes)
            if b != a and a & ~b == 0 and longest[j] == longest[i] - 1
        )
        chain.append(irreducibles[i])
    return chain


def krull_dimension_bruteforce(p: Preorder) -> int:
    """Length of the longest chain of non-empty irreducible closed sets; -1 if empty."""
    nodes = [a.mask for a in irreducible_closed_sets(p)]
    if not nodes:
        return -1
    return max(_chain_lengths(nodes))


def height(p: Preorder) -> int:
    """Longest chain ``x0 < x1 < ... < xn`` of strict steps; -1 on the empty space."""
    src, dst = [], []
    for x, y in p.pairs():
        if x != y:
            src.append(x)
            dst.append(y)
    return preorder_height(p.n, src, dst)


@dataclass(frozen=True)
class DimensionReport:
    krull_bruteforce: int
    height_fast: int
    quotient_height: int
    agree: bool = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "agree",
            self.krull_bruteforce == self.height_fast == self.quotient_height,
        )


def verify_theorem(p: Preorder) -> DimensionReport:
    return DimensionReport(
        krull_dimension_bruteforce(p),
        height(p),
        height(kolmogorov_quotient(p).poset),
    )
