"""Closed sets and irreducibility, decided from the definition.

A non-empty closed set ``A`` is irreducible when it is not the union of two
proper, non-empty closed subsets.  :func:`is_irreducible` searches for such a
pair directly; it does not assume that irreducible sets are point closures,
because that fact is what the tests use it to check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import EmptySetNotEligible, NotClosed
from .space import ClosedSet, Preorder, down_sets, format_subset, iter_bits


@dataclass(frozen=True)
class IrreducibilityWitness:
    verdict: bool
    decomposition: tuple[ClosedSet, ClosedSet] | None = None

    def __bool__(self) -> bool:
        return self.verdict


def closed_sets(p: Preorder) -> Iterator[ClosedSet]:
    """Every down-closed subset of ``p`` once, ascending as bitsets."""
    for mask in down_sets(p):
        yield ClosedSet(mask, p.n)


def _as_mask(a) -> int:
    return a.mask if isinstance(a, ClosedSet) else int(a)


def is_irreducible(p: Preorder, a: ClosedSet | int, fast: bool = False) -> IrreducibilityWitness:
    """Decide whether the closed set ``a`` is irreducible.

    The default route tries unordered pairs of proper non-empty down-sets of
    ``a`` in ascending bitset order and returns the first pair covering ``a``.
    ``fast=True`` instead looks for a point whose closure is all of ``a``.
    """
    mask = _as_mask(a)
    if mask == 0:
        raise EmptySetNotEligible()
    if mask >> p.n or not p.is_down_closed(mask):
        raise NotClosed(f"{format_subset(mask, p.labels)} is not a closed set")
    if fast:
        return _fast_irreducible(p, mask)

    proper = [b for b in down_sets(p, mask) if b and b != mask]
    for i, b in enumerate(proper):
        for c in proper[i + 1:]:
            if b | c == mask:
                return IrreducibilityWitness(False, (ClosedSet(b, p.n), ClosedSet(c, p.n)))
    return IrreducibilityWitness(True)


def _fast_irreducible(p: Preorder, mask: int) -> IrreducibilityWitness:
    down = p.down
    if any(down[x] == mask for x in iter_bits(mask)):
        return IrreducibilityWitness(True)
    # no greatest point: split off the closure of the first maximal point
    maximal = [x for x in iter_bits(mask) if p.up[x] & mask & ~down[x] == 0]
    first = maximal[0]
    b = down[first]
    c = 0
    for m in maximal:
        if not (p.le(m, first) and p.le(first, m)):
            c |= down[m]
    return IrreducibilityWitness(False, (ClosedSet(b, p.n), ClosedSet(c, p.n)))


def irreducible_closed_sets(p: Preorder) -> list[ClosedSet]:
    return [a for a in closed_sets(p) if a and is_irreducible(p, a).verdict]


def point_closures(p: Preorder) -> list[ClosedSet]:
    """Distinct closures ``cl{x}``, ascending; non-T0 points may share one."""
    return [ClosedSet(m, p.n) for m in sorted(set(p.down))]


def witness_is_sound(p: Preorder, a: ClosedSet | int, witness: IrreducibilityWitness) -> bool:
    """Re-check a reducibility witness without trusting how it was found."""
    if witness.verdict:
        return witness.decomposition is None
    if witness.decomposition is None:
        return False
    mask = _as_mask(a)
    b, c = (s.mask for s in witness.decomposition)
    return (
        b | c == mask
        and b != mask
        and c != mask
        and b != 0
        and c != 0
        and b & ~mask == 0
        and c & ~mask == 0
        and p.is_down_closed(b)
        and p.is_down_closed(c)
    )
