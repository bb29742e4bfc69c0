"""Finite spaces in preorder form and closed-set form.

A finite topology is always Alexandrov, so it is determined by its
specialisation preorder ``x <= y  iff  x in cl{y}``.  :class:`Preorder` is the
canonical in-memory form; :class:`FiniteTopology` is what users write down
and what :func:`validate_topology` checks.

Points are the integers ``0 .. n-1``.  Subsets of points are ints used as
bitsets (bit ``i`` set means point ``i`` is a member).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    IndexOutOfRange,
    MissingEmptySet,
    MissingFullSet,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    NotReflexive,
    NotTransitive,
    PointOutOfRange,
    SpaceError,
)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(points: Iterable[int]) -> int:
    mask = 0
    for x in points:
        mask |= 1 << x
    return mask


def format_subset(mask: int, labels: Sequence[str] | None = None) -> str:
    if labels is None:
        names = [str(x) for x in iter_bits(mask)]
    else:
        names = [labels[x] for x in iter_bits(mask)]
    return "{" + ",".join(names) + "}"


@dataclass(frozen=True, order=True)
class ClosedSet:
    """A down-closed subset of some space's points.

    Ordering and equality use the bitset only, so sorted sequences of closed
    sets come out in ascending bitset order.
    """

    mask: int
    n: int = field(default=0, compare=False)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def members(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def format(self, labels: Sequence[str] | None = None) -> str:
        return format_subset(self.mask, labels)


@dataclass(frozen=True)
class Preorder:
    """A reflexive, transitive relation on ``n`` points.

    ``up[x]`` is the bitset ``{y : x <= y}``, i.e. row ``x`` of the relation
    matrix.  Construction validates both axioms and raises
    :class:`NotReflexive` or :class:`NotTransitive` (with the first witness
    triple in lexicographic order) on failure.
    """

    n: int
    up: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise SpaceError(f"point count must be non-negative, got {self.n}")
        object.__setattr__(self, "up", tuple(self.up))
        if len(self.up) != self.n:
            raise SpaceError(f"expected {self.n} relation rows, got {len(self.up)}")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != self.n:
                raise SpaceError("label table length does not match point count")
            if len(set(self.labels)) != self.n:
                raise SpaceError("point labels must be distinct")
        full = (1 << self.n) - 1
        up = self.up
        for x, row in enumerate(up):
            if row & ~full:
                raise PointOutOfRange(f"relation row {x} mentions points beyond {self.n - 1}")
            if not row >> x & 1:
                raise NotReflexive(x, self.labels and self.labels[x])
        for x, row in enumerate(up):
            for y in iter_bits(row):
                missing = up[y] & ~row
                if missing:
                    z = (missing & -missing).bit_length() - 1
                    raise NotTransitive(x, y, z, self.labels)

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_matrix(cls, leq: Sequence[Sequence[bool]], labels=None) -> Preorder:
        rows = tuple(to_mask(y for y, v in enumerate(row) if v) for row in leq)
        return cls(len(rows), rows, labels)

    @classmethod
    def from_pairs(
        cls,
        n: int,
        pairs: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
        close: bool = False,
    ) -> Preorder:
        """Build from ``(x, y)`` pairs meaning ``x <= y``.

        Reflexive pairs are always added.  With ``close=True`` the
        transitive closure is taken instead of rejecting the input.
        """
        rows = [1 << x for x in range(n)]
        for x, y in pairs:
            if not (0 <= x < n and 0 <= y < n):
                raise PointOutOfRange(f"pair ({x}, {y}) outside 0..{n - 1}")
            rows[x] |= 1 << y
        if close:
            rows = transitive_closure(rows)
        return cls(n, tuple(rows), None if labels is None else tuple(labels))

    @classmethod
    def from_encoding(cls, n: int, code: int) -> Preorder:
        """Inverse of :meth:`encode`."""
        full = (1 << n) - 1
        return cls(n, tuple(code >> (x * n) & full for x in range(n)))

    @classmethod
    def discrete(cls, n: int) -> Preorder:
        return cls(n, tuple(1 << x for x in range(n)))

    @classmethod
    def indiscrete(cls, n: int) -> Preorder:
        full = (1 << n) - 1
        return cls(n, (full,) * n)

    @classmethod
    def chain(cls, n: int) -> Preorder:
        """``0 <= 1 <= ... <= n-1``."""
        full = (1 << n) - 1
        return cls(n, tuple(full & ~((1 << x) - 1) for x in range(n)))

    # -- views ------------------------------------------------------------

    @cached_property
    def down(self) -> tuple[int, ...]:
        """``down[y]`` is the bitset ``{x : x <= y}``, the closure of ``y``."""
        down = [0] * self.n
        for x, row in enumerate(self.up):
            for y in iter_bits(row):
                down[y] |= 1 << x
        return tuple(down)

    @property
    def leq(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(
            tuple(bool(row >> y & 1) for y in range(self.n)) for row in self.up
        )

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def le(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def pairs(self) -> Iterator[tuple[int, int]]:
        """All related pairs ``(x, y)`` with ``x <= y``, including reflexive ones."""
        for x, row in enumerate(self.up):
            for y in iter_bits(row):
                yield x, y

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def point_labels(self) -> tuple[str, ...]:
        return self.labels if self.labels is not None else tuple(map(str, range(self.n)))

    def encode(self) -> int:
        """Relation as one integer: bit ``x*n + y`` is set iff ``x <= y``."""
        code = 0
        for x, row in enumerate(self.up):
            code |= row << (x * self.n)
        return code

    def restrict(self, subset: int) -> Preorder:
        """Induced preorder on the points of ``subset``, renumbered ascending."""
        keep = list(iter_bits(subset))
        index = {x: i for i, x in enumerate(keep)}
        rows = tuple(to_mask(index[y] for y in iter_bits(self.up[x] & subset)) for x in keep)
        labels = None if self.labels is None else tuple(self.labels[x] for x in keep)
        return Preorder(len(keep), rows, labels)

    def permute(self, perm: Sequence[int]) -> Preorder:
        """Relabel so that point ``x`` becomes ``perm[x]``."""
        rows = [0] * self.n
        for x, row in enumerate(self.up):
            rows[perm[x]] = to_mask(perm[y] for y in iter_bits(row))
        return Preorder(self.n, tuple(rows))

    def is_down_closed(self, mask: int) -> bool:
        down = self.down
        return all(down[y] & ~mask == 0 for y in iter_bits(mask))


def transitive_closure(rows: Sequence[int]) -> list[int]:
    """Warshall's algorithm on bitset rows."""
    rows = list(rows)
    for k in range(len(rows)):
        bit = 1 << k
        reach = rows[k]
        for i, row in enumerate(rows):
            if row & bit:
                rows[i] = row | reach
    return rows


@dataclass(frozen=True)
class FiniteTopology:
    """An explicit family of closed sets on ``n`` points.

    The constructor does not check the topology axioms; go through
    :func:`validate_topology` for untrusted input.
    """

    n: int
    closed_family: frozenset[int]

    def sorted_family(self) -> list[int]:
        return sorted(self.closed_family)

    def __len__(self) -> int:
        return len(self.closed_family)


def _subset_mask(subset, n: int) -> int:
    if isinstance(subset, int):
        mask = subset
        if mask < 0 or mask >> n:
            raise PointOutOfRange(f"subset {bin(mask)} is not contained in 0..{n - 1}")
        return mask
    mask = 0
    for x in subset:
        if not 0 <= x < n:
            raise PointOutOfRange(f"point {x} outside 0..{n - 1}")
        mask |= 1 << x
    return mask


def validate_topology(
    family: Iterable, n: int, labels: Sequence[str] | None = None
) -> FiniteTopology:
    """Check a raw closed-set family and return it as a :class:`FiniteTopology`.

    Subsets may be given as bitset ints or as iterables of point indices.
    Pairs are checked in ascending order of ``(B, C)`` as bitsets, union
    before intersection, so the reported witness is deterministic.
    """
    masks = sorted({_subset_mask(s, n) for s in family})
    members = set(masks)
    full = (1 << n) - 1

    def describe(mask: int) -> str:
        return format_subset(mask, labels)

    if 0 not in members:
        raise MissingEmptySet()
    if full not in members:
        raise MissingFullSet()
    for i, b in enumerate(masks):
        for c in masks[i + 1:]:
            if b | c not in members:
                raise NotClosedUnderUnion(b, c, describe)
            if b & c not in members:
                raise NotClosedUnderIntersection(b, c, describe)
    return FiniteTopology(n, frozenset(members))


def specialisation_preorder(t: FiniteTopology) -> Preorder:
    """``x <= y`` iff ``x`` lies in every closed set containing ``y``."""
    n = t.n
    closure = [(1 << n) - 1] * n
    for c in t.closed_family:
        for y in iter_bits(c):
            closure[y] &= c
    up = [0] * n
    for y, cl in enumerate(closure):
        for x in iter_bits(cl):
            up[x] |= 1 << y
    return Preorder(n, tuple(up))


def down_sets(p: Preorder, within: int | None = None) -> Iterator[int]:
    """Yield the down-closed subsets of ``within`` (default: all points) ascending.

    ``within`` must itself be down-closed; then a subset of it is closed in
    the subspace exactly when it is closed in the whole space.
    """
    top = p.full if within is None else within
    down = p.down
    sub = 0
    while True:
        if all(down[y] & ~sub == 0 for y in iter_bits(sub)):
            yield sub
        if sub == top:
            return
        sub = (sub - top) & top


def alexandrov_topology(p: Preorder) -> FiniteTopology:
    """The topology whose closed sets are the down-sets of ``p``."""
    return FiniteTopology(p.n, frozenset(down_sets(p)))


def _check_point(p: Preorder, x: int) -> None:
    if not 0 <= x < p.n:
        raise IndexOutOfRange(f"point {x} outside 0..{p.n - 1}")


def point_closure(p: Preorder, x: int) -> ClosedSet:
    """cl{x}: the down-set of ``x``, the smallest closed set containing it."""
    _check_point(p, x)
    return ClosedSet(p.down[x], p.n)


def min_open_neighborhood(p: Preorder, x: int) -> int:
    """The up-set of ``x`` as a bitset; the smallest open set containing ``x``."""
    _check_point(p, x)
    return p.up[x]


def is_t0(p: Preorder) -> bool:
    """True iff the relation is antisymmetric, i.e. ``p`` is a partial order."""
    down = p.down
    for x, row in enumerate(p.up):
        # points above x that are also below x, other than x itself
        if row & down[x] & ~(1 << x):
            return False
    return True
