"""Exhaustive generation of preorders and posets on labeled points.

Preorders on ``n`` labeled points correspond one-to-one with topologies on
``n`` labeled points.  Streams are ordered by :meth:`Preorder.encode`
ascending.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator

from .dimension import verify_theorem
from .errors import CarrierTooLarge, SpaceError, TheoremViolation
from .quotient import kolmogorov_quotient
from .space import FiniteTopology, Preorder, is_t0, validate_topology
from .spaceio import dump_preorder

MAX_N = 6
# n = 6 has 209527 preorders; callers must ask for it explicitly
DEFAULT_MAX_N = 5


def _check_n(n: int, allow_large: bool) -> None:
    limit = MAX_N if allow_large else DEFAULT_MAX_N
    if n < 0:
        raise CarrierTooLarge(f"point count must be non-negative, got {n}")
    if n > limit:
        hint = "" if allow_large or n > MAX_N else " (n = 6 needs the allow-large opt-in)"
        raise CarrierTooLarge(f"n = {n} exceeds the enumeration limit {limit}{hint}")


def _row_candidates(n: int, x: int) -> list[int]:
    bit = 1 << x
    return [m for m in range(1 << n) if m & bit]


def _preorder_rows(n: int) -> Iterator[tuple[int, ...]]:
    # Bit x*n + y encodes x <= y, so rows with a larger x are more
    # significant.  Assigning rows from x = n-1 down to 0, each in ascending
    # order, walks the encodings in ascending order.
    candidates = [_row_candidates(n, x) for x in range(n)]
    rows = [0] * n

    def consistent(x: int) -> bool:
        rx = rows[x]
        for y in range(x + 1, n):
            ry = rows[y]
            if rx >> y & 1 and ry & ~rx:
                return False
            if ry >> x & 1 and rx & ~ry:
                return False
        return True

    def assign(x: int) -> Iterator[tuple[int, ...]]:
        if x < 0:
            yield tuple(rows)
            return
        for row in candidates[x]:
            rows[x] = row
            if consistent(x):
                yield from assign(x - 1)

    yield from assign(n - 1)


def enumerate_preorders(n: int, allow_large: bool = False) -> Iterator[Preorder]:
    """Every reflexive transitive relation on ``n`` labeled points, once each."""
    _check_n(n, allow_large)
    return (Preorder(n, rows) for rows in _preorder_rows(n))


def enumerate_posets(n: int, allow_large: bool = False) -> Iterator[Preorder]:
    """The antisymmetric members of :func:`enumerate_preorders`, same order."""
    return (p for p in enumerate_preorders(n, allow_large) if is_t0(p))


def brute_force_preorders(n: int) -> Iterator[Preorder]:
    """Filter all reflexive relations for transitivity; slow, used as an oracle."""
    _check_n(n, allow_large=False)
    return _brute_force_preorders(n)


def _brute_force_preorders(n: int) -> Iterator[Preorder]:
    off = [(x, y) for x in range(n) for y in range(n) if x != y]
    diagonal = sum(1 << (x * n + x) for x in range(n))
    full = (1 << n) - 1
    # off-diagonal positions ascend with the candidate bits, so codes ascend too
    for cand in range(1 << len(off)):
        code = diagonal
        for i, (x, y) in enumerate(off):
            if cand >> i & 1:
                code |= 1 << (x * n + y)
        rows = [code >> (x * n) & full for x in range(n)]
        if all(rows[y] & ~rows[x] == 0 for x in range(n) for y in range(n) if rows[x] >> y & 1):
            yield Preorder(n, tuple(rows))


def enumerate_topologies(n: int) -> Iterator[FiniteTopology]:
    """Every topology on ``n <= 4`` points, found by validating every subset family.

    Shares nothing with the preorder generators, so it can cross-check them.
    """
    if not 0 <= n <= 4:
        raise CarrierTooLarge(f"topology brute force supports n <= 4, got {n}")
    return _brute_force_topologies(n)


def _brute_force_topologies(n: int) -> Iterator[FiniteTopology]:
    full = (1 << n) - 1
    middle = list(range(1, full))
    for choice in range(1 << len(middle)):
        family = {0, full}
        family.update(m for i, m in enumerate(middle) if choice >> i & 1)
        try:
            yield validate_topology(family, n)
        except SpaceError:
            continue


@dataclass(frozen=True)
class CensusRow:
    space_id: int
    n: int
    is_t0: bool
    quotient_size: int
    dimension: int


CSV_FIELDS = ("space_id", "n", "is_t0", "quotient_size", "dimension")


def _dump(p: Preorder) -> str:
    return json.dumps(dump_preorder(p))


def census_rows(
    n: int, allow_large: bool = False, posets_only: bool = False, start_id: int = 0
) -> Iterator[CensusRow]:
    """Run :func:`verify_theorem` on every space; raise on the first disagreement."""
    _check_n(n, allow_large)
    return _census_rows(n, allow_large, posets_only, start_id)


def _census_rows(n: int, allow_large: bool, posets_only: bool, start_id: int) -> Iterator[CensusRow]:
    stream = enumerate_posets(n, allow_large) if posets_only else enumerate_preorders(n, allow_large)
    for i, p in enumerate(stream, start=start_id):
        report = verify_theorem(p)
        if not report.agree:
            raise TheoremViolation(f"space {i} on {n} points: {report} for {_dump(p)}", p)
        yield CensusRow(
            space_id=i,
            n=n,
            is_t0=is_t0(p),
            quotient_size=kolmogorov_quotient(p).poset.n,
            dimension=report.height_fast,
        )


def summarize(rows: Iterable[CensusRow]) -> dict:
    counts = Counter((r.n, r.dimension, r.is_t0) for r in rows)
    return {
        "total": sum(counts.values()),
        "by_class": [
            {"n": n, "dimension": d, "is_t0": t0, "count": c}
            for (n, d, t0), c in sorted(counts.items())
        ],
    }


def census(n: int, allow_large: bool = False, posets_only: bool = False) -> tuple[list[CensusRow], dict]:
    rows = list(census_rows(n, allow_large, posets_only))
    return rows, summarize(rows)


def rows_to_csv(rows: Iterable[CensusRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        d = asdict(row)
        d["is_t0"] = str(row.is_t0).lower()
        writer.writerow(d)
    return buf.getvalue()
