"""JSON space documents.

Two forms are accepted, never both in one document::

    {"points": ["a", "b"], "leq": [["a", "b"]]}
    {"points": ["a", "b"], "closed_sets": [[], ["a"], ["a", "b"]]}

In the preorder form each pair ``[x, y]`` means ``x <= y``; reflexive pairs
may be omitted.  A relation that is not transitive is rejected unless
``close=True``, in which case its transitive closure is used.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .errors import ParseError
from .space import FiniteTopology, Preorder, down_sets, iter_bits, specialisation_preorder, validate_topology

PREORDER = "preorder"
TOPOLOGY = "topology"


@dataclass(frozen=True)
class SpaceDocument:
    form: str
    points: tuple[str, ...]
    body: list
    source: str = "<input>"


def parse_document(data: Any, source: str = "<input>") -> SpaceDocument:
    """Check the shape of a decoded JSON value; ``data`` may also be raw text."""
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise ParseError(f"{source}: expected a JSON object")
    points = data.get("points")
    if not isinstance(points, list) or not all(isinstance(x, str) for x in points):
        raise ParseError(f"{source}: 'points' must be a list of strings")
    if len(set(points)) != len(points):
        raise ParseError(f"{source}: duplicate point names")
    forms = [key for key in ("leq", "closed_sets") if key in data]
    if len(forms) != 1:
        raise ParseError(f"{source}: expected exactly one of 'leq' or 'closed_sets'")
    body = data[forms[0]]
    if not isinstance(body, list):
        raise ParseError(f"{source}: '{forms[0]}' must be a list")
    form = PREORDER if forms[0] == "leq" else TOPOLOGY
    return SpaceDocument(form, tuple(points), body, source)


def read_document(path: str | Path) -> SpaceDocument:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None
    return parse_document(text, str(path))


def _index(doc: SpaceDocument, name: Any, where: str) -> int:
    try:
        return doc.points.index(name)
    except ValueError:
        raise ParseError(f"{doc.source}: unknown point {name!r} in {where}") from None


def to_preorder(doc: SpaceDocument, close: bool = False) -> Preorder:
    """Validate a document and convert it to its specialisation preorder."""
    n = len(doc.points)
    if doc.form == PREORDER:
        pairs = []
        for i, pair in enumerate(doc.body):
            if not isinstance(pair, list) or len(pair) != 2:
                raise ParseError(f"{doc.source}: leq[{i}] must be a pair [x, y]")
            pairs.append((_index(doc, pair[0], f"leq[{i}]"), _index(doc, pair[1], f"leq[{i}]")))
        return Preorder.from_pairs(n, pairs, doc.points, close=close)

    family = []
    for i, subset in enumerate(doc.body):
        if not isinstance(subset, list):
            raise ParseError(f"{doc.source}: closed_sets[{i}] must be a list of points")
        family.append([_index(doc, x, f"closed_sets[{i}]") for x in subset])
    t = validate_topology(family, n, doc.points)
    p = specialisation_preorder(t)
    return Preorder(p.n, p.up, doc.points)


def load_space(data: Any, close: bool = False, source: str = "<input>") -> Preorder:
    return to_preorder(parse_document(data, source), close=close)


def dump_preorder(p: Preorder) -> dict:
    """Preorder form, listing only the non-reflexive pairs."""
    names = p.point_labels()
    return {
        "points": list(names),
        "leq": [[names[x], names[y]] for x, y in p.pairs() if x != y],
    }


def dump_topology(space: Preorder | FiniteTopology, labels=None) -> dict:
    if isinstance(space, Preorder):
        names = space.point_labels()
        family = list(down_sets(space))
    else:
        names = tuple(labels) if labels is not None else tuple(map(str, range(space.n)))
        family = space.sorted_family()
    return {
        "points": list(names),
        "closed_sets": [[names[x] for x in iter_bits(m)] for m in family],
    }
