"""Kolmogorov quotient of a finite preorder.

Points ``x ~ y`` are identified when ``x <= y`` and ``y <= x``.  The classes
are the strong components of the relation digraph, numbered by their
smallest member.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import strong_components
from .space import Preorder, iter_bits, to_mask


@dataclass(frozen=True)
class KolmogorovQuotient:
    poset: Preorder
    pi: tuple[int, ...]
    class_members: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return self.poset.n

    def image(self, mask: int) -> int:
        """Bitset of classes meeting the point set ``mask``."""
        return to_mask(self.pi[x] for x in iter_bits(mask))

    def preimage(self, mask: int) -> int:
        out = 0
        for c in iter_bits(mask):
            out |= to_mask(self.class_members[c])
        return out


def _class_label(members: Sequence[int], p: Preorder) -> str:
    return "{" + ",".join(p.label(x) for x in members) + "}"


def kolmogorov_quotient(p: Preorder) -> KolmogorovQuotient:
    src, dst = [], []
    for x, y in p.pairs():
        if x != y:
            src.append(x)
            dst.append(y)
    k, labels = strong_components(p.n, src, dst)
    pi = tuple(int(c) for c in labels)

    members: list[list[int]] = [[] for _ in range(k)]
    for x, c in enumerate(pi):
        members[c].append(x)
    reps = [m[0] for m in members]
    rows = tuple(
        to_mask(d for d, r in enumerate(reps) if p.le(rep, r)) for rep in reps
    )
    class_members = tuple(tuple(m) for m in members)
    labels_out = tuple(_class_label(m, p) for m in class_members)
    return KolmogorovQuotient(Preorder(k, rows, labels_out), pi, class_members)


def check_order_reflection(p: Preorder, q: KolmogorovQuotient) -> bool:
    """``x <= y`` iff ``pi(x) <= pi(y)``, for every pair of points."""
    pi = q.pi
    return all(
        p.le(x, y) == q.poset.le(pi[x], pi[y]) for x in range(p.n) for y in range(p.n)
    )


def check_closure_bijection(p: Preorder, q: KolmogorovQuotient) -> bool:
    """Check that ``pi`` carries point closures bijectively onto point closures.

    Three conditions, all required: ``pi(cl{x}) == cl{pi(x)}``,
    ``pi^-1(cl{pi(x)}) == cl{x}``, and ``cl{x} -> pi(cl{x})`` is a well
    defined bijection between the two families of closures.
    """
    if len(q.pi) != p.n:
        return False
    qdown = q.poset.down
    forward: dict[int, int] = {}
    for x in range(p.n):
        cl = p.down[x]
        cl_q = qdown[q.pi[x]]
        if q.image(cl) != cl_q:
            return False
        if q.preimage(cl_q) != cl:
            return False
        if forward.setdefault(cl, cl_q) != cl_q:
            return False
    images = list(forward.values())
    return len(set(images)) == len(images) and set(images) == set(qdown)


def hasse_edges(poset: Preorder) -> list[tuple[int, int]]:
    """Covering pairs ``(c, d)`` of a partial order, ascending."""
    edges = []
    for c in range(poset.n):
        above = poset.up[c] & ~(1 << c)
        for d in iter_bits(above):
            between = above & poset.down[d] & ~(1 << d)
            if not between:
                edges.append((c, d))
    return edges


def to_dot(q: KolmogorovQuotient, name: str = "quotient") -> str:
    """Hasse diagram of the quotient order in Graphviz DOT."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for c in range(q.poset.n):
        label = q.poset.label(c).replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  c{c} [label="{label}"];')
    for c, d in hasse_edges(q.poset):
        lines.append(f"  c{c} -> c{d};")
    lines.append("}")
    return "\n".join(lines) + "\n"
