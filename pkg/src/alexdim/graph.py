"""Linear-time digraph routines behind the fast height path.

Graphs are given as parallel arrays of arc endpoints ``src[i] -> dst[i]`` on
nodes ``0 .. n-1``.  Read as a generating relation, an arc ``u -> v`` means
``u <= v``; the reflexive-transitive closure is never materialised.
"""

from __future__ import annotations

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components


def _as_index_array(a) -> np.ndarray:
    return np.asarray(a, dtype=np.int64).reshape(-1)


def strong_components(n: int, src, dst) -> tuple[int, np.ndarray]:
    """Label the strongly connected components of a digraph.

    Returns ``(k, labels)`` where components are numbered ``0 .. k-1`` in
    ascending order of their smallest member.
    """
    if n == 0:
        return 0, np.zeros(0, dtype=np.int64)
    src = _as_index_array(src)
    dst = _as_index_array(dst)
    adj = csr_matrix(
        (np.ones(src.size, dtype=np.int8), (src, dst)), shape=(n, n)
    )
    k, raw = connected_components(adj, directed=True, connection="strong")
    _, first = np.unique(raw, return_index=True)
    rank = np.empty(k, dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(k)
    return int(k), rank[raw]


def dag_longest_path(n: int, src, dst) -> int:
    """Number of arcs on a longest path of a DAG; ``-1`` when ``n == 0``.

    Kahn's algorithm with a running depth per node.  Raises ``ValueError`` if
    the graph has a cycle.
    """
    if n == 0:
        return -1
    src = _as_index_array(src)
    dst = _as_index_array(dst)
    order = np.argsort(src, kind="stable")
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    targets = dst[order].tolist()
    starts = indptr.tolist()
    indegree = np.bincount(dst, minlength=n).tolist()

    depth = [0] * n
    stack = [v for v in range(n) if indegree[v] == 0]
    seen = 0
    best = 0
    while stack:
        u = stack.pop()
        seen += 1
        d = depth[u]
        if d > best:
            best = d
        d += 1
        for j in range(starts[u], starts[u + 1]):
            v = targets[j]
            if depth[v] < d:
                depth[v] = d
            indegree[v] -= 1
            if indegree[v] == 0:
                stack.append(v)
    if seen != n:
        raise ValueError("graph has a cycle")
    return best


def condensation(n: int, src, dst) -> tuple[int, np.ndarray, np.ndarray, np.ndarray]:
    """Collapse strong components; returns ``(k, labels, csrc, cdst)``.

    Arcs inside a component are dropped; parallel arcs between components
    are kept, which is harmless for path lengths.
    """
    k, labels = strong_components(n, src, dst)
    if n == 0:
        empty = np.zeros(0, dtype=np.int64)
        return 0, labels, empty, empty
    csrc = labels[_as_index_array(src)]
    cdst = labels[_as_index_array(dst)]
    keep = csrc != cdst
    return k, labels, csrc[keep], cdst[keep]


def preorder_height(n: int, src, dst) -> int:
    """Height of the preorder generated by the arcs: longest strict chain length.

    Strict steps ``x < y`` are exactly the arcs between distinct components
    of the closure, and adding transitive arcs never lengthens a longest
    path, so the condensation of the generating digraph suffices.
    """
    k, _, csrc, cdst = condensation(n, src, dst)
    return dag_longest_path(k, csrc, cdst)
