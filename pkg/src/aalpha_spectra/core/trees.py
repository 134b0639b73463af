"""Labeled tree enumeration by Prüfer decoding, with arc orientations."""

from __future__ import annotations

import heapq
from collections.abc import Iterator, Sequence
from functools import lru_cache
from itertools import product

from .digraph import Arc, Digraph
from .errors import SizeLimitError

Edge = tuple[int, int]


def prufer_to_edges(sequence: Sequence[int], k: int) -> tuple[Edge, ...]:
    """Decode a Prüfer sequence into the edge set of a labeled tree.

    Args:
        sequence: ``k - 2`` labels from ``0..k-1``.
        k: Number of tree vertices, at least 2.

    Returns:
        Edges ``(u, v)`` with ``u < v``, sorted.

    Raises:
        ValueError: If the sequence has the wrong length or an out-of-range label.
    """
    if k < 2 or len(sequence) != k - 2:
        raise ValueError(f"a Prüfer sequence for {k} vertices has length {k - 2}")
    if any(not 0 <= label < k for label in sequence):
        raise ValueError("Prüfer label out of range")
    degree = [1] * k
    for label in sequence:
        degree[label] += 1
    leaves = [v for v in range(k) if degree[v] == 1]
    heapq.heapify(leaves)
    edges: list[Edge] = []
    for label in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, label), max(leaf, label)))
        degree[label] -= 1
        if degree[label] == 1:
            heapq.heappush(leaves, label)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return tuple(sorted(edges))


def labeled_trees(k: int) -> Iterator[tuple[Edge, ...]]:
    """Yield every labeled tree on ``k`` vertices, in Prüfer-sequence order.

    Args:
        k: Vertex count, at least 1.

    Yields:
        Sorted edge tuples; the single-vertex tree has no edges.
    """
    if k == 1:
        yield ()
        return
    for sequence in product(range(k), repeat=k - 2):
        yield prufer_to_edges(sequence, k)


def orient(edges: Sequence[Edge], bits: int) -> tuple[Arc, ...]:
    """Orient tree edges; bit ``j`` of ``bits`` reverses edge ``j``.

    Args:
        edges: Undirected edges ``(u, v)`` with ``u < v``.
        bits: Orientation mask.

    Returns:
        Arcs, ``(u, v)`` for clear bits and ``(v, u)`` for set bits.
    """
    return tuple(
        (v, u) if bits >> j & 1 else (u, v) for j, (u, v) in enumerate(edges)
    )


def orientations(edges: Sequence[Edge]) -> Iterator[tuple[Arc, ...]]:
    """Yield all ``2^(k-1)`` orientations of a tree's edges.

    Args:
        edges: Undirected edges.

    Yields:
        Arc tuples in mask order.
    """
    for bits in range(1 << len(edges)):
        yield orient(edges, bits)


def tree_count(k: int) -> int:
    """Number of oriented labeled trees on ``k`` vertices, ``k^(k-2) * 2^(k-1)``.

    Args:
        k: Vertex count, at least 1.

    Returns:
        The count; 1 for the single vertex.
    """
    if k < 1:
        raise ValueError("tree size must be positive")
    if k == 1:
        return 1
    return k ** (k - 2) * 2 ** (k - 1)


@lru_cache(maxsize=4096)
def oriented_tree_at(k: int, index: int) -> Digraph:
    """Decode one oriented labeled tree from its enumeration index.

    The index is ``shape * 2^(k-1) + bits``; ``shape`` spells the Prüfer sequence in base
    ``k`` with the most significant digit first, and ``bits`` is the orientation mask.

    Args:
        k: Vertex count.
        index: Position in ``0..tree_count(k)-1``.

    Returns:
        The oriented tree on vertices ``0..k-1``.

    Raises:
        IndexError: If ``index`` is out of range.
    """
    if not 0 <= index < tree_count(k):
        raise IndexError(f"tree index {index} out of range for k={k}")
    if k == 1:
        return Digraph(1, ())
    shape, bits = divmod(index, 1 << (k - 1))
    digits: list[int] = []
    for _ in range(k - 2):
        shape, digit = divmod(shape, k)
        digits.append(digit)
    digits.reverse()
    return Digraph(k, orient(prufer_to_edges(digits, k), bits))


def is_in_tree(t: Digraph, root: int | None = None) -> bool:
    """Check whether an oriented tree is an in-tree.

    Args:
        t: Digraph whose underlying graph is a tree.
        root: Required sink; any vertex may be the sink when ``None``.

    Returns:
        True when exactly one vertex has outdegree 0 and every other vertex outdegree 1.
    """
    sinks = [v for v in range(t.n) if t.out_deg[v] == 0]
    if len(sinks) != 1 or any(d > 1 for d in t.out_deg):
        return False
    return root is None or sinks[0] == root


def is_out_star(t: Digraph) -> bool:
    """Check whether an oriented tree is an out-star.

    Args:
        t: Digraph whose underlying graph is a tree.

    Returns:
        True when one vertex carries all ``n - 1`` arcs; a single vertex qualifies.
    """
    return t.n == 1 or t.max_out_degree == t.n - 1


def check_tree_size(k: int, limit: int) -> None:
    """Reject exhaustive tree enumeration beyond ``limit`` vertices.

    Args:
        k: Requested tree size.
        limit: Largest supported size.

    Raises:
        SizeLimitError: If ``k`` exceeds ``limit`` or is not positive.
    """
    if not 1 <= k <= limit:
        raise SizeLimitError(f"tree enumeration supports 1 <= n <= {limit}, got {k}")


__all__ = [
    "Edge",
    "check_tree_size",
    "is_in_tree",
    "is_out_star",
    "labeled_trees",
    "orient",
    "orientations",
    "oriented_tree_at",
    "prufer_to_edges",
    "tree_count",
]

__description__ = """
Prüfer decoding, orientation masks and index-addressable oriented labeled trees.
"""
