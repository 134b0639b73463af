"""Digraph representation, degree accounting and closed-walk counting."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

from .errors import DuplicateArcError, LoopError, VertexCountError, VertexIndexError

Arc = tuple[int, int]


@dataclass(frozen=True)
class Digraph:
    """Labeled simple digraph on vertices ``0..n-1``.

    Arcs are stored sorted lexicographically; adjacency lists and degree vectors are derived
    lazily and cached on the instance.

    Attributes:
        n: Vertex count.
        arcs: Sorted ordered pairs ``(tail, head)``.
    """

    n: int
    arcs: tuple[Arc, ...]

    def __post_init__(self) -> None:
        """Validate the arc list and store it in canonical order.

        Raises:
            VertexCountError: If ``n`` is not positive.
            VertexIndexError: If an endpoint is outside ``0..n-1``.
            LoopError: If an arc has equal tail and head.
            DuplicateArcError: If an arc appears twice.
        """
        if self.n < 1:
            raise VertexCountError(self.n)
        seen: set[Arc] = set()
        for tail, head in self.arcs:
            arc = (int(tail), int(head))
            if not (0 <= arc[0] < self.n and 0 <= arc[1] < self.n):
                raise VertexIndexError(arc, self.n)
            if arc[0] == arc[1]:
                raise LoopError(arc[0])
            if arc in seen:
                raise DuplicateArcError(arc)
            seen.add(arc)
        object.__setattr__(self, "arcs", tuple(sorted(seen)))

    @cached_property
    def arc_set(self) -> frozenset[Arc]:
        """Arc membership set."""
        return frozenset(self.arcs)

    @cached_property
    def out_neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Sorted out-neighbour lists, indexed by vertex."""
        lists: list[list[int]] = [[] for _ in range(self.n)]
        for tail, head in self.arcs:
            lists[tail].append(head)
        return tuple(tuple(row) for row in lists)

    @cached_property
    def in_neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Sorted in-neighbour lists, indexed by vertex."""
        lists: list[list[int]] = [[] for _ in range(self.n)]
        for tail, head in self.arcs:
            lists[head].append(tail)
        return tuple(tuple(sorted(row)) for row in lists)

    @cached_property
    def out_deg(self) -> tuple[int, ...]:
        """Outdegree vector ``d+``."""
        return tuple(len(row) for row in self.out_neighbors)

    @cached_property
    def in_deg(self) -> tuple[int, ...]:
        """Indegree vector ``d-``."""
        return tuple(len(row) for row in self.in_neighbors)

    @property
    def arc_count(self) -> int:
        """Number of arcs ``e``."""
        return len(self.arcs)

    @property
    def max_out_degree(self) -> int:
        """Maximum outdegree (Delta+)."""
        return max(self.out_deg)

    @property
    def max_in_degree(self) -> int:
        """Maximum indegree (Delta-)."""
        return max(self.in_deg)

    def has_arc(self, tail: int, head: int) -> bool:
        """Check arc membership.

        Args:
            tail: Tail vertex.
            head: Head vertex.

        Returns:
            True when ``(tail, head)`` is an arc.
        """
        return (tail, head) in self.arc_set

    def with_arcs(self, extra: Iterable[Arc]) -> Digraph:
        """Return a copy with additional arcs.

        Args:
            extra: Arcs to add; they must not already be present.

        Returns:
            The enlarged digraph.
        """
        return Digraph(self.n, self.arcs + tuple(extra))

    def without_arcs(self, removed: Iterable[Arc]) -> Digraph:
        """Return a copy with the given arcs deleted.

        Args:
            removed: Arcs to delete; absent arcs are ignored.

        Returns:
            The spanning subdigraph.
        """
        drop = set(removed)
        return Digraph(self.n, tuple(arc for arc in self.arcs if arc not in drop))


def new_digraph(n: int, arcs: Iterable[Arc]) -> Digraph:
    """Build a validated digraph.

    Args:
        n: Vertex count.
        arcs: Ordered ``(tail, head)`` pairs, 0-indexed.

    Returns:
        The digraph with canonical arc order.
    """
    return Digraph(n, tuple(arcs))


def closed_walks_2(g: Digraph) -> int:
    """Count closed walks of length 2, i.e. ``trace(A^2)``.

    Each symmetric pair contributes two walks, one per starting vertex.

    Args:
        g: The digraph.

    Returns:
        The walk count ``c2``.
    """
    return sum(1 for tail, head in g.arcs if (head, tail) in g.arc_set)


def is_symmetric(g: Digraph) -> bool:
    """Check that every arc has its reverse.

    Args:
        g: The digraph.

    Returns:
        True for symmetric digraphs, including the arcless one.
    """
    return all((head, tail) in g.arc_set for tail, head in g.arcs)


def is_simple_arcs_only(g: Digraph) -> bool:
    """Check that no arc has its reverse.

    Args:
        g: The digraph.

    Returns:
        True when every arc is simple.
    """
    return not any((head, tail) in g.arc_set for tail, head in g.arcs)


def is_weakly_connected(g: Digraph) -> bool:
    """Check connectivity of the underlying undirected graph.

    Args:
        g: The digraph.

    Returns:
        True when every vertex is reachable ignoring arc directions.
    """
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.out_neighbors[v] + g.in_neighbors[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


__all__ = [
    "Arc",
    "Digraph",
    "closed_walks_2",
    "is_simple_arcs_only",
    "is_symmetric",
    "is_weakly_connected",
    "new_digraph",
]

__description__ = """
Immutable loop-free digraphs with degree vectors and closed-walk counts.
"""
