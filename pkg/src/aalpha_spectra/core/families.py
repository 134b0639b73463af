"""Generators for the named digraph families and tree hanging."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum

from .digraph import Arc, Digraph, is_weakly_connected
from .errors import FamilySpecError, TreeAttachmentError
from .scc import tarjan_scc


class FamilyKind(StrEnum):
    """Named digraph families, keyed by their mini-grammar name."""

    PATH = "path"
    CYCLE = "cycle"
    OUT_STAR = "outstar"
    IN_STAR = "instar"
    SYM_STAR = "symstar"
    INFINITY = "infinity"
    BISPINDLE = "bispindle"


_SINGLE_SIZE = {
    FamilyKind.PATH,
    FamilyKind.CYCLE,
    FamilyKind.OUT_STAR,
    FamilyKind.IN_STAR,
    FamilyKind.SYM_STAR,
}


@dataclass(frozen=True)
class FamilySpec:
    """A member of one of the named families.

    Attributes:
        kind: Family tag.
        sizes: ``(n,)`` for paths, cycles and stars; cycle lengths ``m_i`` for the generalized
            infinity digraph; lengths of the ``(x, y)``-paths for the bispindle.
        reverse_sizes: Lengths of the ``(y, x)``-paths of a bispindle, empty otherwise.
    """

    kind: FamilyKind
    sizes: tuple[int, ...]
    reverse_sizes: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        """Check the size parameters of the family.

        Raises:
            FamilySpecError: If the parameters do not describe a simple digraph.
        """
        kind = self.kind
        if kind in _SINGLE_SIZE:
            if len(self.sizes) != 1 or self.reverse_sizes:
                raise FamilySpecError(f"{kind.value} takes exactly one size")
            minimum = 2 if kind is FamilyKind.CYCLE else 1
            if self.sizes[0] < minimum:
                raise FamilySpecError(f"{kind.value} requires n >= {minimum}")
        elif kind is FamilyKind.INFINITY:
            if not self.sizes or self.reverse_sizes:
                raise FamilySpecError("infinity takes a non-empty list of cycle lengths")
            if any(size < 2 for size in self.sizes):
                raise FamilySpecError("infinity requires every cycle length m_i >= 2")
        else:
            if not self.sizes or not self.reverse_sizes:
                raise FamilySpecError("bispindle requires p >= 1 and q >= 1")
            if any(length < 1 for length in self.sizes + self.reverse_sizes):
                raise FamilySpecError("bispindle path lengths must be >= 1")
            if self.sizes.count(1) > 1 or self.reverse_sizes.count(1) > 1:
                raise FamilySpecError("two length-1 paths in one direction form a multi-arc")

    @property
    def vertex_count(self) -> int:
        """Order of the generated digraph."""
        if self.kind in _SINGLE_SIZE:
            return self.sizes[0]
        if self.kind is FamilyKind.INFINITY:
            return sum(self.sizes) - len(self.sizes) + 1
        return 2 + sum(length - 1 for length in self.sizes + self.reverse_sizes)

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """Parse the ``name:params`` mini-grammar.

        Examples are ``path:4``, ``infinity:2,2,3`` and ``bispindle:1,2;3`` (lengths before
        ``;`` are the ``(x, y)``-paths).

        Args:
            text: Family specification text.

        Returns:
            The parsed specification.

        Raises:
            FamilySpecError: On unknown names or malformed parameters.
        """
        name, sep, params = text.strip().partition(":")
        if not sep:
            raise FamilySpecError(f"missing ':' in family spec {text!r}")
        try:
            kind = FamilyKind(name.strip().lower())
        except ValueError as exc:
            raise FamilySpecError(f"unknown family {name!r}") from exc
        try:
            if kind is FamilyKind.BISPINDLE:
                forward, semi, backward = params.partition(";")
                if not semi:
                    raise FamilySpecError("bispindle needs ';' between (x,y) and (y,x) lengths")
                return cls(kind, _int_list(forward), _int_list(backward))
            return cls(kind, _int_list(params))
        except ValueError as exc:
            if isinstance(exc, FamilySpecError):
                raise
            raise FamilySpecError(f"malformed parameters in {text!r}") from exc

    def __str__(self) -> str:
        """Render the canonical mini-grammar text."""
        body = ",".join(str(size) for size in self.sizes)
        if self.kind is FamilyKind.BISPINDLE:
            body += ";" + ",".join(str(size) for size in self.reverse_sizes)
        return f"{self.kind.value}:{body}"


def _int_list(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.split(",") if part.strip())


def _path_arcs(start: int, end: int, length: int, next_free: int) -> tuple[list[Arc], int]:
    """Arcs of a directed path of the given length through fresh internal vertices."""
    vertices = [start, *range(next_free, next_free + length - 1), end]
    return list(zip(vertices, vertices[1:])), next_free + length - 1


def generate(spec: FamilySpec) -> Digraph:
    """Build the digraph described by a family specification.

    Centres, common vertices and the bispindle initial vertex get index 0, the bispindle
    terminal vertex gets index 1, and path vertices are numbered along their arcs.

    Args:
        spec: The family member.

    Returns:
        The generated digraph.
    """
    n = spec.vertex_count
    arcs: list[Arc] = []
    match spec.kind:
        case FamilyKind.PATH:
            arcs = [(i, i + 1) for i in range(n - 1)]
        case FamilyKind.CYCLE:
            arcs = [(i, (i + 1) % n) for i in range(n)]
        case FamilyKind.OUT_STAR:
            arcs = [(0, i) for i in range(1, n)]
        case FamilyKind.IN_STAR:
            arcs = [(i, 0) for i in range(1, n)]
        case FamilyKind.SYM_STAR:
            arcs = [(0, i) for i in range(1, n)] + [(i, 0) for i in range(1, n)]
        case FamilyKind.INFINITY:
            next_free = 1
            for length in spec.sizes:
                cycle, next_free = _path_arcs(0, 0, length, next_free)
                arcs.extend(cycle)
        case FamilyKind.BISPINDLE:
            next_free = 2
            for length in spec.sizes:
                path, next_free = _path_arcs(0, 1, length, next_free)
                arcs.extend(path)
            for length in spec.reverse_sizes:
                path, next_free = _path_arcs(1, 0, length, next_free)
                arcs.extend(path)
    return Digraph(n, tuple(arcs))


@dataclass(frozen=True)
class HungTree:
    """A directed tree to be hung on a core vertex.

    Attributes:
        core_vertex: Core vertex the tree root is merged into.
        tree: The tree; its underlying graph must be a tree.
        root: Vertex of ``tree`` identified with ``core_vertex``.
    """

    core_vertex: int
    tree: Digraph
    root: int = 0


def is_tree(g: Digraph) -> bool:
    """Check whether the underlying graph of ``g`` is a tree.

    Args:
        g: The digraph.

    Returns:
        True when ``g`` has ``n - 1`` arcs and is weakly connected.
    """
    return g.arc_count == g.n - 1 and is_weakly_connected(g)


def hang_trees(core: Digraph, trees: Sequence[HungTree]) -> Digraph:
    """Hang directed trees of arbitrary orientation on a strongly connected core.

    Core vertices keep their labels; the non-root vertices of each tree are appended in the
    order the trees are given, each tree's vertices in increasing order.

    Args:
        core: Strongly connected digraph.
        trees: Trees with their attachment points, at most one per core vertex.

    Returns:
        The combined digraph with ``n = sum(n_i)``.

    Raises:
        TreeAttachmentError: If the core is not strongly connected, a tree targets a missing
            core vertex, two trees share a core vertex, a root is out of range, or a tree's
            underlying graph is not a tree.
    """
    if not tarjan_scc(core).is_strongly_connected:
        raise TreeAttachmentError("core is not strongly connected")
    used: set[int] = set()
    arcs: list[Arc] = list(core.arcs)
    next_free = core.n
    for hung in trees:
        if not 0 <= hung.core_vertex < core.n:
            raise TreeAttachmentError(f"core vertex {hung.core_vertex} does not exist")
        if hung.core_vertex in used:
            raise TreeAttachmentError(f"core vertex {hung.core_vertex} already carries a tree")
        if not 0 <= hung.root < hung.tree.n:
            raise TreeAttachmentError(f"tree root {hung.root} is out of range")
        if not is_tree(hung.tree):
            raise TreeAttachmentError("attachment graph is not a tree")
        used.add(hung.core_vertex)
        relabel: dict[int, int] = {hung.root: hung.core_vertex}
        for v in range(hung.tree.n):
            if v != hung.root:
                relabel[v] = next_free
                next_free += 1
        arcs.extend((relabel[tail], relabel[head]) for tail, head in hung.tree.arcs)
    return Digraph(next_free, tuple(arcs))


__all__ = [
    "FamilyKind",
    "FamilySpec",
    "HungTree",
    "generate",
    "hang_trees",
    "is_tree",
]

__description__ = """
Paths, cycles, stars, generalized infinity digraphs, bispindles and hung trees.
"""
