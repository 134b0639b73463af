"""Strong components and recognition of the class G_n^m."""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from functools import cached_property
from logging import getLogger

from .digraph import Arc, Digraph, is_weakly_connected
from .errors import NotMemberError

logger = getLogger(__name__)


@dataclass(frozen=True)
class SccDecomposition:
    """Strong-component decomposition of a digraph.

    Component ids are assigned in topological order of the condensation, so every arc between
    distinct components goes from a smaller id to a larger one and ``topo_order`` is simply
    ``0..k-1``.

    Attributes:
        component_of: Component id of each vertex.
        components: Sorted vertex tuple of each component.
        topo_order: Component ids, sources first.
    """

    component_of: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    topo_order: tuple[int, ...]

    @property
    def count(self) -> int:
        """Number of strong components."""
        return len(self.components)

    @property
    def is_strongly_connected(self) -> bool:
        """Whether the whole digraph is one component."""
        return len(self.components) == 1

    @property
    def nontrivial(self) -> tuple[tuple[int, ...], ...]:
        """Components with at least two vertices."""
        return tuple(comp for comp in self.components if len(comp) >= 2)

    @property
    def singleton_vertices(self) -> tuple[int, ...]:
        """Vertices forming a component on their own, in increasing order."""
        return tuple(sorted(comp[0] for comp in self.components if len(comp) == 1))


def tarjan_scc(g: Digraph) -> SccDecomposition:
    """Decompose a digraph into strong components with Tarjan's algorithm.

    The depth-first search is iterative and visits roots and out-neighbours in increasing
    vertex order, so the result is deterministic.

    Args:
        g: The digraph.

    Returns:
        The decomposition with components numbered in topological order.
    """
    index: list[int] = [-1] * g.n
    lowlink: list[int] = [0] * g.n
    on_stack: list[bool] = [False] * g.n
    stack: list[int] = []
    emitted: list[tuple[int, ...]] = []
    counter = 0

    for root in range(g.n):
        if index[root] != -1:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, pos = work[-1]
            successors = g.out_neighbors[v]
            if pos < len(successors):
                work[-1] = (v, pos + 1)
                w = successors[pos]
                if index[w] == -1:
                    index[w] = lowlink[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    lowlink[v] = min(lowlink[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index[v]:
                members: list[int] = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    members.append(w)
                    if w == v:
                        break
                emitted.append(tuple(sorted(members)))

    # Tarjan emits sinks first.
    components = tuple(reversed(emitted))
    component_of = [0] * g.n
    for cid, comp in enumerate(components):
        for v in comp:
            component_of[v] = cid
    return SccDecomposition(
        component_of=tuple(component_of),
        components=components,
        topo_order=tuple(range(len(components))),
    )


class NotMemberReason(StrEnum):
    """Why a digraph is not in G_n^m."""

    STRONGLY_CONNECTED = "strongly-connected"
    NO_NONTRIVIAL_COMPONENT = "no-nontrivial-component"
    MULTIPLE_NONTRIVIAL_COMPONENTS = "multiple-nontrivial-components"
    NON_TREE_ATTACHMENT = "non-tree-attachment"
    DISCONNECTED = "disconnected"


@dataclass(frozen=True)
class NotMember:
    """Negative verdict of ``classify_gnm``.

    Attributes:
        reason: Machine-readable reason.
        detail: Human-readable elaboration.
    """

    reason: NotMemberReason
    detail: str = ""


@dataclass(frozen=True)
class GnmStructure:
    """A digraph recognised as a member of G_n^m.

    Attributes:
        g: The digraph.
        core_vertices: Vertices of the unique strong component ``G*``, increasing.
        tree_of: For each core vertex (aligned with ``core_vertices``), the vertex set of its
            hung tree with the core vertex first and the remaining vertices increasing.
        core_out_deg: Outdegree inside ``G*`` of each core vertex, aligned with
            ``core_vertices``.
    """

    g: Digraph
    core_vertices: tuple[int, ...]
    tree_of: tuple[tuple[int, ...], ...]
    core_out_deg: tuple[int, ...]

    @property
    def n(self) -> int:
        """Order of the digraph."""
        return self.g.n

    @property
    def m(self) -> int:
        """Order of the strong component."""
        return len(self.core_vertices)

    @property
    def tree_sizes(self) -> tuple[int, ...]:
        """Tree sizes ``n_i`` aligned with ``core_vertices``."""
        return tuple(len(tree) for tree in self.tree_of)

    @cached_property
    def core_set(self) -> frozenset[int]:
        """Core vertices as a set."""
        return frozenset(self.core_vertices)

    @cached_property
    def core_arcs(self) -> tuple[Arc, ...]:
        """Arcs with both endpoints in the core."""
        core = self.core_set
        return tuple(arc for arc in self.g.arcs if arc[0] in core and arc[1] in core)

    @cached_property
    def tree_arcs(self) -> tuple[Arc, ...]:
        """Arcs with at least one endpoint off the core."""
        core = self.core_set
        return tuple(arc for arc in self.g.arcs if not (arc[0] in core and arc[1] in core))

    @property
    def v1_position(self) -> int:
        """Position in ``core_vertices`` of the maximal-outdegree core vertex.

        Ties go to the lowest vertex index.
        """
        best = max(self.core_out_deg)
        return self.core_out_deg.index(best)

    @property
    def v1(self) -> int:
        """The maximal-outdegree core vertex."""
        return self.core_vertices[self.v1_position]

    @property
    def n1(self) -> int:
        """Size of the tree hung on ``v1``."""
        return self.tree_sizes[self.v1_position]

    @property
    def core_out_deg_sorted(self) -> tuple[int, ...]:
        """Core outdegrees in non-increasing order."""
        return tuple(sorted(self.core_out_deg, reverse=True))

    @property
    def off_core_vertices(self) -> tuple[int, ...]:
        """Vertices outside the strong component, increasing."""
        core = self.core_set
        return tuple(v for v in range(self.n) if v not in core)


def _find(parent: list[int], v: int) -> int:
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


def classify_gnm(g: Digraph) -> GnmStructure | NotMember:
    """Recognise membership in G_n^m and extract the core and hung trees.

    Args:
        g: The digraph.

    Returns:
        The structure when ``g`` has exactly one strong component of order ``m >= 2``, every
        other vertex lies in a tree hung on exactly one core vertex, and ``g`` is connected
        but not strongly connected; otherwise a ``NotMember`` verdict.
    """
    if not is_weakly_connected(g):
        return NotMember(NotMemberReason.DISCONNECTED, "underlying graph is disconnected")
    decomposition = tarjan_scc(g)
    if decomposition.is_strongly_connected:
        return NotMember(NotMemberReason.STRONGLY_CONNECTED)
    nontrivial = decomposition.nontrivial
    if not nontrivial:
        return NotMember(NotMemberReason.NO_NONTRIVIAL_COMPONENT)
    if len(nontrivial) > 1:
        return NotMember(
            NotMemberReason.MULTIPLE_NONTRIVIAL_COMPONENTS,
            f"{len(nontrivial)} components of order >= 2",
        )

    core = nontrivial[0]
    core_set = frozenset(core)
    parent = list(range(g.n))
    for tail, head in g.arcs:
        if tail in core_set and head in core_set:
            continue
        a, b = _find(parent, tail), _find(parent, head)
        if a == b:
            return NotMember(
                NotMemberReason.NON_TREE_ATTACHMENT,
                f"arc {(tail, head)} closes an undirected cycle outside the core",
            )
        parent[a] = b

    root_to_core: dict[int, int] = {}
    for v in core:
        root = _find(parent, v)
        if root in root_to_core:
            return NotMember(
                NotMemberReason.NON_TREE_ATTACHMENT,
                f"core vertices {root_to_core[root]} and {v} share a hung tree",
            )
        root_to_core[root] = v

    members: dict[int, list[int]] = {v: [] for v in core}
    for v in range(g.n):
        if v in core_set:
            continue
        owner = root_to_core.get(_find(parent, v))
        if owner is None:
            return NotMember(
                NotMemberReason.NON_TREE_ATTACHMENT,
                f"vertex {v} is not attached to the core",
            )
        members[owner].append(v)

    core_out = tuple(sum(1 for w in g.out_neighbors[v] if w in core_set) for v in core)
    structure = GnmStructure(
        g=g,
        core_vertices=core,
        tree_of=tuple((v, *members[v]) for v in core),
        core_out_deg=core_out,
    )
    logger.debug("Classified digraph as G_%d^%d member", structure.n, structure.m)
    return structure


def require_gnm(g: Digraph) -> GnmStructure:
    """Classify a digraph, raising when it is not in G_n^m.

    Args:
        g: The digraph.

    Returns:
        Its structure.

    Raises:
        NotMemberError: If ``g`` is not a member.
    """
    verdict = classify_gnm(g)
    if isinstance(verdict, NotMember):
        raise NotMemberError(verdict)
    return verdict


__all__ = [
    "GnmStructure",
    "NotMember",
    "NotMemberReason",
    "SccDecomposition",
    "classify_gnm",
    "require_gnm",
    "tarjan_scc",
]

__description__ = """
Tarjan strong components, condensation order and G_n^m membership.
"""
