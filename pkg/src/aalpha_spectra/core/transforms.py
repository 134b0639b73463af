"""Extremal rewirings of the trees hung on a strong component."""

from __future__ import annotations

from fractions import Fraction
from logging import getLogger

from .digraph import Arc, Digraph, closed_walks_2
from .linalg import Scalar, check_alpha
from .models import AlphaThreshold, TransformKind, TransformOutcome
from .scc import GnmStructure, require_gnm

logger = getLogger(__name__)


def _outcome(s: GnmStructure, tree_arcs: list[Arc], kind: TransformKind) -> TransformOutcome:
    if not tree_arcs:
        return TransformOutcome(result=s.g, structure=s, kind=kind)
    result = Digraph(s.n, s.core_arcs + tuple(tree_arcs))
    structure = require_gnm(result)
    logger.debug("Applied %s rewiring to G_%d^%d member", kind.value, s.n, s.m)
    return TransformOutcome(result=result, structure=structure, kind=kind)


def to_g_prime(s: GnmStructure) -> TransformOutcome:
    """Replace every hung tree by an out-star centred at its core vertex.

    Args:
        s: Structure of a G_n^m member.

    Returns:
        The rewired digraph; vertex labels are preserved.
    """
    arcs = [(tree[0], u) for tree in s.tree_of for u in tree[1:]]
    return _outcome(s, arcs, TransformKind.PRIME)


def to_g_double_prime(s: GnmStructure) -> TransformOutcome:
    """Hang every non-core vertex as a leaf of ``v1``, the maximal-outdegree core vertex.

    Args:
        s: Structure of a G_n^m member.

    Returns:
        The rewired digraph with a single out-star ``K_{1,n-m}`` on ``v1``.
    """
    v1 = s.v1
    arcs = [(v1, u) for u in s.off_core_vertices]
    return _outcome(s, arcs, TransformKind.DOUBLE_PRIME)


def to_g_triple_prime(s: GnmStructure) -> TransformOutcome:
    """Replace every hung tree by an in-tree rooted at its core vertex.

    The representative in-tree is the directed path ``u_k -> ... -> u_2 -> v_i`` through the
    tree's non-core vertices taken in increasing order.

    Args:
        s: Structure of a G_n^m member.

    Returns:
        The rewired digraph.
    """
    arcs: list[Arc] = []
    for tree in s.tree_of:
        arcs.extend((tree[j + 1], tree[j]) for j in range(len(tree) - 1))
    return _outcome(s, arcs, TransformKind.TRIPLE_PRIME)


_TRANSFORMS = {
    TransformKind.PRIME: to_g_prime,
    TransformKind.DOUBLE_PRIME: to_g_double_prime,
    TransformKind.TRIPLE_PRIME: to_g_triple_prime,
}


def transform(s: GnmStructure, kind: TransformKind) -> TransformOutcome:
    """Apply the rewiring named by ``kind``.

    Args:
        s: Structure of a G_n^m member.
        kind: Which rewiring.

    Returns:
        The outcome.
    """
    return _TRANSFORMS[kind](s)


def alpha_threshold(s: GnmStructure) -> AlphaThreshold:
    """Alpha from which the global out-star provably dominates the per-vertex out-stars.

    The value is ``d / (d + n - m - n1 + 1)`` where ``d`` is the core outdegree of ``v1``
    and ``n1`` the size of its tree. When all other trees are trivial the two rewirings
    coincide; the threshold is then reported as 1 and flagged degenerate.

    Args:
        s: Structure of a G_n^m member.

    Returns:
        The threshold.

    Raises:
        ValueError: If the denominator is not positive, which only a malformed structure
            can produce.
    """
    d = s.core_out_deg[s.v1_position]
    spread = s.n - s.m - s.n1 + 1
    if d + spread <= 0:
        raise ValueError(f"malformed structure: threshold denominator {d + spread}")
    if spread == 0:
        return AlphaThreshold(Fraction(1), degenerate=True)
    return AlphaThreshold(Fraction(d, d + spread))


def _core_walks(s: GnmStructure) -> int:
    return closed_walks_2(Digraph(s.n, s.core_arcs))


def energy_g_prime(s: GnmStructure, alpha: Scalar) -> Fraction:
    """Closed-form energy of the per-vertex out-star rewiring.

    Args:
        s: Structure of a G_n^m member.
        alpha: Interpolation parameter.

    Returns:
        ``alpha^2 * sum_i (d_i* + n_i - 1)^2 + (1 - alpha)^2 * c2``.
    """
    a = check_alpha(alpha)
    squares = sum((d + k - 1) ** 2 for d, k in zip(s.core_out_deg, s.tree_sizes))
    return a * a * squares + (1 - a) ** 2 * _core_walks(s)


def energy_g_double_prime(s: GnmStructure, alpha: Scalar) -> Fraction:
    """Closed-form energy of the global out-star rewiring.

    Args:
        s: Structure of a G_n^m member.
        alpha: Interpolation parameter.

    Returns:
        ``alpha^2 * ((d_1* + n - m)^2 + sum_{i>=2} d_i*^2) + (1 - alpha)^2 * c2``.
    """
    a = check_alpha(alpha)
    position = s.v1_position
    squares = sum(
        (d + (s.n - s.m if i == position else 0)) ** 2 for i, d in enumerate(s.core_out_deg)
    )
    return a * a * squares + (1 - a) ** 2 * _core_walks(s)


def energy_g_triple_prime(s: GnmStructure, alpha: Scalar) -> Fraction:
    """Closed-form energy of the in-tree rewiring.

    Args:
        s: Structure of a G_n^m member.
        alpha: Interpolation parameter.

    Returns:
        ``alpha^2 * (sum d_i*^2 + n - m) + (1 - alpha)^2 * c2``.
    """
    a = check_alpha(alpha)
    squares = sum(d * d for d in s.core_out_deg) + s.n - s.m
    return a * a * squares + (1 - a) ** 2 * _core_walks(s)


def g_prime_radius_upper_bound(s: GnmStructure, alpha: Scalar) -> Fraction:
    """Row-sum upper bound ``max_i (d_i* + alpha * (n_i - 1))`` on the radius of ``G'``."""
    a = check_alpha(alpha)
    return max(d + a * (k - 1) for d, k in zip(s.core_out_deg, s.tree_sizes))


def g_double_prime_radius_lower_bound(s: GnmStructure, alpha: Scalar) -> Fraction:
    """Diagonal lower bound ``alpha * (d_1* + n - m)`` on the radius of ``G''``."""
    a = check_alpha(alpha)
    return a * (s.core_out_deg[s.v1_position] + s.n - s.m)


def is_out_star_hung(s: GnmStructure) -> bool:
    """Whether every tree is an out-star centred at its core vertex.

    Args:
        s: Structure of a G_n^m member.

    Returns:
        True exactly when ``s.g`` equals its per-vertex out-star rewiring.
    """
    expected = {(tree[0], u) for tree in s.tree_of for u in tree[1:]}
    return set(s.tree_arcs) == expected


def is_max_star_hung(s: GnmStructure) -> bool:
    """Whether all non-core vertices are leaves of one core vertex of maximal core outdegree.

    Args:
        s: Structure of a G_n^m member.

    Returns:
        True when the tree arcs form a single out-star on some maximizer; trivially True
        without non-core vertices.
    """
    if s.n == s.m:
        return True
    best = max(s.core_out_deg)
    for position, tree in enumerate(s.tree_of):
        if len(tree) == s.n - s.m + 1:
            star = {(tree[0], u) for u in tree[1:]}
            return s.core_out_deg[position] == best and set(s.tree_arcs) == star
    return False


def is_in_tree_hung(s: GnmStructure) -> bool:
    """Whether every tree is an in-tree rooted at its core vertex.

    Args:
        s: Structure of a G_n^m member.

    Returns:
        True when each non-core vertex has outdegree 1 and no core vertex has an arc into
        its tree.
    """
    core = s.core_set
    if any(s.g.out_deg[u] != 1 for u in s.off_core_vertices):
        return False
    return all(tail not in core for tail, _ in s.tree_arcs)


__all__ = [
    "alpha_threshold",
    "energy_g_double_prime",
    "energy_g_prime",
    "energy_g_triple_prime",
    "g_double_prime_radius_lower_bound",
    "g_prime_radius_upper_bound",
    "is_in_tree_hung",
    "is_max_star_hung",
    "is_out_star_hung",
    "to_g_double_prime",
    "to_g_prime",
    "to_g_triple_prime",
    "transform",
]

__description__ = """
Per-vertex out-stars, the global out-star at v1, in-trees, and the alpha threshold.
"""
