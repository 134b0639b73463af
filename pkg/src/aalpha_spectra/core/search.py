"""Enumeration and sampling of G_n^m and the global out-star radius scan."""

from __future__ import annotations

from bisect import bisect_right
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import accumulate, combinations
from logging import getLogger
from math import prod

import numpy as np

from .constants import (
    DEFAULT_ALPHA_GRID,
    DEFAULT_SAMPLE_COUNT,
    DEFAULT_TOL,
    EXHAUSTIVE_MAX_N,
    MAX_WITNESSES,
    STRONG_CORE_MAX_M,
    STRONG_CORE_MIN_M,
)
from .digraph import Arc, Digraph
from .errors import SizeLimitError
from .families import HungTree, hang_trees
from .linalg import check_alpha
from .models import RadiusCertificate, ScanMode, ScanReport, ScanWitness
from .scc import GnmStructure, require_gnm, tarjan_scc
from .serialization import format_digraph
from .spectra import spectral_radius
from .transforms import alpha_threshold, to_g_double_prime
from .trees import oriented_tree_at, tree_count

logger = getLogger(__name__)


@lru_cache(maxsize=None)
def _strong_cores(m: int) -> tuple[Digraph, ...]:
    pairs = [(i, j) for i in range(m) for j in range(m) if i != j]
    cores: list[Digraph] = []
    for mask in range(1 << len(pairs)):
        arcs = tuple(pair for bit, pair in enumerate(pairs) if mask >> bit & 1)
        candidate = Digraph(m, arcs)
        if tarjan_scc(candidate).is_strongly_connected:
            cores.append(candidate)
    return tuple(cores)


def enumerate_strong_cores(m: int) -> list[Digraph]:
    """All strongly connected labeled digraphs on ``m`` vertices.

    Arc subsets are visited in increasing bitmask order over the pairs ``(i, j)``, ``i != j``,
    listed row by row.

    Args:
        m: Order, between 2 and 4.

    Returns:
        The strong digraphs in that order.

    Raises:
        SizeLimitError: If ``m`` is out of range.
    """
    if not STRONG_CORE_MIN_M <= m <= STRONG_CORE_MAX_M:
        raise SizeLimitError(
            f"strong cores are enumerated for {STRONG_CORE_MIN_M} <= m <= {STRONG_CORE_MAX_M}"
        )
    return list(_strong_cores(m))


def compositions(n: int, parts: int) -> list[tuple[int, ...]]:
    """Compositions of ``n`` into ``parts`` positive summands, in lexicographic order.

    Args:
        n: Total.
        parts: Number of summands.

    Returns:
        The compositions.
    """
    result: list[tuple[int, ...]] = []
    for cuts in combinations(range(1, n), parts - 1):
        bounds = (0, *cuts, n)
        result.append(tuple(b - a for a, b in zip(bounds, bounds[1:])))
    return result


@dataclass
class GnmEnumerator:
    """Index-addressable stream of the labeled members of G_n^m.

    Instances are ordered by strong core, then by tree-size composition, then by the oriented
    tree hung on each core vertex (core vertex 0 varying slowest). Core vertices are
    ``0..m-1`` and each tree's non-root vertices receive consecutive labels in core order.

    Attributes:
        n: Vertex count.
        m: Core order.
        budget: Maximum number of instances streamed by iteration; ``None`` for all.
        truncated: Set once iteration stopped at the budget.
    """

    n: int
    m: int
    budget: int | None = None
    truncated: bool = field(default=False, init=False)

    def __post_init__(self) -> None:
        """Validate sizes and prepare the mixed-radix index tables.

        Raises:
            SizeLimitError: If ``n < m`` or ``m`` is outside the strong-core range.
        """
        if self.n < self.m:
            raise SizeLimitError(f"G_n^m needs n >= m, got n={self.n}, m={self.m}")
        self._cores = enumerate_strong_cores(self.m)
        self._compositions = compositions(self.n, self.m)
        self._block_sizes = [prod(tree_count(k) for k in comp) for comp in self._compositions]
        self._offsets = [0, *accumulate(self._block_sizes)]

    def per_core(self) -> int:
        """Number of instances sharing one strong core."""
        return self._offsets[-1]

    def count(self) -> int:
        """Total number of labeled instances."""
        return len(self._cores) * self.per_core()

    def instance_at(self, index: int) -> GnmStructure:
        """Decode the instance at a position of the enumeration order.

        Args:
            index: Position in ``0..count()-1``.

        Returns:
            The recognised structure.

        Raises:
            IndexError: If ``index`` is out of range.
        """
        if not 0 <= index < self.count():
            raise IndexError(f"instance index {index} out of range")
        core_index, rest = divmod(index, self.per_core())
        if self.n == self.m:
            # Bare core: a degenerate structure with trivial trees.
            core = self._cores[core_index]
            vertices = tuple(range(self.m))
            return GnmStructure(core, vertices, tuple((v,) for v in vertices), core.out_deg)
        block = bisect_right(self._offsets, rest) - 1
        rest -= self._offsets[block]
        sizes = self._compositions[block]
        tree_indices: list[int] = []
        for k in reversed(sizes):
            rest, digit = divmod(rest, tree_count(k))
            tree_indices.append(digit)
        tree_indices.reverse()
        hung = [
            HungTree(v, oriented_tree_at(k, t))
            for v, (k, t) in enumerate(zip(sizes, tree_indices))
            if k > 1
        ]
        return require_gnm(hang_trees(self._cores[core_index], hung))

    def __iter__(self) -> Iterator[GnmStructure]:
        """Stream instances in order, stopping at the budget.

        Raises:
            SizeLimitError: If ``n`` exceeds the exhaustive-enumeration limit.
        """
        if self.n > EXHAUSTIVE_MAX_N:
            raise SizeLimitError(f"exhaustive enumeration supports n <= {EXHAUSTIVE_MAX_N}")
        total = self.count()
        limit = total if self.budget is None else min(total, self.budget)
        self.truncated = limit < total
        if self.truncated:
            logger.warning(
                "Enumeration of G_%d^%d truncated at %d of %d instances",
                self.n,
                self.m,
                limit,
                total,
            )
        for index in range(limit):
            yield self.instance_at(index)


def enumerate_gnm(n: int, m: int, budget: int | None = None) -> GnmEnumerator:
    """Stream the labeled members of G_n^m.

    Args:
        n: Vertex count, at most 7 for iteration.
        m: Core order, 2 to 4.
        budget: Optional cap on streamed instances; check ``truncated`` afterwards.

    Returns:
        An iterable enumerator.
    """
    return GnmEnumerator(n, m, budget)


def sample_indices(total: int, count: int, seed: int | None) -> list[int]:
    """Draw enumeration indices uniformly with replacement.

    Args:
        total: Size of the index space.
        count: Number of draws.
        seed: Seed for ``numpy.random.default_rng``.

    Returns:
        The indices in draw order.
    """
    if total == 0:
        return []
    if total >= 2**63:
        raise SizeLimitError("index space too large to sample")
    rng = np.random.default_rng(seed)
    return [int(i) for i in rng.integers(0, total, size=count)]


def sample_gnm(n: int, m: int, count: int, seed: int | None) -> list[GnmStructure]:
    """Seeded uniform sample from the labeled members of G_n^m.

    Args:
        n: Vertex count.
        m: Core order.
        count: Number of draws.
        seed: Random seed.

    Returns:
        The sampled structures, possibly with repeats.
    """
    enumerator = GnmEnumerator(n, m)
    return [enumerator.instance_at(i) for i in sample_indices(enumerator.count(), count, seed)]


def gnm_instances(
    max_n: int,
    budget: int,
    seed: int | None,
    m_values: Sequence[int] = (2, 3),
) -> list[GnmStructure]:
    """Verification instances: every G_n^m member while small, a seeded sample otherwise.

    Args:
        max_n: Largest vertex count.
        budget: Per-``(n, m)`` cap; larger classes are sampled with ``budget`` draws.
        seed: Sampling seed.
        m_values: Core orders to include.

    Returns:
        Structures ordered by ``m``, then ``n``.
    """
    instances: list[GnmStructure] = []
    for m in m_values:
        for n in range(m, max_n + 1):
            enumerator = GnmEnumerator(n, m)
            if enumerator.count() <= budget and n <= EXHAUSTIVE_MAX_N:
                instances.extend(enumerator)
            else:
                logger.info("Sampling %d members of G_%d^%d", budget, n, m)
                instances.extend(sample_gnm(n, m, budget, seed))
    return instances


def random_digraphs(
    count: int,
    max_n: int,
    seed: int | None,
    *,
    symmetric: bool = False,
    oriented: bool = False,
) -> list[Digraph]:
    """Seeded random digraphs with ``1 <= n <= max_n``.

    Args:
        count: Number of digraphs.
        max_n: Largest vertex count.
        seed: Random seed.
        symmetric: Draw each vertex pair as a symmetric pair or nothing.
        oriented: Draw each vertex pair as one arc in either direction or nothing.

    Returns:
        The digraphs.
    """
    rng = np.random.default_rng(seed)
    result: list[Digraph] = []
    for _ in range(count):
        n = int(rng.integers(1, max_n + 1))
        arcs: list[Arc] = []
        for i, j in combinations(range(n), 2):
            if symmetric:
                if rng.random() < 0.5:
                    arcs.extend([(i, j), (j, i)])
            elif oriented:
                choice = int(rng.integers(0, 3))
                if choice:
                    arcs.append((i, j) if choice == 1 else (j, i))
            else:
                if rng.random() < 0.5:
                    arcs.append((i, j))
                if rng.random() < 0.5:
                    arcs.append((j, i))
        result.append(Digraph(n, tuple(arcs)))
    return result


@dataclass
class _ScanTally:
    cases: int = 0
    counterexamples: list[ScanWitness] = field(default_factory=list)
    near_misses: list[ScanWitness] = field(default_factory=list)
    near_miss_count: int = 0
    unconverged: int = 0
    below_threshold: int = 0

    def merge(self, other: _ScanTally) -> None:
        self.cases += other.cases
        self.counterexamples.extend(other.counterexamples)
        room = MAX_WITNESSES - len(self.near_misses)
        self.near_misses.extend(other.near_misses[: max(room, 0)])
        self.near_miss_count += other.near_miss_count
        self.unconverged += other.unconverged
        self.below_threshold += other.below_threshold


def _scan_chunk(
    n: int,
    m: int,
    indices: Sequence[int],
    alpha_grid: Sequence[Fraction],
    tol: float,
) -> _ScanTally:
    enumerator = GnmEnumerator(n, m)
    tally = _ScanTally()
    cache: dict[tuple[Digraph, Fraction], RadiusCertificate] = {}
    for index in indices:
        s = enumerator.instance_at(index)
        target = to_g_double_prime(s).result
        if target == s.g:
            continue
        threshold = alpha_threshold(s)
        for alpha in alpha_grid:
            radius = spectral_radius(s.g, alpha, tol)
            key = (target, alpha)
            if key not in cache:
                cache[key] = spectral_radius(target, alpha, tol)
            radius_target = cache[key]
            if not (radius.converged and radius_target.converged):
                tally.unconverged += 1
                continue
            tally.cases += 1
            if not threshold.admits(alpha):
                tally.below_threshold += 1
            if radius_target.upper < radius.lower:
                witness = ScanWitness(format_digraph(s.g), alpha, radius, radius_target, threshold)
                logger.warning("Certified counterexample at alpha=%s:\n%s", alpha, witness.instance)
                tally.counterexamples.append(witness)
            elif radius_target.lower - radius.upper < 4.0 * tol * max(1.0, radius.upper):
                tally.near_miss_count += 1
                if len(tally.near_misses) < MAX_WITNESSES:
                    tally.near_misses.append(
                        ScanWitness(format_digraph(s.g), alpha, radius, radius_target, threshold)
                    )
    return tally


def _chunks(indices: Sequence[int], parts: int) -> list[list[int]]:
    size = max(1, -(-len(indices) // parts))
    return [list(indices[i : i + size]) for i in range(0, len(indices), size)]


def scan_conjecture_2_10(
    n: int,
    m: int,
    alpha_grid: Sequence[Fraction] = DEFAULT_ALPHA_GRID,
    tol: float = DEFAULT_TOL,
    mode: ScanMode = ScanMode.EXHAUSTIVE,
    seed: int | None = None,
    count: int = DEFAULT_SAMPLE_COUNT,
    budget: int | None = None,
    jobs: int = 1,
) -> ScanReport:
    """Search G_n^m for digraphs whose radius exceeds that of their global out-star rewiring.

    A case is a counterexample only when the certified enclosures separate, i.e.
    ``upper(G'') < lower(G)``. Cases whose enclosures overlap or nearly touch are near misses;
    digraphs that already equal their rewiring are skipped.

    Args:
        n: Vertex count.
        m: Core order.
        alpha_grid: Parameters to compare at.
        tol: Certificate tolerance.
        mode: Exhaustive enumeration or seeded sampling.
        seed: Sampling seed.
        count: Number of draws in sample mode.
        budget: Cap on enumerated instances in exhaustive mode.
        jobs: Worker processes; results are merged in enumeration order.

    Returns:
        The scan report.

    Raises:
        SizeLimitError: For exhaustive scans beyond the enumeration limit.
    """
    grid = tuple(check_alpha(alpha) for alpha in alpha_grid)
    enumerator = GnmEnumerator(n, m)
    total = enumerator.count()
    truncated = False
    if mode is ScanMode.EXHAUSTIVE:
        if n > EXHAUSTIVE_MAX_N:
            raise SizeLimitError(f"exhaustive scans support n <= {EXHAUSTIVE_MAX_N}")
        limit = total if budget is None else min(total, budget)
        truncated = limit < total
        indices: Sequence[int] = range(limit)
        seed = None
    else:
        indices = sample_indices(total, count, seed)
    logger.info(
        "Scanning %d instances of G_%d^%d over %d alpha values", len(indices), n, m, len(grid)
    )

    tally = _ScanTally()
    if jobs > 1 and len(indices) > 1:
        chunks = _chunks(indices, jobs)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            partials = pool.map(
                _scan_chunk,
                [n] * len(chunks),
                [m] * len(chunks),
                chunks,
                [grid] * len(chunks),
                [tol] * len(chunks),
            )
            for partial in partials:
                tally.merge(partial)
    else:
        tally.merge(_scan_chunk(n, m, indices, grid, tol))

    if tally.unconverged:
        logger.warning("%d scan cases had unconverged certificates", tally.unconverged)
    return ScanReport(
        n=n,
        m=m,
        alpha_grid=grid,
        mode=mode,
        instances_checked=len(indices),
        cases_checked=tally.cases,
        counterexamples=tuple(tally.counterexamples),
        near_misses=tuple(tally.near_misses),
        near_miss_count=tally.near_miss_count,
        unconverged=tally.unconverged,
        below_threshold=tally.below_threshold,
        truncated=truncated,
        seed=seed,
        tol=tol,
    )


__all__ = [
    "GnmEnumerator",
    "compositions",
    "enumerate_gnm",
    "enumerate_strong_cores",
    "gnm_instances",
    "random_digraphs",
    "sample_gnm",
    "sample_indices",
    "scan_conjecture_2_10",
]

__description__ = """
Labeled enumeration and seeded sampling of G_n^m, and the certified out-star radius scan.
"""
