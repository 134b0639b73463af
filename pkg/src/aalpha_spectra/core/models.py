"""Certificates and report data models."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .digraph import Digraph
    from .linalg import PolynomialR
    from .scc import GnmStructure


@dataclass(frozen=True)
class RadiusCertificate:
    """Spectral-radius estimate with a certified enclosure.

    Attributes:
        estimate: Point estimate, the midpoint of the enclosure.
        lower: Certified lower bound.
        upper: Certified upper bound.
        iterations: Power-iteration steps spent (summed over blocks for combined certificates).
        block_id: Strong component whose block realized the maximum.
        converged: False when the iteration cap stopped the run before the tolerance was met.
        block_vertices: Vertices of that component, when known.
    """

    estimate: float
    lower: float
    upper: float
    iterations: int
    block_id: int
    converged: bool = True
    block_vertices: tuple[int, ...] = ()

    @property
    def width(self) -> float:
        """Enclosure width ``upper - lower``."""
        return self.upper - self.lower


@dataclass(frozen=True)
class SpectrumReport:
    """Numeric spectrum of a small digraph together with its exact tree eigenvalues.

    Attributes:
        alpha: Interpolation parameter.
        eigenvalues: All ``n`` eigenvalues, largest real part first.
        tree_eigenvalues: Exact ``alpha * d+`` for vertices forming singleton components,
            ordered by vertex.
        block_radii: Certificates of every strong component in topological order.
        char_poly: Characteristic polynomial of ``A_alpha``.
        quotient: ``char_poly`` divided by the product of ``(x - alpha * d+)`` factors.
        remainder: Remainder of that division; zero witnesses exact divisibility.
    """

    alpha: Fraction
    eigenvalues: tuple[complex, ...]
    tree_eigenvalues: tuple[Fraction, ...]
    block_radii: tuple[RadiusCertificate, ...]
    char_poly: PolynomialR
    quotient: PolynomialR
    remainder: PolynomialR

    @property
    def divides(self) -> bool:
        """Whether the tree factors divide the characteristic polynomial exactly."""
        return self.remainder.is_zero


@dataclass(frozen=True)
class EnergyReport:
    """Second spectral moment of ``A_alpha`` by closed form and by trace.

    Attributes:
        alpha: Interpolation parameter.
        closed_form: ``degree_term + walk_term``, exact.
        trace_check: ``trace(A_alpha^2)`` in binary64.
        degree_term: ``alpha^2 * sum(d+^2)``.
        walk_term: ``(1 - alpha)^2 * c2``.
    """

    alpha: Fraction
    closed_form: Fraction
    trace_check: float
    degree_term: Fraction
    walk_term: Fraction

    @property
    def trace_error(self) -> float:
        """Relative disagreement between the closed form and the float trace."""
        value = float(self.closed_form)
        return abs(value - self.trace_check) / (1.0 + abs(value))


class TransformKind(StrEnum):
    """The three extremal rewirings of hung trees."""

    PRIME = "prime"
    DOUBLE_PRIME = "double-prime"
    TRIPLE_PRIME = "triple-prime"


@dataclass(frozen=True)
class TransformOutcome:
    """Result of rewiring the trees of a G_n^m member.

    Attributes:
        result: The rewired digraph.
        structure: Its recognised structure.
        kind: Which rewiring produced it.
    """

    result: Digraph
    structure: GnmStructure
    kind: TransformKind


@dataclass(frozen=True)
class AlphaThreshold:
    """Lower end of the alpha interval on which the global out-star beats per-vertex stars.

    Attributes:
        value: ``d / (d + n - m - n1 + 1)`` with ``d`` the core outdegree of ``v1``.
        degenerate: True when every tree except the one on ``v1`` is trivial, so the two
            rewirings coincide and ``value`` is reported as 1.
    """

    value: Fraction
    degenerate: bool = False

    def admits(self, alpha: Fraction) -> bool:
        """Whether ``alpha`` lies in the interval guaranteed by the threshold.

        Args:
            alpha: Interpolation parameter.

        Returns:
            True for ``alpha >= value``, for ``alpha == 0`` and for degenerate thresholds.
        """
        return self.degenerate or alpha == 0 or alpha >= self.value


@dataclass(frozen=True)
class LawFailure:
    """One violated case of an executable law.

    Attributes:
        instance: Serialized digraph or parameter description.
        alpha: Interpolation parameter of the case, when one applies.
        expected: Expected value or relation, rendered as text.
        actual: Observed value, rendered as text.
        detail: Free-form context.
    """

    instance: str
    alpha: Fraction | None
    expected: str
    actual: str
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking one law over a collection of cases.

    Attributes:
        law_id: Identifier of the law.
        cases_checked: Cases evaluated, excluding skipped and unconverged ones.
        failures: Violations in evaluation order.
        tolerances: Named tolerances the checks used; empty for exact laws.
        skipped: Cases outside the law's hypothesis.
        unconverged: Cases excluded because a radius certificate did not converge.
    """

    law_id: str
    cases_checked: int
    failures: tuple[LawFailure, ...] = ()
    tolerances: dict[str, float] = field(default_factory=dict)
    skipped: int = 0
    unconverged: int = 0

    @property
    def passed(self) -> bool:
        """True when no case failed."""
        return not self.failures


class ScanMode(StrEnum):
    """How the conjecture scan selects instances."""

    EXHAUSTIVE = "exhaustive"
    SAMPLE = "sample"


@dataclass(frozen=True)
class ScanWitness:
    """A compared pair of radius certificates from the conjecture scan.

    Attributes:
        instance: Serialized digraph ``G``.
        alpha: Interpolation parameter.
        radius: Certificate for ``G``.
        radius_double_prime: Certificate for the global out-star rewiring of ``G``.
        threshold: Alpha threshold of ``G``.
    """

    instance: str
    alpha: Fraction
    radius: RadiusCertificate
    radius_double_prime: RadiusCertificate
    threshold: AlphaThreshold

    @property
    def gap(self) -> float:
        """``lower(G'') - upper(G)``; negative values mean the enclosures overlap."""
        return self.radius_double_prime.lower - self.radius.upper


@dataclass(frozen=True)
class ScanReport:
    """Outcome of a conjecture scan over G_n^m.

    Attributes:
        n: Vertex count.
        m: Core order.
        alpha_grid: Parameters compared for every instance.
        mode: Exhaustive enumeration or seeded sampling.
        instances_checked: Instances visited.
        cases_checked: Instance and alpha pairs with converged certificates.
        counterexamples: Cases with ``upper(G'') < lower(G)``.
        near_misses: First overlapping or nearly touching cases, capped.
        near_miss_count: Total number of near misses.
        unconverged: Cases excluded for unconverged certificates.
        below_threshold: Cases with ``alpha`` below a non-degenerate threshold.
        truncated: True when a budget cut the enumeration short.
        seed: Sampling seed, ``None`` for exhaustive scans.
        tol: Tolerance of the certificates.
    """

    n: int
    m: int
    alpha_grid: tuple[Fraction, ...]
    mode: ScanMode
    instances_checked: int
    cases_checked: int
    counterexamples: tuple[ScanWitness, ...]
    near_misses: tuple[ScanWitness, ...]
    near_miss_count: int
    unconverged: int
    below_threshold: int
    truncated: bool
    seed: int | None
    tol: float

    @property
    def passed(self) -> bool:
        """True when the scan found no certified counterexample."""
        return not self.counterexamples


__all__ = [
    "AlphaThreshold",
    "EnergyReport",
    "LawFailure",
    "RadiusCertificate",
    "ScanMode",
    "ScanReport",
    "ScanWitness",
    "SpectrumReport",
    "TransformKind",
    "TransformOutcome",
    "VerificationReport",
]

__description__ = """
Immutable certificates and reports produced by the spectra, laws and search modules.
"""
