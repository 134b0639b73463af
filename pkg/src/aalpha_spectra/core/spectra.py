"""A_alpha spectral radius, spectrum and energy of arbitrary digraphs."""

from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction
from logging import getLogger

import numpy as np

from .constants import DEFAULT_TOL, SPECTRUM_MAX_N
from .digraph import Digraph, closed_walks_2
from .errors import SizeLimitError
from .linalg import (
    PolynomialR,
    Scalar,
    build_a_alpha,
    build_a_alpha_float,
    char_poly,
    check_alpha,
    perron_radius,
    poly_divide,
    poly_roots_float,
)
from .models import EnergyReport, RadiusCertificate, SpectrumReport
from .scc import tarjan_scc

logger = getLogger(__name__)


def spectral_radius_blocks(
    g: Digraph,
    alpha: Scalar,
    tol: float = DEFAULT_TOL,
) -> tuple[RadiusCertificate, ...]:
    """Certify the Perron root of every strong-component block of ``A_alpha(g)``.

    Args:
        g: The digraph.
        alpha: Interpolation parameter in ``[0, 1)``.
        tol: Relative enclosure width requested from each block.

    Returns:
        One certificate per component, in topological component order; singleton
        components contribute ``alpha * d+`` exactly.
    """
    a = check_alpha(alpha)
    decomposition = tarjan_scc(g)
    certificates: list[RadiusCertificate] = []
    for block_id, component in enumerate(decomposition.components):
        if len(component) == 1:
            value = float(a * g.out_deg[component[0]])
            certificates.append(
                RadiusCertificate(value, value, value, 0, block_id, True, component)
            )
            continue
        block = build_a_alpha_float(g, a, component)
        certificates.append(
            perron_radius(block, tol, block_id=block_id, block_vertices=component)
        )
    return tuple(certificates)


def combine_certificates(certificates: Iterable[RadiusCertificate]) -> RadiusCertificate:
    """Merge block certificates into one for the whole matrix.

    Args:
        certificates: Per-block certificates, at least one.

    Returns:
        Enclosure ``[max lower, max upper]``, the largest estimate with its block provenance,
        summed iterations and the conjunction of convergence flags.
    """
    blocks = tuple(certificates)
    best = max(blocks, key=lambda c: c.estimate)
    return RadiusCertificate(
        estimate=best.estimate,
        lower=max(c.lower for c in blocks),
        upper=max(c.upper for c in blocks),
        iterations=sum(c.iterations for c in blocks),
        block_id=best.block_id,
        converged=all(c.converged for c in blocks),
        block_vertices=best.block_vertices,
    )


def spectral_radius(g: Digraph, alpha: Scalar, tol: float = DEFAULT_TOL) -> RadiusCertificate:
    """Certified ``A_alpha`` spectral radius of a possibly reducible digraph.

    The spectrum of ``A_alpha(g)`` is the union of its strong-component block spectra, so the
    radius is the largest block Perron root.

    Args:
        g: The digraph.
        alpha: Interpolation parameter in ``[0, 1)``.
        tol: Relative enclosure width per block.

    Returns:
        Combined certificate; ``converged`` is False if any block hit the iteration cap.

    Raises:
        AlphaRangeError: If ``alpha`` is outside ``[0, 1)``.
    """
    certificate = combine_certificates(spectral_radius_blocks(g, alpha, tol))
    if not certificate.converged:
        logger.warning("Radius certificate for n=%d, alpha=%s did not converge", g.n, alpha)
    return certificate


def sum_squared_outdegrees(g: Digraph) -> int:
    """Sum of squared outdegrees.

    Args:
        g: The digraph.

    Returns:
        ``sum(d_i+ ** 2)``.
    """
    return sum(d * d for d in g.out_deg)


def energy_closed_form(g: Digraph, alpha: Scalar) -> Fraction:
    """Exact ``A_alpha`` energy ``alpha^2 * sum(d+^2) + (1 - alpha)^2 * c2``.

    Args:
        g: The digraph.
        alpha: Interpolation parameter in ``[0, 1)``.

    Returns:
        The energy as a fraction.
    """
    a = check_alpha(alpha)
    return a * a * sum_squared_outdegrees(g) + (1 - a) ** 2 * closed_walks_2(g)


def energy(g: Digraph, alpha: Scalar) -> EnergyReport:
    """Second spectral moment of ``A_alpha(g)``, exact with a float trace cross-check.

    Args:
        g: The digraph.
        alpha: Interpolation parameter in ``[0, 1)``.

    Returns:
        The energy report.

    Raises:
        AlphaRangeError: If ``alpha`` is outside ``[0, 1)``.
    """
    a = check_alpha(alpha)
    degree_term = a * a * sum_squared_outdegrees(g)
    walk_term = (1 - a) ** 2 * closed_walks_2(g)
    matrix = build_a_alpha_float(g, a)
    trace_check = float(np.einsum("ij,ji->", matrix, matrix))
    return EnergyReport(
        alpha=a,
        closed_form=degree_term + walk_term,
        trace_check=trace_check,
        degree_term=degree_term,
        walk_term=walk_term,
    )


def exact_trace_of_square(g: Digraph, alpha: Scalar) -> Fraction:
    """``trace(A_alpha^2)`` in rational arithmetic.

    Args:
        g: The digraph.
        alpha: Interpolation parameter in ``[0, 1)``.

    Returns:
        The trace.
    """
    a_alpha = build_a_alpha(g, alpha)
    n = a_alpha.order
    return sum(
        (a_alpha[i, j] * a_alpha[j, i] for i in range(n) for j in range(n)),
        Fraction(0),
    )


def second_moment(eigenvalues: Iterable[complex]) -> complex:
    """Sum of squared eigenvalues, without moduli.

    Args:
        eigenvalues: Complex eigenvalues.

    Returns:
        ``sum(z**2)``; real up to rounding for spectra closed under conjugation.
    """
    return complex(sum((z * z for z in eigenvalues), 0j))


def _snap(z: complex, tol: float) -> complex:
    if abs(z.imag) <= tol * (1.0 + abs(z)):
        return complex(z.real, 0.0)
    return z


def spectrum_small(g: Digraph, alpha: Scalar, tol: float = DEFAULT_TOL) -> SpectrumReport:
    """Full ``A_alpha`` spectrum of a small digraph with the exact tree-eigenvalue witness.

    The characteristic polynomial is divided exactly by ``prod(x - alpha * d_v+)`` over the
    vertices forming singleton strong components; the numeric eigenvalues are those exact
    values together with the roots of the quotient.

    Args:
        g: Digraph with at most 16 vertices.
        alpha: Interpolation parameter in ``[0, 1)``.
        tol: Residual tolerance for the root finder and radius tolerance for the blocks.

    Returns:
        The spectrum report.

    Raises:
        SizeLimitError: If ``g`` has more than 16 vertices.
        ConvergenceError: If root finding does not converge.
    """
    if g.n > SPECTRUM_MAX_N:
        raise SizeLimitError(f"spectrum_small supports n <= {SPECTRUM_MAX_N}, got {g.n}")
    a = check_alpha(alpha)
    polynomial = char_poly(build_a_alpha(g, a))
    singletons = tarjan_scc(g).singleton_vertices
    tree_eigenvalues = tuple(a * g.out_deg[v] for v in singletons)
    quotient, remainder = poly_divide(polynomial, PolynomialR.from_roots(tree_eigenvalues))
    if not remainder.is_zero:
        logger.error("Tree factors do not divide the characteristic polynomial: %s", remainder)
    roots = poly_roots_float(quotient, tol) if quotient.degree > 0 else []
    eigenvalues = [complex(float(value), 0.0) for value in tree_eigenvalues]
    eigenvalues.extend(_snap(z, tol) for z in roots)
    eigenvalues.sort(key=lambda z: (-z.real, -z.imag))
    return SpectrumReport(
        alpha=a,
        eigenvalues=tuple(eigenvalues),
        tree_eigenvalues=tree_eigenvalues,
        block_radii=spectral_radius_blocks(g, a, tol),
        char_poly=polynomial,
        quotient=quotient,
        remainder=remainder,
    )


__all__ = [
    "combine_certificates",
    "energy",
    "energy_closed_form",
    "exact_trace_of_square",
    "second_moment",
    "spectral_radius",
    "spectral_radius_blocks",
    "spectrum_small",
    "sum_squared_outdegrees",
]

__description__ = """
Blockwise certified spectral radius, small-n spectra and exact second-moment energies.
"""
