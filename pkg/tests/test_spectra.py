"""Tests for spectral radius certificates, energies and small spectra."""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given

from aalpha_spectra.core import constants, digraph, errors, families, linalg, spectra
from tests.strategies import alphas, digraphs

F = Fraction


def _family(text: str) -> digraph.Digraph:
    return families.generate(families.FamilySpec.parse(text))


@pytest.mark.parametrize("alpha", [F(0), F(1, 3), F(1, 2), F(9, 10)])
def test_cycle_radius_is_one(alpha: Fraction) -> None:
    """Every row of A_alpha(C5) sums to one."""

    certificate = spectra.spectral_radius(_family("cycle:5"), alpha)

    assert certificate.converged
    assert certificate.estimate == pytest.approx(1.0, abs=1e-12)
    assert certificate.width <= constants.DEFAULT_TOL * max(1.0, certificate.upper)


def test_out_star_radius_is_exact_from_singletons() -> None:
    """OutStar(4) at 1/2 is triangular with radius 3/2 and no iterations."""

    certificate = spectra.spectral_radius(_family("outstar:4"), F(1, 2))

    assert certificate.lower == certificate.upper == 1.5
    assert certificate.iterations == 0
    assert certificate.block_vertices == (0,)


def test_star_hung_on_two_cycle_radius(c2_with_star: digraph.Digraph) -> None:
    """C2 with two leaves on vertex 0 has radius 1 + sqrt(2)/2 at 1/2."""

    certificate = spectra.spectral_radius(c2_with_star, F(1, 2))

    assert certificate.lower <= 1.0 + math.sqrt(2.0) / 2.0 <= certificate.upper
    assert certificate.block_vertices == (0, 1)


def test_blocks_follow_topological_order(c2_with_pendant: digraph.Digraph) -> None:
    """One certificate per component, the core first and the sink last."""

    blocks = spectra.spectral_radius_blocks(c2_with_pendant, F(1, 2))

    assert [c.block_vertices for c in blocks] == [(0, 1), (2,)]
    assert blocks[1].estimate == 0.0
    assert blocks[0].lower <= (3.0 + math.sqrt(5.0)) / 4.0 <= blocks[0].upper


def test_combined_certificate_takes_maximum_bounds() -> None:
    """Combining keeps the largest lower and upper bounds."""

    low = linalg.perron_radius(np.array([[0.5]]), block_id=0)
    high = linalg.perron_radius(np.array([[2.0]]), block_id=1, block_vertices=(4,))

    combined = spectra.combine_certificates([low, high])

    assert (combined.lower, combined.upper) == (2.0, 2.0)
    assert combined.block_id == 1
    assert combined.block_vertices == (4,)


@given(digraphs(), alphas)
def test_block_certificates_are_block_eigenvalues(g: digraph.Digraph, alpha: Fraction) -> None:
    """Each nontrivial block estimate is an eigenvalue of that block."""

    for certificate in spectra.spectral_radius_blocks(g, alpha):
        if len(certificate.block_vertices) < 2:
            continue
        block = linalg.build_a_alpha_float(g, alpha, certificate.block_vertices)
        distance = np.min(np.abs(np.linalg.eigvals(block) - certificate.estimate))

        assert certificate.converged
        assert distance <= 1e-8 * max(1.0, certificate.estimate)


@given(digraphs(), alphas)
def test_certificate_encloses_symmetric_radius(g: digraph.Digraph, alpha: Fraction) -> None:
    """For symmetric digraphs the enclosure contains the largest eigenvalue modulus."""

    symmetric = g.with_arcs((head, tail) for tail, head in g.arcs if not g.has_arc(head, tail))
    matrix = linalg.build_a_alpha_float(symmetric, alpha)
    reference = float(np.max(np.abs(np.linalg.eigvalsh(matrix))))
    slack = 1e-9 * max(1.0, reference)

    certificate = spectra.spectral_radius(symmetric, alpha)

    assert certificate.lower - slack <= reference <= certificate.upper + slack


@pytest.mark.parametrize(
    ("spec", "alpha", "expected"),
    [
        ("path:4", F(1, 2), F(3, 4)),
        ("cycle:2", F(0), F(2)),
        ("symstar:3", F(1, 2), F(5, 2)),
        ("outstar:4", F(1, 2), F(9, 4)),
        ("cycle:7", F(1, 3), F(7, 9)),
    ],
)
def test_energy_examples(spec: str, alpha: Fraction, expected: Fraction) -> None:
    """Closed-form energies of small families."""

    report = spectra.energy(_family(spec), alpha)

    assert report.closed_form == expected
    assert report.degree_term + report.walk_term == expected
    assert report.trace_error <= constants.ENERGY_TRACE_RTOL


def test_sum_squared_outdegrees_examples() -> None:
    """Squared outdegrees of stars, cycles and infinity digraphs."""

    assert spectra.sum_squared_outdegrees(_family("outstar:4")) == 9
    assert spectra.sum_squared_outdegrees(_family("cycle:5")) == 5
    assert spectra.sum_squared_outdegrees(_family("infinity:2,3")) == 7


@given(digraphs(), alphas)
def test_closed_form_matches_exact_trace(g: digraph.Digraph, alpha: Fraction) -> None:
    """The closed form equals trace(A_alpha^2) computed in rationals."""

    assert spectra.energy_closed_form(g, alpha) == spectra.exact_trace_of_square(g, alpha)


def test_spectrum_of_path_is_all_tree_eigenvalues() -> None:
    """P3 at 1/3 is triangular with eigenvalues 1/3, 1/3 and 0."""

    report = spectra.spectrum_small(_family("path:3"), F(1, 3))

    assert report.tree_eigenvalues == (F(1, 3), F(1, 3), F(0))
    assert report.quotient == linalg.PolynomialR.from_descending(1)
    assert report.divides
    assert [z.real for z in report.eigenvalues] == pytest.approx([1 / 3, 1 / 3, 0.0])


def test_spectrum_of_three_cycle_is_cube_roots_of_unity() -> None:
    """A_0(C3) has the cube roots of unity as spectrum, 1 first."""

    report = spectra.spectrum_small(_family("cycle:3"), 0)

    assert report.tree_eigenvalues == ()
    assert report.eigenvalues[0] == pytest.approx(1.0 + 0j, abs=1e-10)
    assert all(abs(abs(z) - 1.0) < 1e-10 for z in report.eigenvalues)
    assert spectra.second_moment(report.eigenvalues) == pytest.approx(0j, abs=1e-9)


def test_spectrum_splits_tree_factor(c2_with_pendant: digraph.Digraph) -> None:
    """The pendant sink contributes 0 and the core the roots of x^2 - 3x/2 + 1/4."""

    report = spectra.spectrum_small(c2_with_pendant, F(1, 2))
    expected = [(3.0 + math.sqrt(5.0)) / 4.0, (3.0 - math.sqrt(5.0)) / 4.0, 0.0]

    assert report.tree_eigenvalues == (F(0),)
    assert report.quotient == linalg.PolynomialR.from_descending(1, F(-3, 2), F(1, 4))
    assert [z.real for z in report.eigenvalues] == pytest.approx(expected, abs=1e-10)
    second = spectra.second_moment(report.eigenvalues).real
    energy = float(spectra.energy_closed_form(c2_with_pendant, F(1, 2)))
    assert second == pytest.approx(energy, rel=constants.SPECTRUM_MOMENT_RTOL)


def test_spectrum_size_limit() -> None:
    """More than 16 vertices is refused."""

    with pytest.raises(errors.SizeLimitError):
        spectra.spectrum_small(_family("path:17"), F(1, 2))


__all__ = [
    "test_blocks_follow_topological_order",
    "test_block_certificates_are_block_eigenvalues",
    "test_certificate_encloses_symmetric_radius",
    "test_closed_form_matches_exact_trace",
    "test_combined_certificate_takes_maximum_bounds",
    "test_cycle_radius_is_one",
    "test_energy_examples",
    "test_out_star_radius_is_exact_from_singletons",
    "test_spectrum_of_path_is_all_tree_eigenvalues",
    "test_spectrum_of_three_cycle_is_cube_roots_of_unity",
    "test_spectrum_size_limit",
    "test_spectrum_splits_tree_factor",
    "test_star_hung_on_two_cycle_radius",
    "test_sum_squared_outdegrees_examples",
]
