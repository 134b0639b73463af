"""Tests for exact matrices, polynomials, root finding and Perron certificates."""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from aalpha_spectra.core import digraph, errors, families, linalg
from tests.strategies import alphas, digraphs, rational_matrices

F = Fraction


def _family(text: str) -> digraph.Digraph:
    return families.generate(families.FamilySpec.parse(text))


def test_a_alpha_of_two_cycle_at_half(c2: digraph.Digraph) -> None:
    """A_{1/2}(C2) has every entry equal to one half."""

    matrix = linalg.build_a_alpha(c2, F(1, 2))

    assert matrix.rows() == ((F(1, 2), F(1, 2)), (F(1, 2), F(1, 2)))


def test_a_alpha_of_single_arc() -> None:
    """The tail of a lone arc carries alpha on the diagonal and 1 - alpha off it."""

    matrix = linalg.build_a_alpha(_family("path:2"), F(1, 3))

    assert matrix.rows() == ((F(1, 3), F(2, 3)), (F(0), F(0)))


def test_a_alpha_at_zero_is_adjacency() -> None:
    """With alpha = 0 only the arcs remain."""

    matrix = linalg.build_a_alpha(_family("outstar:3"), 0)

    assert matrix.rows()[0] == (F(0), F(1), F(1))
    assert matrix.trace() == 0


@pytest.mark.parametrize("alpha", [F(1), F(3, 2), F(-1, 10)])
def test_alpha_outside_unit_interval_is_rejected(alpha: Fraction) -> None:
    """Only 0 <= alpha < 1 is accepted."""

    with pytest.raises(errors.AlphaRangeError):
        linalg.check_alpha(alpha)


@given(digraphs(), alphas)
def test_float_matrix_matches_exact_matrix(g: digraph.Digraph, alpha: Fraction) -> None:
    """The binary64 assembly rounds the exact entries."""

    exact = linalg.build_a_alpha(g, alpha).to_float()

    np.testing.assert_allclose(linalg.build_a_alpha_float(g, alpha), exact, rtol=1e-15)


@given(digraphs())
def test_signless_laplacian_is_twice_a_half(g: digraph.Digraph) -> None:
    """A_{1/2} equals half the signless Laplacian."""

    halved = linalg.build_signless_laplacian(g).scale(F(1, 2))

    assert linalg.build_a_alpha(g, F(1, 2)) == halved


@pytest.mark.parametrize(
    ("matrix", "expected"),
    [
        (linalg.RationalMatrix.identity(2), linalg.PolynomialR.from_descending(1, -2, 1)),
        (
            linalg.build_a_alpha(families.generate(families.FamilySpec.parse("cycle:3")), 0),
            linalg.PolynomialR.from_descending(1, 0, 0, -1),
        ),
        (
            linalg.build_a_alpha(families.generate(families.FamilySpec.parse("cycle:2")), F(1, 2)),
            linalg.PolynomialR.from_descending(1, -1, 0),
        ),
    ],
)
def test_char_poly_examples(matrix: linalg.RationalMatrix, expected: linalg.PolynomialR) -> None:
    """Known characteristic polynomials are reproduced exactly."""

    assert linalg.char_poly(matrix) == expected


@given(rational_matrices(), st.fractions(min_value=-3, max_value=3, max_denominator=5))
def test_char_poly_agrees_with_bareiss(m: linalg.RationalMatrix, x: Fraction) -> None:
    """Evaluating det(xI - M) both ways gives the same rational."""

    shifted = linalg.RationalMatrix.identity(m.order).scale(x) - m

    assert linalg.char_poly(m)(x) == linalg.bareiss_determinant(shifted)


@given(rational_matrices())
def test_bareiss_matches_numpy_determinant(m: linalg.RationalMatrix) -> None:
    """The exact determinant agrees with LAPACK to rounding."""

    exact = float(linalg.bareiss_determinant(m))

    assert exact == pytest.approx(float(np.linalg.det(m.to_float())), rel=1e-9, abs=1e-8)


def test_bareiss_with_zero_pivot() -> None:
    """Row exchanges handle a zero leading entry and flip the sign."""

    m = linalg.RationalMatrix.from_rows([[0, 1], [1, 0]])

    assert linalg.bareiss_determinant(m) == -1
    assert linalg.bareiss_determinant(linalg.RationalMatrix.from_rows([[2, 1], [1, 1]])) == 1


def test_poly_divide_examples() -> None:
    """Long division returns quotient and remainder exactly."""

    p = linalg.PolynomialR.from_descending

    assert linalg.poly_divide(p(1, 0, -1), p(1, -1)) == (p(1, 1), linalg.PolynomialR())
    assert linalg.poly_divide(p(1, -1, 1), p(1, -1)) == (p(1, 0), p(1))
    assert linalg.poly_divide(p(1, 2), p(1, 0, 0)) == (linalg.PolynomialR(), p(1, 2))
    with pytest.raises(ZeroDivisionError):
        linalg.poly_divide(p(1, 2), linalg.PolynomialR())


def test_polynomial_text_and_degree() -> None:
    """Polynomials print highest degree first; zero has degree -1."""

    assert str(linalg.PolynomialR.from_descending(1, -2, 1)) == "x^2 - 2x + 1"
    assert str(linalg.PolynomialR.from_descending(-1, 0, F(1, 2))) == "-x^2 + 1/2"
    assert str(linalg.PolynomialR()) == "0"
    assert linalg.PolynomialR().degree == -1
    assert linalg.PolynomialR.from_roots([1, 1]) == linalg.PolynomialR.from_descending(1, -2, 1)


def test_roots_of_quadratic_and_linear_factors() -> None:
    """x^2 - 1 has roots -1 and 1; zero roots are split off exactly."""

    quadratic = linalg.PolynomialR.from_descending(1, 0, -1)

    roots = sorted(r.real for r in linalg.poly_roots_float(quadratic))
    split = linalg.poly_roots_float(linalg.PolynomialR.from_descending(1, -1, 0))

    assert roots == pytest.approx([-1.0, 1.0], abs=1e-10)
    assert split == [0j, 1 + 0j]
    assert linalg.poly_roots_float(linalg.PolynomialR.from_descending(5)) == []


def test_cube_roots_of_unity() -> None:
    """x^3 - 1 has three unit-modulus roots summing to zero."""

    roots = linalg.poly_roots_float(linalg.PolynomialR.from_descending(1, 0, 0, -1))

    assert len(roots) == 3
    assert all(abs(abs(r) - 1.0) < 1e-10 for r in roots)
    assert abs(sum(roots)) < 1e-10


@given(st.lists(st.integers(min_value=-4, max_value=4), min_size=1, max_size=6, unique=True))
def test_roots_recover_distinct_integer_roots(values: list[int]) -> None:
    """Monic polynomials built from distinct integers give those integers back."""

    roots = linalg.poly_roots_float(linalg.PolynomialR.from_roots(values))

    assert sorted(r.real for r in roots) == pytest.approx(sorted(values), abs=1e-6)
    assert all(abs(r.imag) < 1e-6 for r in roots)


def test_root_finding_limits() -> None:
    """Zero polynomials and degrees above 16 are rejected."""

    with pytest.raises(ValueError):
        linalg.poly_roots_float(linalg.PolynomialR())
    with pytest.raises(errors.SizeLimitError):
        linalg.poly_roots_float(linalg.PolynomialR.from_roots(range(17)))


def test_perron_radius_of_single_entry_is_exact() -> None:
    """A 1x1 block is its own radius with zero width."""

    certificate = linalg.perron_radius(np.array([[1.5]]))

    assert certificate.lower == certificate.upper == 1.5
    assert certificate.iterations == 0
    assert certificate.converged


def test_perron_radius_encloses_closed_form() -> None:
    """[[3/2, 1/2], [1/2, 1/2]] has Perron root 1 + sqrt(2)/2."""

    expected = 1.0 + math.sqrt(2.0) / 2.0

    certificate = linalg.perron_radius(np.array([[1.5, 0.5], [0.5, 0.5]]), block_id=3)

    assert certificate.converged
    assert certificate.lower <= expected <= certificate.upper
    assert certificate.width <= 1e-12 * max(1.0, certificate.upper)
    assert certificate.block_id == 3


def test_perron_radius_reports_cap_without_raising() -> None:
    """Hitting the iteration cap returns an unconverged certificate."""

    certificate = linalg.perron_radius(
        np.array([[1.0, 1.0, 0.0], [0.0, 0.0, 1.0], [1.0, 0.0, 0.0]]), max_iterations=2
    )

    assert not certificate.converged
    assert certificate.iterations == 2
    assert certificate.lower < certificate.upper


def test_perron_radius_rejects_invalid_blocks() -> None:
    """Non-square or negative blocks are rejected."""

    with pytest.raises(ValueError):
        linalg.perron_radius(np.ones((2, 3)))
    with pytest.raises(ValueError):
        linalg.perron_radius(np.array([[0.0, -1.0], [1.0, 0.0]]))


__all__ = [
    "test_a_alpha_at_zero_is_adjacency",
    "test_a_alpha_of_single_arc",
    "test_a_alpha_of_two_cycle_at_half",
    "test_alpha_outside_unit_interval_is_rejected",
    "test_bareiss_matches_numpy_determinant",
    "test_bareiss_with_zero_pivot",
    "test_char_poly_agrees_with_bareiss",
    "test_char_poly_examples",
    "test_cube_roots_of_unity",
    "test_float_matrix_matches_exact_matrix",
    "test_perron_radius_encloses_closed_form",
    "test_perron_radius_of_single_entry_is_exact",
    "test_perron_radius_rejects_invalid_blocks",
    "test_perron_radius_reports_cap_without_raising",
    "test_poly_divide_examples",
    "test_polynomial_text_and_degree",
    "test_root_finding_limits",
    "test_roots_of_quadratic_and_linear_factors",
    "test_roots_recover_distinct_integer_roots",
    "test_signless_laplacian_is_twice_a_half",
]
