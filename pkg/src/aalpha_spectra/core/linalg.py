"""Exact and floating-point dense linear algebra for A_alpha matrices."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from logging import getLogger
from math import lcm

import numpy as np
import numpy.typing as npt

from .constants import (
    DEFAULT_TOL,
    MAX_POWER_ITERATIONS,
    MAX_ROOT_DEGREE,
    POWER_SHIFT,
    ROOT_MAX_ITERATIONS,
    ROOT_POLISH_SWEEPS,
)
from .digraph import Digraph
from .errors import AlphaRangeError, ConvergenceError, SizeLimitError
from .models import RadiusCertificate

logger = getLogger(__name__)

FloatMatrix = npt.NDArray[np.float64]
Scalar = Fraction | int

_EPS = float(np.finfo(np.float64).eps)


def check_alpha(alpha: Scalar) -> Fraction:
    """Validate the interpolation parameter.

    Args:
        alpha: Candidate value.

    Returns:
        ``alpha`` as a ``Fraction``.

    Raises:
        AlphaRangeError: If ``alpha`` is outside ``[0, 1)``.
    """
    value = Fraction(alpha)
    if not 0 <= value < 1:
        raise AlphaRangeError(f"alpha must lie in [0, 1), got {value}")
    return value


@dataclass(frozen=True)
class RationalMatrix:
    """Dense square matrix over the rationals, stored row-major.

    Attributes:
        order: Number of rows and columns.
        entries: ``order**2`` entries, row by row.
    """

    order: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        """Check the shape and normalise entries to ``Fraction``.

        Raises:
            ValueError: If the entry count is not ``order**2``.
        """
        if self.order < 1 or len(self.entries) != self.order * self.order:
            raise ValueError(f"expected {self.order}x{self.order} entries, got {len(self.entries)}")
        object.__setattr__(self, "entries", tuple(Fraction(x) for x in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> RationalMatrix:
        """Build a matrix from nested rows.

        Args:
            rows: Square table of rationals or integers.

        Returns:
            The matrix.

        Raises:
            ValueError: If the table is not square.
        """
        order = len(rows)
        if any(len(row) != order for row in rows):
            raise ValueError("matrix rows must form a square table")
        return cls(order, tuple(Fraction(x) for row in rows for x in row))

    @classmethod
    def identity(cls, order: int) -> RationalMatrix:
        """Identity matrix of the given order."""
        return cls(order, tuple(Fraction(int(i == j)) for i in range(order) for j in range(order)))

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        """Entry at ``(row, column)``."""
        i, j = key
        return self.entries[i * self.order + j]

    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        """Entries as a tuple of rows."""
        k = self.order
        return tuple(self.entries[i * k : (i + 1) * k] for i in range(k))

    def _check_same_order(self, other: RationalMatrix) -> None:
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: RationalMatrix) -> RationalMatrix:
        """Entrywise sum."""
        self._check_same_order(other)
        return RationalMatrix(self.order, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        """Entrywise difference."""
        self._check_same_order(other)
        return RationalMatrix(self.order, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        """Matrix product."""
        self._check_same_order(other)
        left, right = self.rows(), other.rows()
        columns = tuple(zip(*right))
        return RationalMatrix(
            self.order,
            tuple(
                sum((a * b for a, b in zip(row, col)), Fraction(0))
                for row in left
                for col in columns
            ),
        )

    def scale(self, factor: Scalar) -> RationalMatrix:
        """Multiply every entry by ``factor``."""
        return RationalMatrix(self.order, tuple(factor * x for x in self.entries))

    def trace(self) -> Fraction:
        """Sum of the diagonal."""
        return sum((self[i, i] for i in range(self.order)), Fraction(0))

    def principal_submatrix(self, indices: Sequence[int]) -> RationalMatrix:
        """Rows and columns restricted to ``indices``, in the given order."""
        return RationalMatrix(len(indices), tuple(self[i, j] for i in indices for j in indices))

    def is_nonnegative(self) -> bool:
        """Whether every entry is at least zero."""
        return all(x >= 0 for x in self.entries)

    def common_denominator(self) -> int:
        """Least common multiple of all entry denominators."""
        return lcm(*(x.denominator for x in self.entries))

    def to_float(self) -> FloatMatrix:
        """Convert to a binary64 array."""
        return np.array([float(x) for x in self.entries], dtype=np.float64).reshape(
            self.order, self.order
        )

    def scaled_integer_rows(self, scale: int) -> list[list[int]]:
        """Rows of ``scale * self``; ``scale`` must clear every denominator."""
        return [[int(x * scale) for x in row] for row in self.rows()]


@dataclass(frozen=True)
class PolynomialR:
    """Polynomial with rational coefficients.

    Coefficients are stored lowest degree first with trailing zeros removed, so the zero
    polynomial is the empty tuple and equality is structural.

    Attributes:
        coefficients: ``c_0, c_1, ..., c_d``.
    """

    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        """Normalise to ``Fraction`` coefficients without trailing zeros."""
        coeffs = [Fraction(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def from_descending(cls, *coefficients: Scalar) -> PolynomialR:
        """Build from coefficients written highest degree first, e.g. ``(1, 0, -1)``."""
        return cls(tuple(Fraction(c) for c in reversed(coefficients)))

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> PolynomialR:
        """Monic polynomial ``prod(x - r)``; the empty product is 1."""
        result = cls((Fraction(1),))
        for root in roots:
            result = result * cls((-Fraction(root), Fraction(1)))
        return result

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        """Whether this is the zero polynomial."""
        return not self.coefficients

    @property
    def leading(self) -> Fraction:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def __call__(self, x: Scalar) -> Fraction:
        """Evaluate exactly by Horner's rule."""
        value = Fraction(0)
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def __neg__(self) -> PolynomialR:
        """Additive inverse."""
        return PolynomialR(tuple(-c for c in self.coefficients))

    def __add__(self, other: PolynomialR) -> PolynomialR:
        """Sum."""
        size = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (Fraction(0),) * (size - len(self.coefficients))
        b = other.coefficients + (Fraction(0),) * (size - len(other.coefficients))
        return PolynomialR(tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other: PolynomialR) -> PolynomialR:
        """Difference."""
        return self + (-other)

    def __mul__(self, other: PolynomialR) -> PolynomialR:
        """Product."""
        if self.is_zero or other.is_zero:
            return PolynomialR()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return PolynomialR(tuple(out))

    def __str__(self) -> str:
        """Human-readable form such as ``x^2 - 2x + 1``."""
        if self.is_zero:
            return "0"
        terms: list[str] = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                factor = "" if magnitude == 1 else str(magnitude)
                body = f"{factor}x" if power == 1 else f"{factor}x^{power}"
            sign = "-" if c < 0 else "+"
            terms.append(f"{sign} {body}" if terms else (f"-{body}" if c < 0 else body))
        return " ".join(terms)


def build_a_alpha(g: Digraph, alpha: Scalar) -> RationalMatrix:
    """Assemble ``A_alpha(G) = alpha * D+ + (1 - alpha) * A`` exactly.

    Args:
        g: The digraph.
        alpha: Interpolation parameter in ``[0, 1)``.

    Returns:
        The ``n x n`` rational matrix.

    Raises:
        AlphaRangeError: If ``alpha`` is outside ``[0, 1)``.
    """
    a = check_alpha(alpha)
    n = g.n
    entries = [Fraction(0)] * (n * n)
    for v in range(n):
        entries[v * n + v] = a * g.out_deg[v]
    off = 1 - a
    for tail, head in g.arcs:
        entries[tail * n + head] = off
    return RationalMatrix(n, tuple(entries))


def build_a_alpha_float(
    g: Digraph,
    alpha: Scalar,
    vertices: Sequence[int] | None = None,
) -> FloatMatrix:
    """Assemble ``A_alpha`` (or one principal block of it) in binary64.

    Diagonal entries always use outdegrees in the whole digraph, so a block for a strong
    component carries the arcs leaving the component on its diagonal.

    Args:
        g: The digraph.
        alpha: Interpolation parameter in ``[0, 1)``.
        vertices: Rows and columns to keep; all vertices when ``None``.

    Returns:
        Square float array.
    """
    a = check_alpha(alpha)
    keep = list(range(g.n)) if vertices is None else list(vertices)
    position = {v: i for i, v in enumerate(keep)}
    block = np.zeros((len(keep), len(keep)), dtype=np.float64)
    off = float(1 - a)
    for i, v in enumerate(keep):
        block[i, i] = float(a * g.out_deg[v])
        for w in g.out_neighbors[v]:
            j = position.get(w)
            if j is not None:
                block[i, j] = off
    return block


def build_signless_laplacian(g: Digraph) -> RationalMatrix:
    """Assemble the signless Laplacian ``Q = D+ + A``; ``A_{1/2} = Q / 2``.

    Args:
        g: The digraph.

    Returns:
        Integer-valued rational matrix.
    """
    n = g.n
    entries = [Fraction(0)] * (n * n)
    for v in range(n):
        entries[v * n + v] = Fraction(g.out_deg[v])
    for tail, head in g.arcs:
        entries[tail * n + head] = Fraction(1)
    return RationalMatrix(n, tuple(entries))


def _bareiss(rows: list[list[int]]) -> int:
    n = len(rows)
    sign = 1
    previous = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Exact division: each intermediate is an integer minor.
                rows[i][j] = (pivot * rows[i][j] - rows[i][k] * rows[k][j]) // previous
        previous = pivot
    return sign * rows[n - 1][n - 1]


def bareiss_determinant(m: RationalMatrix) -> Fraction:
    """Determinant by fraction-free elimination on the integer scaling of ``m``.

    Args:
        m: Square rational matrix.

    Returns:
        ``det(m)`` exactly.
    """
    scale = m.common_denominator()
    return Fraction(_bareiss(m.scaled_integer_rows(scale)), scale**m.order)


def _integer_faddeev_leverrier(rows: list[list[int]]) -> list[int]:
    """Characteristic coefficients ``c_0..c_n`` of an integer matrix, lowest degree first."""
    n = len(rows)
    b = np.array(rows, dtype=object)
    eye = np.zeros((n, n), dtype=object)
    np.fill_diagonal(eye, 1)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    current = np.zeros((n, n), dtype=object)
    for k in range(1, n + 1):
        current = b @ current + coeffs[n - k + 1] * eye
        quotient, remainder = divmod(-int(np.trace(b @ current)), k)
        if remainder:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs[n - k] = quotient
    return coeffs


def char_poly(m: RationalMatrix) -> PolynomialR:
    """Characteristic polynomial ``det(xI - m)``.

    The matrix is scaled by the common denominator ``L`` of its entries, the integer
    Faddeev-LeVerrier recurrence runs with exact integer divisions, and coefficient ``j`` is
    divided by ``L^(n-j)`` afterwards.

    Args:
        m: Square rational matrix.

    Returns:
        The monic polynomial of degree ``m.order``.
    """
    scale = m.common_denominator()
    integer = _integer_faddeev_leverrier(m.scaled_integer_rows(scale))
    n = m.order
    return PolynomialR(tuple(Fraction(c, scale ** (n - j)) for j, c in enumerate(integer)))


def poly_divide(num: PolynomialR, den: PolynomialR) -> tuple[PolynomialR, PolynomialR]:
    """Exact polynomial long division.

    Args:
        num: Dividend.
        den: Divisor.

    Returns:
        ``(quotient, remainder)`` with ``num == den * quotient + remainder`` and
        ``remainder.degree < den.degree``.

    Raises:
        ZeroDivisionError: If ``den`` is the zero polynomial.
    """
    if den.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if num.degree < den.degree:
        return PolynomialR(), num
    rest = list(num.coefficients)
    lead = den.leading
    shift_max = num.degree - den.degree
    quotient = [Fraction(0)] * (shift_max + 1)
    for shift in range(shift_max, -1, -1):
        factor = rest[shift + den.degree] / lead
        quotient[shift] = factor
        if factor:
            for j, c in enumerate(den.coefficients):
                rest[shift + j] -= factor * c
    return PolynomialR(tuple(quotient)), PolynomialR(tuple(rest[: den.degree]))


def _residuals(monic: FloatMatrix, z: npt.NDArray[np.complex128]) -> npt.NDArray[np.float64]:
    return np.abs(np.polyval(monic, z))


def _residual_bound(
    monic: FloatMatrix,
    z: npt.NDArray[np.complex128],
    tol: float,
) -> npt.NDArray[np.float64]:
    # Horner rounding floor: a residual below it cannot be improved in binary64.
    floor = 64.0 * _EPS * np.polyval(np.abs(monic), np.abs(z))
    return np.maximum(tol * (1.0 + np.max(np.abs(monic))), floor)


def _aberth(monic: FloatMatrix, tol: float, max_iterations: int) -> list[complex]:
    degree = len(monic) - 1
    derivative = np.polyder(monic)
    radius = max(abs(float(monic[-1])) ** (1.0 / degree), 1e-3)
    k = np.arange(degree)
    z = radius * (1.0 + 0.05 * k / degree) * np.exp(1j * (2.0 * np.pi * k / degree + 0.4))
    polished = 0
    for iteration in range(1, max_iterations + 1):
        with np.errstate(all="ignore"):
            newton = np.polyval(monic, z) / np.polyval(derivative, z)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            repulsion = (1.0 / diff).sum(axis=1) - 1.0
            step = newton / (1.0 - newton * repulsion)
        step = np.where(np.isfinite(step), step, 1e-8 * radius)
        z = z - step
        if np.all(_residuals(monic, z) <= _residual_bound(monic, z, tol)):
            polished += 1
            settled = np.max(np.abs(step)) <= 4.0 * _EPS * max(1.0, float(np.max(np.abs(z))))
            if settled or polished > ROOT_POLISH_SWEEPS:
                logger.debug("Aberth iteration settled after %d sweeps", iteration)
                return [complex(root) for root in z]
    raise ConvergenceError(
        f"root iteration did not converge within {max_iterations} sweeps",
        residuals=[float(r) for r in _residuals(monic, z)],
    )


def poly_roots_float(
    p: PolynomialR,
    tol: float = DEFAULT_TOL,
    max_iterations: int = ROOT_MAX_ITERATIONS,
) -> list[complex]:
    """All complex roots of a polynomial by Aberth-Ehrlich simultaneous iteration.

    Zero roots are split off exactly before iterating. The remaining roots satisfy
    ``|q(r)| <= tol * (1 + max|q_i|)`` on the monic cofactor ``q``, relaxed to the binary64
    evaluation floor when that is larger.

    Args:
        p: Nonzero polynomial of degree at most 16.
        tol: Residual tolerance.
        max_iterations: Sweep cap.

    Returns:
        ``p.degree`` roots, zero roots first.

    Raises:
        ValueError: If ``p`` is the zero polynomial.
        SizeLimitError: If the degree exceeds the supported maximum.
        ConvergenceError: If the iteration does not settle; residuals are attached.
    """
    if p.is_zero:
        raise ValueError("the zero polynomial has no finite root multiset")
    if p.degree > MAX_ROOT_DEGREE:
        raise SizeLimitError(f"root finding supports degree <= {MAX_ROOT_DEGREE}, got {p.degree}")
    zeros = next(i for i, c in enumerate(p.coefficients) if c != 0)
    reduced = p.coefficients[zeros:]
    roots: list[complex] = [0j] * zeros
    degree = len(reduced) - 1
    if degree == 0:
        return roots
    if degree == 1:
        return [*roots, complex(float(-reduced[0] / reduced[1]))]
    lead = reduced[-1]
    monic = np.array([float(c / lead) for c in reversed(reduced)], dtype=np.float64)
    return roots + _aberth(monic, tol, max_iterations)


def perron_radius(
    block: FloatMatrix,
    tol: float = DEFAULT_TOL,
    max_iterations: int = MAX_POWER_ITERATIONS,
    block_id: int = 0,
    block_vertices: Sequence[int] = (),
) -> RadiusCertificate:
    """Certified Perron root of a nonnegative irreducible block.

    Power iteration runs on ``M + I`` from the all-ones vector. Every step yields
    Collatz-Wielandt bounds ``min (Mx)_i / x_i <= rho <= max (Mx)_i / x_i``; the tightest
    bounds seen so far, widened by a rounding allowance, form the enclosure.

    Args:
        block: Square nonnegative irreducible matrix.
        tol: Stop once ``upper - lower <= tol * max(1, upper)``.
        max_iterations: Iteration cap.
        block_id: Component id recorded in the certificate.
        block_vertices: Component vertices recorded in the certificate.

    Returns:
        The certificate; ``converged`` is False when the cap was reached.

    Raises:
        ValueError: If the block is not square or has negative entries.
    """
    matrix = np.asarray(block, dtype=np.float64)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError("block must be a square matrix")
    vertices = tuple(block_vertices)
    order = matrix.shape[0]
    if order == 1:
        value = float(matrix[0, 0])
        return RadiusCertificate(value, value, value, 0, block_id, True, vertices)
    if np.any(matrix < 0):
        raise ValueError("block must be entrywise nonnegative")

    shifted = matrix + POWER_SHIFT * np.identity(order)
    x = np.ones(order)
    lower, upper = -np.inf, np.inf
    converged = False
    iteration = 0
    for iteration in range(1, max_iterations + 1):
        y = shifted @ x
        ratios = y / x
        high = float(ratios.max())
        slack = 4.0 * (order + 2) * _EPS * max(1.0, high)
        lower = max(lower, float(ratios.min()) - POWER_SHIFT - slack)
        upper = min(upper, high - POWER_SHIFT + slack)
        if upper - lower <= tol * max(1.0, upper):
            converged = True
            break
        x = y / y.max()
    if not converged:
        logger.warning(
            "Power iteration hit the %d-step cap on block %d (width %.3e)",
            max_iterations,
            block_id,
            upper - lower,
        )
    return RadiusCertificate(
        estimate=(lower + upper) / 2.0,
        lower=lower,
        upper=upper,
        iterations=iteration,
        block_id=block_id,
        converged=converged,
        block_vertices=vertices,
    )


__all__ = [
    "FloatMatrix",
    "PolynomialR",
    "RationalMatrix",
    "bareiss_determinant",
    "build_a_alpha",
    "build_a_alpha_float",
    "build_signless_laplacian",
    "char_poly",
    "check_alpha",
    "perron_radius",
    "poly_divide",
    "poly_roots_float",
]

__description__ = """
Rational matrices, Bareiss determinants, Faddeev-LeVerrier polynomials, Aberth roots and
certified power iteration.
"""
