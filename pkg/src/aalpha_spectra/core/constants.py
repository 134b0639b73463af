"""Default tolerances, limits and parameter grids."""

from __future__ import annotations

from fractions import Fraction

DEFAULT_TOL = 1e-12
MAX_POWER_ITERATIONS = 100_000
POWER_SHIFT = 1.0

ROOT_MAX_ITERATIONS = 2_000
ROOT_POLISH_SWEEPS = 8
MAX_ROOT_DEGREE = 16

SPECTRUM_MAX_N = 16
DIVISIBILITY_MAX_N = 12
TREE_ENUMERATION_MAX_N = 7
EXHAUSTIVE_MAX_N = 7
STRONG_CORE_MIN_M = 2
STRONG_CORE_MAX_M = 4

ENERGY_TRACE_RTOL = 1e-10
SPECTRUM_MOMENT_RTOL = 1e-6

DEFAULT_VERIFY_BUDGET = 500
DEFAULT_SAMPLE_COUNT = 1_000
MAX_WITNESSES = 50

DEFAULT_ALPHA_GRID: tuple[Fraction, ...] = tuple(Fraction(k, 10) for k in range(10))


__all__ = [
    "DEFAULT_ALPHA_GRID",
    "DEFAULT_SAMPLE_COUNT",
    "DEFAULT_TOL",
    "DEFAULT_VERIFY_BUDGET",
    "DIVISIBILITY_MAX_N",
    "ENERGY_TRACE_RTOL",
    "EXHAUSTIVE_MAX_N",
    "MAX_POWER_ITERATIONS",
    "MAX_ROOT_DEGREE",
    "MAX_WITNESSES",
    "POWER_SHIFT",
    "ROOT_MAX_ITERATIONS",
    "ROOT_POLISH_SWEEPS",
    "SPECTRUM_MAX_N",
    "SPECTRUM_MOMENT_RTOL",
    "STRONG_CORE_MAX_M",
    "STRONG_CORE_MIN_M",
    "TREE_ENUMERATION_MAX_N",
]

__description__ = """
Numeric defaults and supported size ranges for the A_alpha library.
"""
