"""A_alpha spectra package exports."""

from __future__ import annotations

__all__: list[str] = []

__version__ = "0.1.0"

__description__ = """
Root package for A_alpha spectral radius and energy computations on digraphs.
"""
