"""Test package for aalpha_spectra."""

from __future__ import annotations

__description__ = """Unit, property and command-line tests for aalpha_spectra."""
