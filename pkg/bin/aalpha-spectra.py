"""aalpha-spectra: A_alpha spectral radius, energy and law checks for digraphs."""

from __future__ import annotations

import sys

from aalpha_spectra.cli import main

if __name__ == "__main__":
    sys.exit(main())

__description__ = """Command-line launcher for the aalpha-spectra subcommands."""
