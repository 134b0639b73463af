"""Shared core library for A_alpha spectra of digraphs."""

from __future__ import annotations

from .digraph import Digraph, closed_walks_2, new_digraph
from .errors import AalphaError, ConvergenceError, DigraphFileError, NotMemberError
from .families import FamilyKind, FamilySpec, HungTree, generate, hang_trees
from .laws import LawId, verify_law
from .models import (
    AlphaThreshold,
    EnergyReport,
    RadiusCertificate,
    ScanMode,
    ScanReport,
    SpectrumReport,
    TransformKind,
    TransformOutcome,
    VerificationReport,
)
from .scc import GnmStructure, NotMember, classify_gnm, require_gnm, tarjan_scc
from .search import enumerate_gnm, scan_conjecture_2_10
from .serialization import format_digraph, parse_digraph
from .spectra import energy, energy_closed_form, spectral_radius, spectrum_small
from .transforms import alpha_threshold, transform

__all__: list[str] = [
    "AalphaError",
    "AlphaThreshold",
    "ConvergenceError",
    "Digraph",
    "DigraphFileError",
    "EnergyReport",
    "FamilyKind",
    "FamilySpec",
    "GnmStructure",
    "HungTree",
    "LawId",
    "NotMember",
    "NotMemberError",
    "RadiusCertificate",
    "ScanMode",
    "ScanReport",
    "SpectrumReport",
    "TransformKind",
    "TransformOutcome",
    "VerificationReport",
    "alpha_threshold",
    "classify_gnm",
    "closed_walks_2",
    "energy",
    "energy_closed_form",
    "enumerate_gnm",
    "format_digraph",
    "generate",
    "hang_trees",
    "new_digraph",
    "parse_digraph",
    "require_gnm",
    "scan_conjecture_2_10",
    "spectral_radius",
    "spectrum_small",
    "tarjan_scc",
    "transform",
    "verify_law",
]

__description__ = """
Digraph models, exact and certified A_alpha computations, rewirings, laws and searches shared by
the command-line interface and tests.
"""
