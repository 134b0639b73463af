"""Helpers for rendering reports as JSON-ready payloads and CSV rows."""

from __future__ import annotations

import csv
import io
import json
import math
import re
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from logging import getLogger
from typing import Any

from aalpha_spectra.core.linalg import PolynomialR
from aalpha_spectra.core.models import (
    AlphaThreshold,
    EnergyReport,
    LawFailure,
    RadiusCertificate,
    ScanReport,
    ScanWitness,
    SpectrumReport,
    TransformOutcome,
    VerificationReport,
)
from aalpha_spectra.core.scc import GnmStructure

logger = getLogger(__name__)

Payload = dict[str, Any]

_FLOAT_SLOT_PREFIX = "\x00float:"
_FLOAT_SLOT = re.compile(r'"\\u0000float:(\d+)"')


def format_rational(value: Fraction | int) -> str:
    """Render a rational exactly as ``num/den``.

    Args:
        value: Rational value.

    Returns:
        ``"num/den"`` in lowest terms; integers keep the ``/1`` denominator.
    """
    fraction = Fraction(value)
    return f"{fraction.numerator}/{fraction.denominator}"


def format_float(value: float) -> str:
    """Render a binary64 value with 17 significant digits.

    Integral values keep a ``.0`` so they read back as floats; non-finite values use the
    JSON module's spelling.

    Args:
        value: The value.

    Returns:
        Text that parses back to exactly ``value``.
    """
    if not math.isfinite(value):
        return json.dumps(value)
    text = format(value, ".17g")
    if text.lstrip("-").isdigit():
        text += ".0"
    return text


def format_complex(value: complex) -> dict[str, float]:
    """Render a complex number as ``{"re": ..., "im": ...}``."""
    return {"re": value.real, "im": value.imag}


def format_polynomial(p: PolynomialR) -> list[str]:
    """Coefficients in ascending degree as exact ``num/den`` strings."""
    return [format_rational(c) for c in p.coefficients]


def certificate_payload(c: RadiusCertificate) -> Payload:
    """Serialize a radius certificate with its enclosure and block provenance.

    Args:
        c: The certificate.

    Returns:
        Payload with ``estimate``, ``enclosure``, ``width``, ``iterations``, ``converged``
        and ``block``.
    """
    return {
        "estimate": c.estimate,
        "enclosure": [c.lower, c.upper],
        "width": c.width,
        "iterations": c.iterations,
        "converged": c.converged,
        "block": {"id": c.block_id, "vertices": list(c.block_vertices)},
    }


def energy_payload(report: EnergyReport) -> Payload:
    """Serialize an energy report.

    Args:
        report: The report.

    Returns:
        Exact terms as ``num/den`` plus the float trace check.
    """
    return {
        "energy": format_rational(report.closed_form),
        "energy_float": float(report.closed_form),
        "degree_term": format_rational(report.degree_term),
        "walk_term": format_rational(report.walk_term),
        "trace_check": report.trace_check,
        "trace_error": report.trace_error,
    }


def spectrum_payload(report: SpectrumReport) -> Payload:
    """Serialize a small-digraph spectrum."""
    return {
        "eigenvalues": [format_complex(z) for z in report.eigenvalues],
        "tree_eigenvalues": [format_rational(v) for v in report.tree_eigenvalues],
        "char_poly": format_polynomial(report.char_poly),
        "quotient": format_polynomial(report.quotient),
        "divides": report.divides,
        "blocks": [certificate_payload(c) for c in report.block_radii],
    }


def threshold_payload(threshold: AlphaThreshold) -> Payload:
    """Serialize an alpha threshold."""
    return {"value": format_rational(threshold.value), "degenerate": threshold.degenerate}


def structure_payload(s: GnmStructure) -> Payload:
    """Serialize the (n, m, n_i) shape of a G_n^m member.

    Args:
        s: The structure.

    Returns:
        Payload with ``n``, ``m``, ``core``, ``tree_sizes`` and ``v1``.
    """
    return {
        "n": s.n,
        "m": s.m,
        "core": list(s.core_vertices),
        "tree_sizes": list(s.tree_sizes),
        "v1": s.v1,
    }


def transform_payload(outcome: TransformOutcome, threshold: AlphaThreshold) -> Payload:
    """Serialize a rewiring with the input's threshold."""
    return {
        "kind": outcome.kind.value,
        "structure": structure_payload(outcome.structure),
        "arcs": [list(arc) for arc in outcome.result.arcs],
        "threshold": threshold_payload(threshold),
    }


def _optional_rational(value: Fraction | None) -> str | None:
    return None if value is None else format_rational(value)


def failure_payload(failure: LawFailure) -> Payload:
    """Serialize one law failure."""
    return {
        "instance": failure.instance,
        "alpha": _optional_rational(failure.alpha),
        "expected": failure.expected,
        "actual": failure.actual,
        "detail": failure.detail,
    }


def verification_payload(report: VerificationReport) -> Payload:
    """Serialize a law verification report.

    Args:
        report: The report.

    Returns:
        Payload with the pass flag, counts and every failure.
    """
    return {
        "law": report.law_id,
        "passed": report.passed,
        "cases_checked": report.cases_checked,
        "skipped": report.skipped,
        "unconverged": report.unconverged,
        "failures": [failure_payload(f) for f in report.failures],
    }


def witness_payload(witness: ScanWitness) -> Payload:
    """Serialize a scan witness."""
    return {
        "instance": witness.instance,
        "alpha": format_rational(witness.alpha),
        "radius": certificate_payload(witness.radius),
        "radius_double_prime": certificate_payload(witness.radius_double_prime),
        "gap": witness.gap,
        "threshold": threshold_payload(witness.threshold),
    }


def scan_payload(report: ScanReport) -> Payload:
    """Serialize a conjecture scan report.

    Args:
        report: The report.

    Returns:
        Payload with counts, counterexamples and the capped near-miss list.
    """
    return {
        "n": report.n,
        "m": report.m,
        "mode": report.mode.value,
        "passed": report.passed,
        "instances_checked": report.instances_checked,
        "cases_checked": report.cases_checked,
        "below_threshold": report.below_threshold,
        "unconverged": report.unconverged,
        "truncated": report.truncated,
        "near_miss_count": report.near_miss_count,
        "counterexamples": [witness_payload(w) for w in report.counterexamples],
        "near_misses": [witness_payload(w) for w in report.near_misses],
    }


def build_report(
    command: str,
    version: str,
    input_description: str,
    result: Payload,
    *,
    alpha: Fraction | Sequence[Fraction] | None = None,
    tolerances: Mapping[str, float] | None = None,
    seed: int | None = None,
) -> Payload:
    """Wrap a command result in the top-level report object.

    Args:
        command: Subcommand name.
        version: Program version.
        input_description: Input file path, family specification or parameter summary.
        result: Command-specific payload.
        alpha: Single parameter or grid, rendered as ``num/den``.
        tolerances: Named tolerances in effect.
        seed: Sampling seed, when one applies.

    Returns:
        Ordered payload with ``command``, ``version``, ``input``, ``alpha``, ``result``,
        ``tolerances`` and ``seed``.
    """
    rendered: str | list[str] | None
    if alpha is None:
        rendered = None
    elif isinstance(alpha, Fraction):
        rendered = format_rational(alpha)
    else:
        rendered = [format_rational(a) for a in alpha]
    return {
        "command": command,
        "version": version,
        "input": input_description,
        "alpha": rendered,
        "result": result,
        "tolerances": dict(tolerances or {}),
        "seed": seed,
    }


def _slot_floats(value: Any, rendered: list[str]) -> Any:
    if isinstance(value, float) and math.isfinite(value):
        rendered.append(format_float(value))
        return f"{_FLOAT_SLOT_PREFIX}{len(rendered) - 1}"
    if isinstance(value, Mapping):
        return {key: _slot_floats(item, rendered) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_slot_floats(item, rendered) for item in value]
    return value


def dump_json(payload: Payload) -> str:
    """Render a payload as indented JSON with a trailing newline.

    Floats are written with 17 significant digits rather than the shortest round-trip form.
    """
    rendered: list[str] = []
    text = json.dumps(_slot_floats(payload, rendered), indent=2)
    return _FLOAT_SLOT.sub(lambda match: rendered[int(match.group(1))], text) + "\n"


FAILURE_FIELDS = ("law", "instance", "alpha", "expected", "actual", "detail")
WITNESS_FIELDS = ("kind", "instance", "alpha", "radius_lower", "radius_upper", "gap", "threshold")


def _csv(fields: Sequence[str], rows: Iterable[Mapping[str, object]]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(fields), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def verification_csv(report: VerificationReport) -> str:
    """One CSV row per failure of a law.

    Args:
        report: The report.

    Returns:
        CSV text with a header row; instances keep their embedded newlines, quoted.
    """
    rows = ({"law": report.law_id, **failure_payload(f)} for f in report.failures)
    return _csv(FAILURE_FIELDS, rows)


def scan_csv(report: ScanReport) -> str:
    """One CSV row per counterexample and retained near miss.

    Args:
        report: The report.

    Returns:
        CSV text with a header row.
    """
    labelled = [("counterexample", w) for w in report.counterexamples]
    labelled += [("near-miss", w) for w in report.near_misses]
    rows = (
        {
            "kind": kind,
            "instance": w.instance,
            "alpha": format_rational(w.alpha),
            "radius_lower": format_float(w.radius.lower),
            "radius_upper": format_float(w.radius.upper),
            "gap": format_float(w.gap),
            "threshold": format_rational(w.threshold.value),
        }
        for kind, w in labelled
    )
    return _csv(WITNESS_FIELDS, rows)


logger.debug("Formatting helpers module initialized.")

__all__ = [
    "FAILURE_FIELDS",
    "WITNESS_FIELDS",
    "Payload",
    "build_report",
    "certificate_payload",
    "dump_json",
    "energy_payload",
    "failure_payload",
    "format_complex",
    "format_float",
    "format_polynomial",
    "format_rational",
    "scan_csv",
    "scan_payload",
    "spectrum_payload",
    "structure_payload",
    "threshold_payload",
    "transform_payload",
    "verification_csv",
    "verification_payload",
    "witness_payload",
]

__description__ = """
Exact rational rendering and JSON/CSV payload builders for the command-line reports.
"""
