"""Command-line interface for A_alpha spectra, rewirings, laws and scans."""

from __future__ import annotations

import argparse
import re
import sys
from collections.abc import Callable
from fractions import Fraction
from importlib.metadata import PackageNotFoundError, version
from logging import basicConfig, getLogger
from pathlib import Path

from aalpha_spectra import __version__
from aalpha_spectra.core.constants import (
    DEFAULT_ALPHA_GRID,
    DEFAULT_SAMPLE_COUNT,
    DEFAULT_TOL,
    DEFAULT_VERIFY_BUDGET,
)
from aalpha_spectra.core.digraph import Digraph
from aalpha_spectra.core.errors import (
    AalphaError,
    ConvergenceError,
    DigraphFileError,
    FamilySpecError,
)
from aalpha_spectra.core.families import FamilySpec, generate
from aalpha_spectra.core.laws import LawId, verify_law
from aalpha_spectra.core.models import ScanMode, TransformKind
from aalpha_spectra.core.scc import require_gnm
from aalpha_spectra.core.search import scan_conjecture_2_10
from aalpha_spectra.core.serialization import format_digraph, parse_digraph
from aalpha_spectra.core.spectra import (
    combine_certificates,
    energy,
    spectral_radius_blocks,
    spectrum_small,
)
from aalpha_spectra.core.transforms import alpha_threshold, transform
from aalpha_spectra.formatting import (
    Payload,
    build_report,
    certificate_payload,
    dump_json,
    energy_payload,
    scan_csv,
    scan_payload,
    spectrum_payload,
    structure_payload,
    transform_payload,
    verification_csv,
    verification_payload,
)

logger = getLogger(__name__)

EXIT_OK = 0
EXIT_LAW_FAILURE = 1
EXIT_PARSE_ERROR = 2
EXIT_DOMAIN_ERROR = 3
EXIT_NUMERIC_ERROR = 4

_RATIONAL = re.compile(r"^\d+/\d+$")
_DECIMAL = re.compile(r"^\d+(\.\d{1,6})?$")


def _get_distribution_version() -> str:
    try:
        return version("aalpha-spectra")
    except PackageNotFoundError:
        logger.debug("Unable to determine installed version.")
        return __version__


def parse_alpha(text: str) -> Fraction:
    """Parse an exact interpolation parameter.

    Args:
        text: ``a/b`` or a decimal with at most six places, e.g. ``0.25``.

    Returns:
        The parameter as a fraction; range checks happen in the library.

    Raises:
        argparse.ArgumentTypeError: If the text is not in either form.
    """
    value = text.strip()
    if _RATIONAL.match(value):
        numerator, denominator = value.split("/")
        if int(denominator) == 0:
            raise argparse.ArgumentTypeError(f"zero denominator in alpha {text!r}")
        return Fraction(int(numerator), int(denominator))
    if _DECIMAL.match(value):
        return Fraction(value)
    raise argparse.ArgumentTypeError(f"alpha must be a/b or a decimal with <= 6 places: {text!r}")


def parse_alpha_grid(text: str) -> tuple[Fraction, ...]:
    """Parse a comma-separated list of parameters.

    Args:
        text: For example ``0,1/2,0.9``.

    Returns:
        The parameters in the given order.

    Raises:
        argparse.ArgumentTypeError: If any entry is malformed or the list is empty.
    """
    parts = [part for part in text.split(",") if part.strip()]
    if not parts:
        raise argparse.ArgumentTypeError("alpha grid is empty")
    return tuple(parse_alpha(part) for part in parts)


def _add_input_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", nargs="?", help="Digraph file ('n e' header, then arcs).")
    parser.add_argument("--family", help="Named family such as cycle:5 or bispindle:1,2;3.")


def _add_output_arguments(parser: argparse.ArgumentParser, *, csv: bool = False) -> None:
    parser.add_argument("--output", type=Path, help="Write the report here instead of stdout.")
    if csv:
        parser.add_argument(
            "--format",
            choices=("json", "csv"),
            default="json",
            help="Report format; CSV lists failures or witnesses.",
        )


def _create_parser() -> argparse.ArgumentParser:
    """Build the CLI argument parser.

    Returns:
        A parser with one subcommand per operation.
    """
    parser = argparse.ArgumentParser(
        prog="aalpha-spectra",
        description="A_alpha spectral radius and energy of digraphs, with law checks.",
    )
    parser.add_argument(
        "--version",
        "-V",
        action="version",
        version=_get_distribution_version(),
        help="Show version information and exit.",
    )
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
        help="Logging level for messages on stderr.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    radius = commands.add_parser("radius", help="Certified spectral radius.")
    _add_input_arguments(radius)
    radius.add_argument("--alpha", type=parse_alpha, required=True)
    radius.add_argument("--tol", type=float, default=DEFAULT_TOL)
    _add_output_arguments(radius)

    energy_cmd = commands.add_parser("energy", help="Exact A_alpha energy.")
    _add_input_arguments(energy_cmd)
    energy_cmd.add_argument("--alpha", type=parse_alpha, required=True)
    _add_output_arguments(energy_cmd)

    spectrum = commands.add_parser("spectrum", help="Full spectrum of a small digraph.")
    _add_input_arguments(spectrum)
    spectrum.add_argument("--alpha", type=parse_alpha, required=True)
    spectrum.add_argument("--tol", type=float, default=DEFAULT_TOL)
    _add_output_arguments(spectrum)

    transform_cmd = commands.add_parser("transform", help="Rewire the hung trees.")
    _add_input_arguments(transform_cmd)
    transform_cmd.add_argument(
        "--kind", choices=[kind.value for kind in TransformKind], required=True
    )
    transform_cmd.add_argument("--out", type=Path, help="Write the rewired digraph here.")
    _add_output_arguments(transform_cmd)

    verify = commands.add_parser("verify", help="Check one executable law.")
    verify.add_argument("--law", choices=[law.value for law in LawId], required=True)
    verify.add_argument("--max-n", type=int, default=5)
    verify.add_argument("--alpha-grid", type=parse_alpha_grid, default=DEFAULT_ALPHA_GRID)
    verify.add_argument("--tol", type=float, default=DEFAULT_TOL)
    verify.add_argument("--budget", type=int, default=DEFAULT_VERIFY_BUDGET)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--jobs", type=int, default=1)
    _add_output_arguments(verify, csv=True)

    scan = commands.add_parser("scan", help="Search G_n^m for radius counterexamples.")
    scan.add_argument("--n", type=int, required=True)
    scan.add_argument("--m", type=int, required=True)
    scan.add_argument(
        "--mode", choices=[mode.value for mode in ScanMode], default=ScanMode.EXHAUSTIVE.value
    )
    scan.add_argument("--alpha-grid", type=parse_alpha_grid, default=DEFAULT_ALPHA_GRID)
    scan.add_argument("--tol", type=float, default=DEFAULT_TOL)
    scan.add_argument("--seed", type=int, default=None)
    scan.add_argument("--count", type=int, default=DEFAULT_SAMPLE_COUNT)
    scan.add_argument("--budget", type=int, default=None)
    scan.add_argument("--jobs", type=int, default=1)
    _add_output_arguments(scan, csv=True)
    return parser


def _load_input(args: argparse.Namespace) -> tuple[Digraph, str]:
    if args.family is not None:
        spec = FamilySpec.parse(args.family)
        return generate(spec), str(spec)
    return parse_digraph(Path(args.file).read_text(encoding="utf-8")), str(args.file)


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.output is not None:
        args.output.write_text(text, encoding="utf-8")
        logger.info("Wrote report to %s", args.output)
    else:
        sys.stdout.write(text)


def _cmd_radius(args: argparse.Namespace) -> int:
    g, source = _load_input(args)
    blocks = spectral_radius_blocks(g, args.alpha, args.tol)
    certificate = combine_certificates(blocks)
    result = certificate_payload(certificate)
    result["blocks"] = [certificate_payload(c) for c in blocks]
    report = build_report(
        "radius",
        _get_distribution_version(),
        source,
        result,
        alpha=args.alpha,
        tolerances={"tol": args.tol},
    )
    _emit(args, dump_json(report))
    if not certificate.converged:
        logger.warning("Radius certificate did not converge; report is partial")
        return EXIT_NUMERIC_ERROR
    return EXIT_OK


def _cmd_energy(args: argparse.Namespace) -> int:
    g, source = _load_input(args)
    result = energy_payload(energy(g, args.alpha))
    report = build_report("energy", _get_distribution_version(), source, result, alpha=args.alpha)
    _emit(args, dump_json(report))
    return EXIT_OK


def _cmd_spectrum(args: argparse.Namespace) -> int:
    g, source = _load_input(args)
    result = spectrum_payload(spectrum_small(g, args.alpha, args.tol))
    report = build_report(
        "spectrum",
        _get_distribution_version(),
        source,
        result,
        alpha=args.alpha,
        tolerances={"tol": args.tol},
    )
    _emit(args, dump_json(report))
    return EXIT_OK


def _cmd_transform(args: argparse.Namespace) -> int:
    g, source = _load_input(args)
    structure = require_gnm(g)
    outcome = transform(structure, TransformKind(args.kind))
    result: Payload = transform_payload(outcome, alpha_threshold(structure))
    result["input_structure"] = structure_payload(structure)
    if args.out is not None:
        args.out.write_text(format_digraph(outcome.result), encoding="utf-8")
        result["out"] = str(args.out)
    report = build_report("transform", _get_distribution_version(), source, result)
    _emit(args, dump_json(report))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    law = LawId(args.law)
    outcome = verify_law(
        law,
        max_n=args.max_n,
        alpha_grid=args.alpha_grid,
        tol=args.tol,
        budget=args.budget,
        seed=args.seed,
        jobs=args.jobs,
    )
    if args.format == "csv":
        _emit(args, verification_csv(outcome))
    else:
        report = build_report(
            "verify",
            _get_distribution_version(),
            f"law={law.value} max_n={args.max_n} budget={args.budget}",
            verification_payload(outcome),
            alpha=args.alpha_grid,
            tolerances=outcome.tolerances,
            seed=args.seed,
        )
        _emit(args, dump_json(report))
    if not outcome.passed:
        return EXIT_LAW_FAILURE
    return EXIT_NUMERIC_ERROR if outcome.unconverged else EXIT_OK


def _cmd_scan(args: argparse.Namespace) -> int:
    mode = ScanMode(args.mode)
    outcome = scan_conjecture_2_10(
        args.n,
        args.m,
        alpha_grid=args.alpha_grid,
        tol=args.tol,
        mode=mode,
        seed=args.seed,
        count=args.count,
        budget=args.budget,
        jobs=args.jobs,
    )
    if args.format == "csv":
        _emit(args, scan_csv(outcome))
    else:
        report = build_report(
            "scan",
            _get_distribution_version(),
            f"n={args.n} m={args.m} mode={mode.value}",
            scan_payload(outcome),
            alpha=outcome.alpha_grid,
            tolerances={"tol": outcome.tol},
            seed=outcome.seed,
        )
        _emit(args, dump_json(report))
    if not outcome.passed:
        return EXIT_LAW_FAILURE
    return EXIT_NUMERIC_ERROR if outcome.unconverged else EXIT_OK


_COMMANDS: dict[str, Callable[[argparse.Namespace], int]] = {
    "radius": _cmd_radius,
    "energy": _cmd_energy,
    "spectrum": _cmd_spectrum,
    "transform": _cmd_transform,
    "verify": _cmd_verify,
    "scan": _cmd_scan,
}


def main(argv: list[str] | None = None) -> int:
    """Run one subcommand and map its outcome onto the exit-code contract.

    Args:
        argv: Optional argument list; defaults to ``sys.argv`` when ``None``.

    Returns:
        0 on success, 1 on a law failure or counterexample, 2 on unreadable input, 3 on a
        domain error and 4 on numeric trouble.
    """
    parser = _create_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "family") and (args.file is None) == (args.family is None):
        parser.error("give exactly one of a digraph file or --family")
    basicConfig(level=args.log_level, stream=sys.stderr)
    logger.info("Running %s", args.command)
    try:
        return _COMMANDS[args.command](args)
    except DigraphFileError as exc:
        logger.error("Invalid digraph input: %s", exc)
        return EXIT_PARSE_ERROR
    except FamilySpecError as exc:
        logger.error("Invalid family specification: %s", exc)
        return EXIT_PARSE_ERROR
    except OSError as exc:
        logger.error("Cannot read or write %s", exc)
        return EXIT_PARSE_ERROR
    except ConvergenceError as exc:
        logger.error("Numeric failure: %s", exc)
        return EXIT_NUMERIC_ERROR
    except AalphaError as exc:
        logger.error("%s", exc)
        return EXIT_DOMAIN_ERROR


__all__ = [
    "EXIT_DOMAIN_ERROR",
    "EXIT_LAW_FAILURE",
    "EXIT_NUMERIC_ERROR",
    "EXIT_OK",
    "EXIT_PARSE_ERROR",
    "main",
    "parse_alpha",
    "parse_alpha_grid",
]

__description__ = """
Subcommands radius, energy, spectrum, transform, verify and scan with JSON/CSV reports and a
stable exit-code contract.
"""
