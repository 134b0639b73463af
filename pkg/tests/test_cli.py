"""Tests for the aalpha-spectra command-line interface."""

from __future__ import annotations

import argparse
import json
from pathlib import Path
from typing import Any

import pytest

from aalpha_spectra import cli
from aalpha_spectra.core import digraph, serialization


def _run(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, dict[str, Any]]:
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out else {}


def _write(tmp_path: Path, g: digraph.Digraph, name: str = "g.txt") -> Path:
    path = tmp_path / name
    path.write_text(serialization.format_digraph(g), encoding="utf-8")
    return path


def test_parse_alpha_forms() -> None:
    """Rationals and short decimals parse exactly; other text is refused."""

    grid = cli.parse_alpha_grid("0, 1/2,0.9")

    assert cli.parse_alpha("1/3") == pytest.approx(1 / 3)
    assert cli.parse_alpha("0.25").denominator == 4
    assert grid == (0, cli.parse_alpha("1/2"), cli.parse_alpha("0.9"))
    for bad in ("abc", "0.1234567", "1/0", "-1/2"):
        with pytest.raises(argparse.ArgumentTypeError):
            cli.parse_alpha(bad)


def test_radius_of_cycle_family(capsys: pytest.CaptureFixture[str]) -> None:
    """C5 has radius one at any alpha."""

    code, report = _run(capsys, "radius", "--family", "cycle:5", "--alpha", "1/3")

    assert code == cli.EXIT_OK
    assert report["command"] == "radius"
    assert report["input"] == "cycle:5"
    assert report["alpha"] == "1/3"
    assert report["result"]["estimate"] == pytest.approx(1.0, abs=1e-12)
    assert report["tolerances"] == {"tol": 1e-12}


def test_radius_of_out_star_is_exact(capsys: pytest.CaptureFixture[str]) -> None:
    """OutStar(4) at 1/2 is decided by its centre alone."""

    code, report = _run(capsys, "radius", "--family", "outstar:4", "--alpha", "0.5")

    assert code == cli.EXIT_OK
    assert report["result"]["enclosure"] == [1.5, 1.5]
    assert len(report["result"]["blocks"]) == 4


def test_radius_from_file(
    tmp_path: Path, capsys: pytest.CaptureFixture[str], c2_with_star: digraph.Digraph
) -> None:
    """A digraph file gives the same certificate as the library."""

    path = _write(tmp_path, c2_with_star)

    code, report = _run(capsys, "radius", str(path), "--alpha", "1/2")

    assert code == cli.EXIT_OK
    assert report["input"] == str(path)
    assert report["result"]["estimate"] == pytest.approx(1.70710678, abs=1e-8)


@pytest.mark.parametrize(("family", "expected"), [("path:4", "3/4"), ("symstar:3", "5/2")])
def test_energy_is_exact(capsys: pytest.CaptureFixture[str], family: str, expected: str) -> None:
    """Energies print as exact num/den strings."""

    code, report = _run(capsys, "energy", "--family", family, "--alpha", "1/2")

    assert code == cli.EXIT_OK
    assert report["result"]["energy"] == expected
    assert report["seed"] is None


def test_spectrum_of_path(capsys: pytest.CaptureFixture[str]) -> None:
    """P3 reports its exact tree eigenvalues and divisibility."""

    code, report = _run(capsys, "spectrum", "--family", "path:3", "--alpha", "1/3")

    assert code == cli.EXIT_OK
    assert report["result"]["tree_eigenvalues"] == ["1/3", "1/3", "0/1"]
    assert report["result"]["divides"] is True


def test_transform_writes_rewired_digraph(
    tmp_path: Path, capsys: pytest.CaptureFixture[str], c2_with_path: digraph.Digraph
) -> None:
    """The prime rewiring is written in the digraph file format."""

    path = _write(tmp_path, c2_with_path)
    out = tmp_path / "prime.txt"

    code, report = _run(capsys, "transform", str(path), "--kind", "prime", "--out", str(out))

    assert code == cli.EXIT_OK
    assert report["result"]["kind"] == "prime"
    assert report["result"]["threshold"]["degenerate"] is True
    rewired = serialization.parse_digraph(out.read_text(encoding="utf-8"))
    assert rewired == digraph.Digraph(4, ((0, 1), (1, 0), (0, 2), (0, 3)))


def test_transform_of_non_member_is_a_domain_error(capsys: pytest.CaptureFixture[str]) -> None:
    """Strongly connected digraphs have no hung trees to rewire."""

    code, report = _run(capsys, "transform", "--family", "cycle:3", "--kind", "triple-prime")

    assert code == cli.EXIT_DOMAIN_ERROR
    assert report == {}


def test_malformed_file_is_a_parse_error(
    tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    """Arc-count mismatches and missing files exit with code 2."""

    bad = tmp_path / "bad.txt"
    bad.write_text("3 2\n0 1\n", encoding="utf-8")

    assert cli.main(["energy", str(bad), "--alpha", "1/2"]) == cli.EXIT_PARSE_ERROR
    assert cli.main(["energy", str(tmp_path / "missing.txt"), "--alpha", "1/2"]) == 2
    assert cli.main(["energy", "--family", "wheel:4", "--alpha", "1/2"]) == 2
    assert capsys.readouterr().out == ""


def test_alpha_outside_range_is_a_domain_error() -> None:
    """alpha = 1 parses but is outside the half-open unit interval."""

    assert cli.main(["energy", "--family", "path:3", "--alpha", "1"]) == cli.EXIT_DOMAIN_ERROR


@pytest.mark.parametrize(
    "argv",
    [
        ["energy", "--family", "path:3", "--alpha", "abc"],
        ["energy", "--alpha", "1/2"],
        ["energy", "g.txt", "--family", "path:3", "--alpha", "1/2"],
        ["verify", "--law", "T9.9"],
    ],
)
def test_usage_errors_exit_with_code_2(argv: list[str]) -> None:
    """argparse rejects malformed alphas, missing or doubled inputs and unknown laws."""

    with pytest.raises(SystemExit) as excinfo:
        cli.main(argv)

    assert excinfo.value.code == 2


def test_version_flag(capsys: pytest.CaptureFixture[str]) -> None:
    """--version prints a version string and exits cleanly."""

    with pytest.raises(SystemExit) as excinfo:
        cli.main(["--version"])

    assert excinfo.value.code == 0
    assert capsys.readouterr().out.strip()


@pytest.mark.parametrize(("law", "max_n"), [("L3.4", "5"), ("T2.5", "4"), ("EX3.3", "6")])
def test_verify_passing_laws(capsys: pytest.CaptureFixture[str], law: str, max_n: str) -> None:
    """Laws checked on small instances pass with exit code 0."""

    code, report = _run(capsys, "verify", "--law", law, "--max-n", max_n, "--budget", "60")

    assert code == cli.EXIT_OK
    assert report["result"]["law"] == law
    assert report["result"]["passed"] is True
    assert report["result"]["failures"] == []
    assert report["seed"] == 0
    assert len(report["alpha"]) == 10


def test_verify_csv_output_file(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """CSV reports of passing laws contain only the header."""

    out = tmp_path / "report.csv"

    code = cli.main(
        ["verify", "--law", "C3.10", "--max-n", "5", "--format", "csv", "--output", str(out)]
    )

    assert code == cli.EXIT_OK
    assert capsys.readouterr().out == ""
    assert out.read_text(encoding="utf-8") == "law,instance,alpha,expected,actual,detail\n"


def test_verify_size_limit_is_a_domain_error() -> None:
    """Tree enumeration beyond seven vertices is refused."""

    assert cli.main(["verify", "--law", "L3.4", "--max-n", "8"]) == cli.EXIT_DOMAIN_ERROR


def test_scan_small_class(capsys: pytest.CaptureFixture[str]) -> None:
    """G_4^2 has no certified counterexample."""

    code, report = _run(capsys, "scan", "--n", "4", "--m", "2", "--alpha-grid", "0,1/2,0.9")

    assert code == cli.EXIT_OK
    assert report["input"] == "n=4 m=2 mode=exhaustive"
    assert report["alpha"] == ["0/1", "1/2", "9/10"]
    assert report["result"]["counterexamples"] == []
    assert report["result"]["instances_checked"] == 28


def test_scan_sample_records_seed(capsys: pytest.CaptureFixture[str]) -> None:
    """Sample scans echo their seed."""

    code, report = _run(
        capsys,
        "scan",
        "--n",
        "5",
        "--m",
        "3",
        "--mode",
        "sample",
        "--count",
        "5",
        "--seed",
        "9",
        "--alpha-grid",
        "1/2",
    )

    assert code == cli.EXIT_OK
    assert report["seed"] == 9
    assert report["result"]["instances_checked"] == 5


__all__ = [
    "test_alpha_outside_range_is_a_domain_error",
    "test_energy_is_exact",
    "test_malformed_file_is_a_parse_error",
    "test_parse_alpha_forms",
    "test_radius_from_file",
    "test_radius_of_cycle_family",
    "test_radius_of_out_star_is_exact",
    "test_scan_sample_records_seed",
    "test_scan_small_class",
    "test_spectrum_of_path",
    "test_transform_of_non_member_is_a_domain_error",
    "test_transform_writes_rewired_digraph",
    "test_usage_errors_exit_with_code_2",
    "test_verify_csv_output_file",
    "test_verify_passing_laws",
    "test_verify_size_limit_is_a_domain_error",
    "test_version_flag",
]
