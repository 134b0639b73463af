"""Tests for the digraph text format."""

from __future__ import annotations

import pytest
from hypothesis import given

from aalpha_spectra.core import digraph, errors, serialization
from tests.strategies import digraphs


def test_format_digraph_writes_header_and_sorted_arcs(c2_with_star: digraph.Digraph) -> None:
    """The writer emits ``n e`` and then one sorted arc per line."""

    text = serialization.format_digraph(c2_with_star)

    assert text == "4 4\n0 1\n0 2\n0 3\n1 0\n"


def test_parse_digraph_skips_comments_and_blank_lines(c2: digraph.Digraph) -> None:
    """Comment and blank lines are ignored anywhere in the file."""

    text = "# symmetric pair\n\n2 2\n  1 0\n# reverse\n0 1\n"

    assert serialization.parse_digraph(text) == c2


@pytest.mark.parametrize(
    ("text", "line"),
    [
        ("3 2\n0 1\n1 1\n", 3),
        ("3 2\n0 1\n0 1\n", 3),
        ("3 2\n0 1\n0 5\n", 3),
        ("3 2\n0 x\n1 2\n", 2),
        ("3\n0 1\n", 1),
        ("3 3\n0 1\n1 2\n", 3),
        ("0 0\n", 1),
    ],
)
def test_parse_digraph_reports_offending_line(text: str, line: int) -> None:
    """Malformed files raise with the 1-based line that broke parsing."""

    with pytest.raises(errors.DigraphFileError) as excinfo:
        serialization.parse_digraph(text)

    assert excinfo.value.line == line
    assert str(excinfo.value).startswith(f"line {line}:")


def test_parse_digraph_requires_header() -> None:
    """A file with only comments has no header."""

    with pytest.raises(errors.DigraphFileError):
        serialization.parse_digraph("# nothing here\n")


@given(digraphs())
def test_format_then_parse_restores_digraph(g: digraph.Digraph) -> None:
    """Parsing the written text yields the same digraph."""

    assert serialization.parse_digraph(serialization.format_digraph(g)) == g


__all__ = [
    "test_format_digraph_writes_header_and_sorted_arcs",
    "test_format_then_parse_restores_digraph",
    "test_parse_digraph_reports_offending_line",
    "test_parse_digraph_requires_header",
    "test_parse_digraph_skips_comments_and_blank_lines",
]
