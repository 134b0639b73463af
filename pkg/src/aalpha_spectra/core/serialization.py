"""Plain-text digraph files: an ``n e`` header followed by ``tail head`` lines."""

from __future__ import annotations

from .digraph import Arc, Digraph
from .errors import DigraphError, DigraphFileError


def format_digraph(g: Digraph) -> str:
    """Write a digraph in the canonical text format.

    Args:
        g: The digraph.

    Returns:
        Header ``n e`` and one lexicographically sorted ``tail head`` line per arc, each line
        newline-terminated.
    """
    lines = [f"{g.n} {g.arc_count}"]
    lines.extend(f"{tail} {head}" for tail, head in g.arcs)
    return "\n".join(lines) + "\n"


def _int_fields(text: str, line: int, expected: int) -> list[int]:
    fields = text.split()
    if len(fields) != expected:
        raise DigraphFileError(f"expected {expected} integers, found {len(fields)}", line)
    try:
        return [int(field) for field in fields]
    except ValueError as exc:
        raise DigraphFileError(f"non-integer field in {text.strip()!r}", line) from exc


def parse_digraph(text: str) -> Digraph:
    """Parse the text format written by ``format_digraph``.

    Blank lines and lines whose first non-blank character is ``#`` are ignored.

    Args:
        text: File contents.

    Returns:
        The parsed digraph.

    Raises:
        DigraphFileError: On malformed lines, arc-count mismatch or invalid arcs; the error
            carries the 1-based line number.
    """
    header: tuple[int, int] | None = None
    header_line = 0
    arcs: list[Arc] = []
    arc_lines: list[int] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if header is None:
            n, e = _int_fields(stripped, number, 2)
            if n < 1 or e < 0:
                raise DigraphFileError(f"invalid header n={n} e={e}", number)
            header, header_line = (n, e), number
            continue
        tail, head = _int_fields(stripped, number, 2)
        arcs.append((tail, head))
        arc_lines.append(number)
    if header is None:
        raise DigraphFileError("missing 'n e' header", max(1, len(text.splitlines())))
    n, e = header
    if len(arcs) != e:
        last = arc_lines[-1] if arc_lines else header_line
        raise DigraphFileError(f"header declares {e} arcs, found {len(arcs)}", last)
    try:
        return Digraph(n, tuple(arcs))
    except DigraphError as exc:
        raise DigraphFileError(str(exc), _offending_line(arcs, arc_lines, n)) from exc


def _offending_line(arcs: list[Arc], lines: list[int], n: int) -> int:
    """Locate the first arc line that breaks the digraph invariants."""
    seen: set[Arc] = set()
    for arc, line in zip(arcs, lines):
        tail, head = arc
        if not (0 <= tail < n and 0 <= head < n) or tail == head or arc in seen:
            return line
        seen.add(arc)
    return lines[0] if lines else 1


__all__ = [
    "format_digraph",
    "parse_digraph",
]

__description__ = """
Canonical writer and line-numbered parser for the digraph text format.
"""
