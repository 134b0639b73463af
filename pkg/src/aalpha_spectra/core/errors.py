"""Exception hierarchy shared by the core library and the CLI."""

from __future__ import annotations

from collections.abc import Sequence
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .scc import NotMember


class AalphaError(Exception):
    """Base class for every error raised by the package."""


class DigraphError(AalphaError, ValueError):
    """A digraph violates the loop-free, multi-arc-free convention."""


class VertexCountError(DigraphError):
    """A digraph is declared with no vertices."""

    def __init__(self, n: int) -> None:
        """Record the rejected vertex count.

        Args:
            n: The declared vertex count.
        """
        super().__init__(f"vertex count must be positive, got {n}")
        self.n = n


class LoopError(DigraphError):
    """An arc has identical tail and head."""

    def __init__(self, vertex: int) -> None:
        """Record the offending vertex.

        Args:
            vertex: Vertex carrying the loop.
        """
        super().__init__(f"loop present at vertex {vertex}")
        self.vertex = vertex


class DuplicateArcError(DigraphError):
    """The same ordered pair appears twice in an arc list."""

    def __init__(self, arc: tuple[int, int]) -> None:
        """Record the repeated arc.

        Args:
            arc: The duplicated (tail, head) pair.
        """
        super().__init__(f"duplicate arc {arc}")
        self.arc = arc


class VertexIndexError(DigraphError):
    """An arc endpoint lies outside ``0..n-1``."""

    def __init__(self, arc: tuple[int, int], n: int) -> None:
        """Record the arc and the vertex count.

        Args:
            arc: The (tail, head) pair with an out-of-range endpoint.
            n: Vertex count of the digraph being built.
        """
        super().__init__(f"arc {arc} has an endpoint outside 0..{n - 1}")
        self.arc = arc
        self.n = n


class TreeAttachmentError(DigraphError):
    """Trees cannot be hung on a core as requested."""


class FamilySpecError(AalphaError, ValueError):
    """A family specification has invalid size parameters."""


class AlphaRangeError(AalphaError, ValueError):
    """The interpolation parameter lies outside ``[0, 1)``."""


class SizeLimitError(AalphaError, ValueError):
    """A size parameter is outside the range an operation supports."""


class NotMemberError(AalphaError, ValueError):
    """A digraph required to lie in G_n^m does not."""

    def __init__(self, verdict: NotMember) -> None:
        """Wrap the classification verdict.

        Args:
            verdict: The ``NotMember`` value returned by ``classify_gnm``.
        """
        super().__init__(f"digraph is not in G_n^m: {verdict.reason.value}")
        self.verdict = verdict


class DigraphFileError(AalphaError, ValueError):
    """A digraph file could not be parsed."""

    def __init__(self, message: str, line: int) -> None:
        """Attach the 1-based line number to the message.

        Args:
            message: Description of the problem.
            line: 1-based line number where parsing failed.
        """
        super().__init__(f"line {line}: {message}")
        self.line = line


class ConvergenceError(AalphaError, RuntimeError):
    """An iterative numeric method stopped before meeting its tolerance."""

    def __init__(self, message: str, residuals: Sequence[float] = ()) -> None:
        """Keep the final residuals for reporting.

        Args:
            message: Description of the failure.
            residuals: Residual values at the last iterate.
        """
        super().__init__(message)
        self.residuals = tuple(residuals)


__all__ = [
    "AalphaError",
    "AlphaRangeError",
    "ConvergenceError",
    "DigraphError",
    "DigraphFileError",
    "DuplicateArcError",
    "FamilySpecError",
    "LoopError",
    "NotMemberError",
    "SizeLimitError",
    "TreeAttachmentError",
    "VertexCountError",
    "VertexIndexError",
]

__description__ = """
Exceptions raised by digraph construction, parsing, numerics and membership checks.
"""
