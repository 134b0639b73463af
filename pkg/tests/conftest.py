"""Pytest fixtures with small reference digraphs."""

from __future__ import annotations

import pytest
from hypothesis import settings

from aalpha_spectra.core.digraph import Digraph
from aalpha_spectra.core.families import FamilySpec, generate

settings.register_profile("aalpha", max_examples=60, deadline=None)
settings.load_profile("aalpha")


@pytest.fixture
def c2() -> Digraph:
    """The directed 2-cycle, i.e. one symmetric pair."""

    return generate(FamilySpec.parse("cycle:2"))


@pytest.fixture
def c2_with_path() -> Digraph:
    """C2 with the out-path 0 -> 2 -> 3 hung on vertex 0."""

    return Digraph(4, ((0, 1), (1, 0), (0, 2), (2, 3)))


@pytest.fixture
def c2_with_star() -> Digraph:
    """C2 with an out-star of two leaves on vertex 0."""

    return Digraph(4, ((0, 1), (1, 0), (0, 2), (0, 3)))


@pytest.fixture
def c2_with_pendant() -> Digraph:
    """C2 with a single pendant out-arc 0 -> 2."""

    return Digraph(3, ((0, 1), (1, 0), (0, 2)))
