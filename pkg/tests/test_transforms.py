"""Tests for the tree rewirings, their energies and the alpha threshold."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given

from aalpha_spectra.core import digraph, models, scc, search, spectra, transforms
from tests.strategies import alphas, gnm_members

F = Fraction


def test_prime_turns_out_path_into_star(c2_with_path: digraph.Digraph) -> None:
    """The out-path 0 -> 2 -> 3 becomes the star 0 -> 2, 0 -> 3."""

    outcome = transforms.to_g_prime(scc.require_gnm(c2_with_path))

    assert outcome.result == digraph.Digraph(4, ((0, 1), (1, 0), (0, 2), (0, 3)))
    assert outcome.kind is models.TransformKind.PRIME
    assert transforms.is_out_star_hung(outcome.structure)


def test_prime_fixes_out_star_hung_digraph(c2_with_star: digraph.Digraph) -> None:
    """A digraph whose trees are already out-stars is its own rewiring."""

    s = scc.require_gnm(c2_with_star)

    assert transforms.is_out_star_hung(s)
    assert transforms.to_g_prime(s).result == c2_with_star


def test_prime_rewires_in_path_on_later_core_vertex() -> None:
    """An in-path 4 -> 3 -> 1 on C3 becomes leaves 3 and 4 of vertex 1."""

    g = digraph.Digraph(5, ((0, 1), (1, 2), (2, 0), (3, 1), (4, 3)))

    outcome = transforms.to_g_prime(scc.require_gnm(g))

    assert set(outcome.result.arcs) == {(0, 1), (1, 2), (2, 0), (1, 3), (1, 4)}


def test_double_prime_moves_all_leaves_to_v1() -> None:
    """Leaves on both core vertices of C2 move to the lowest maximizer, vertex 0."""

    g = digraph.Digraph(4, ((0, 1), (1, 0), (0, 2), (1, 3)))

    outcome = transforms.to_g_double_prime(scc.require_gnm(g))

    assert outcome.result == digraph.Digraph(4, ((0, 1), (1, 0), (0, 2), (0, 3)))
    assert outcome.result.out_deg[0] == 3
    assert transforms.is_max_star_hung(outcome.structure)
    assert not transforms.is_max_star_hung(scc.require_gnm(g))


def test_double_prime_targets_vertex_of_largest_core_outdegree() -> None:
    """A leaf hung on a low-degree core vertex moves to v1."""

    core = ((0, 1), (1, 2), (2, 0), (0, 2))
    g = digraph.Digraph(4, (*core, (1, 3)))

    outcome = transforms.to_g_double_prime(scc.require_gnm(g))

    assert outcome.result == digraph.Digraph(4, (*core, (0, 3)))


def test_triple_prime_builds_in_path_to_core(c2_with_path: digraph.Digraph) -> None:
    """Tree vertices 2 and 3 become the in-path 3 -> 2 -> 0."""

    outcome = transforms.to_g_triple_prime(scc.require_gnm(c2_with_path))

    assert outcome.result == digraph.Digraph(4, ((0, 1), (1, 0), (2, 0), (3, 2)))
    assert transforms.is_in_tree_hung(outcome.structure)


def test_triple_prime_of_out_star() -> None:
    """Three leaves on v1 become the in-path 4 -> 3 -> 2 -> 0."""

    g = digraph.Digraph(5, ((0, 1), (1, 0), (0, 2), (0, 3), (0, 4)))

    outcome = transforms.transform(scc.require_gnm(g), models.TransformKind.TRIPLE_PRIME)

    assert set(outcome.result.arcs) == {(0, 1), (1, 0), (2, 0), (3, 2), (4, 3)}


def test_bare_core_is_fixed_by_every_rewiring() -> None:
    """Without tree arcs all three rewirings are the identity."""

    s = next(iter(search.enumerate_gnm(2, 2)))

    for kind in models.TransformKind:
        assert transforms.transform(s, kind).result == s.g


def test_threshold_examples() -> None:
    """Thresholds 1/3 and 2/5 from the core outdegree and tree spread."""

    cycle = scc.require_gnm(
        digraph.Digraph(6, ((0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)))
    )
    chord = scc.require_gnm(
        digraph.Digraph(6, ((0, 1), (1, 2), (2, 0), (0, 2), (1, 3), (1, 4), (2, 5)))
    )

    assert transforms.alpha_threshold(cycle) == models.AlphaThreshold(F(1, 3))
    assert transforms.alpha_threshold(chord) == models.AlphaThreshold(F(2, 5))


def test_threshold_is_degenerate_when_only_v1_carries_a_tree(
    c2_with_star: digraph.Digraph,
) -> None:
    """All tree mass on v1 makes the rewirings coincide."""

    threshold = transforms.alpha_threshold(scc.require_gnm(c2_with_star))

    assert threshold.degenerate
    assert threshold.value == 1
    assert threshold.admits(F(1, 10))


def test_threshold_admits_from_value_and_at_zero() -> None:
    """Non-degenerate thresholds admit alpha = 0 and alpha >= value."""

    threshold = models.AlphaThreshold(F(1, 3))

    assert threshold.admits(F(0))
    assert not threshold.admits(F(3, 10))
    assert threshold.admits(F(1, 3))
    assert threshold.admits(F(9, 10))


def test_energy_chain_example(c2_with_path: digraph.Digraph) -> None:
    """At 1/2 the in-path, original and star energies are 3/2, 2 and 3."""

    s = scc.require_gnm(c2_with_path)
    half = F(1, 2)

    assert transforms.energy_g_triple_prime(s, half) == F(3, 2)
    assert spectra.energy_closed_form(s.g, half) == 2
    assert transforms.energy_g_prime(s, half) == 3
    assert transforms.energy_g_double_prime(s, half) == 3


@given(gnm_members(), alphas)
def test_closed_forms_match_rewired_digraphs(s: scc.GnmStructure, alpha: Fraction) -> None:
    """Each closed form equals the energy of the rewired digraph."""

    prime = transforms.to_g_prime(s).result
    double_prime = transforms.to_g_double_prime(s).result
    triple_prime = transforms.to_g_triple_prime(s).result

    assert transforms.energy_g_prime(s, alpha) == spectra.energy_closed_form(prime, alpha)
    assert transforms.energy_g_double_prime(s, alpha) == spectra.energy_closed_form(
        double_prime, alpha
    )
    assert transforms.energy_g_triple_prime(s, alpha) == spectra.energy_closed_form(
        triple_prime, alpha
    )


@given(gnm_members())
def test_rewirings_preserve_core_and_orders(s: scc.GnmStructure) -> None:
    """Rewirings keep n, m and the core arcs, and land in their target shapes."""

    for kind in models.TransformKind:
        outcome = transforms.transform(s, kind)
        assert (outcome.structure.n, outcome.structure.m) == (s.n, s.m)
        assert outcome.structure.core_arcs == s.core_arcs
    assert transforms.is_out_star_hung(transforms.to_g_prime(s).structure)
    assert transforms.is_max_star_hung(transforms.to_g_double_prime(s).structure)
    assert transforms.is_in_tree_hung(transforms.to_g_triple_prime(s).structure)


def test_radius_bounds_of_rewirings(c2_with_path: digraph.Digraph) -> None:
    """Row-sum and diagonal bounds bracket the rewired radii."""

    s = scc.require_gnm(c2_with_path)
    half = F(1, 2)

    upper = transforms.g_prime_radius_upper_bound(s, half)
    lower = transforms.g_double_prime_radius_lower_bound(s, half)

    assert upper == F(2)
    assert lower == F(3, 2)
    assert spectra.spectral_radius(transforms.to_g_prime(s).result, half).upper <= upper
    assert spectra.spectral_radius(transforms.to_g_double_prime(s).result, half).lower >= lower


@pytest.mark.parametrize("kind", list(models.TransformKind))
def test_transform_dispatch(kind: models.TransformKind, c2_with_path: digraph.Digraph) -> None:
    """The dispatcher returns the outcome tagged with the requested kind."""

    assert transforms.transform(scc.require_gnm(c2_with_path), kind).kind is kind


__all__ = [
    "test_bare_core_is_fixed_by_every_rewiring",
    "test_closed_forms_match_rewired_digraphs",
    "test_double_prime_moves_all_leaves_to_v1",
    "test_double_prime_targets_vertex_of_largest_core_outdegree",
    "test_energy_chain_example",
    "test_prime_fixes_out_star_hung_digraph",
    "test_prime_rewires_in_path_on_later_core_vertex",
    "test_prime_turns_out_path_into_star",
    "test_radius_bounds_of_rewirings",
    "test_rewirings_preserve_core_and_orders",
    "test_threshold_admits_from_value_and_at_zero",
    "test_threshold_examples",
    "test_threshold_is_degenerate_when_only_v1_carries_a_tree",
    "test_transform_dispatch",
    "test_triple_prime_builds_in_path_to_core",
    "test_triple_prime_of_out_star",
]
