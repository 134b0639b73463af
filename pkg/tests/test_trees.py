"""Tests for labeled tree enumeration and orientation."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from aalpha_spectra.core import digraph, errors, families, trees

_TREE_INDICES = st.integers(min_value=2, max_value=6).flatmap(
    lambda k: st.tuples(st.just(k), st.integers(0, trees.tree_count(k) - 1))
)


def test_prufer_decoding_of_known_sequence() -> None:
    """Sequence [3, 3, 3, 4] on six vertices decodes to a spider with a tail."""

    edges = trees.prufer_to_edges([3, 3, 3, 4], 6)

    assert edges == ((0, 3), (1, 3), (2, 3), (3, 4), (4, 5))


def test_prufer_decoding_rejects_bad_sequences() -> None:
    """Length and label range are validated."""

    with pytest.raises(ValueError):
        trees.prufer_to_edges([0], 4)
    with pytest.raises(ValueError):
        trees.prufer_to_edges([7, 0], 4)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_labeled_trees_are_distinct_trees(k: int) -> None:
    """Cayley's count k^(k-2) of distinct spanning trees is produced."""

    shapes = list(trees.labeled_trees(k))

    assert len(set(shapes)) == max(1, k ** (k - 2))
    assert all(families.is_tree(digraph.Digraph(k, edges)) for edges in shapes)


@pytest.mark.parametrize(("k", "expected"), [(1, 1), (2, 2), (3, 12), (4, 128), (5, 2000)])
def test_tree_count_examples(k: int, expected: int) -> None:
    """Oriented labeled trees number k^(k-2) * 2^(k-1)."""

    assert trees.tree_count(k) == expected


def test_oriented_tree_index_is_a_bijection() -> None:
    """Every index up to the count decodes to a different oriented tree."""

    decoded = {trees.oriented_tree_at(4, index) for index in range(trees.tree_count(4))}

    assert len(decoded) == 128
    with pytest.raises(IndexError):
        trees.oriented_tree_at(4, 128)


def test_orientations_cover_every_mask() -> None:
    """A path on three vertices has four orientations."""

    arcs = list(trees.orientations(((0, 1), (1, 2))))

    assert arcs == [((0, 1), (1, 2)), ((1, 0), (1, 2)), ((0, 1), (2, 1)), ((1, 0), (2, 1))]


def test_in_tree_and_out_star_predicates() -> None:
    """Paths into a root are in-trees; centres with all arcs are out-stars."""

    in_path = digraph.Digraph(3, ((1, 0), (2, 1)))
    out_star = digraph.Digraph(3, ((0, 1), (0, 2)))

    assert trees.is_in_tree(in_path)
    assert trees.is_in_tree(in_path, root=0)
    assert not trees.is_in_tree(in_path, root=2)
    assert not trees.is_in_tree(out_star)
    assert trees.is_out_star(out_star)
    assert not trees.is_out_star(in_path)


def test_single_vertex_is_both_in_tree_and_out_star() -> None:
    """The trivial tree satisfies both shape predicates."""

    single = digraph.Digraph(1, ())

    assert trees.is_in_tree(single, root=0)
    assert trees.is_out_star(single)


def test_check_tree_size_limits() -> None:
    """Sizes outside 1..limit are rejected."""

    trees.check_tree_size(7, 7)
    with pytest.raises(errors.SizeLimitError):
        trees.check_tree_size(8, 7)
    with pytest.raises(errors.SizeLimitError):
        trees.check_tree_size(0, 7)


@given(_TREE_INDICES)
def test_decoded_trees_are_weakly_connected(case: tuple[int, int]) -> None:
    """Every decoded index is a tree on k vertices."""

    k, index = case
    tree = trees.oriented_tree_at(k, index)

    assert tree.n == k
    assert families.is_tree(tree)


__all__ = [
    "test_check_tree_size_limits",
    "test_decoded_trees_are_weakly_connected",
    "test_in_tree_and_out_star_predicates",
    "test_labeled_trees_are_distinct_trees",
    "test_orientations_cover_every_mask",
    "test_oriented_tree_index_is_a_bijection",
    "test_prufer_decoding_of_known_sequence",
    "test_prufer_decoding_rejects_bad_sequences",
    "test_single_vertex_is_both_in_tree_and_out_star",
    "test_tree_count_examples",
]
