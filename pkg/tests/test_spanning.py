import random

import pytest

from jahangir_ssc import (
    ClassificationError,
    Graph,
    InvalidParameterError,
    TreeClass,
    build_jahangir,
    classify_tree,
    enumerate_spanning_trees_generic,
    enumerate_spanning_trees_jahangir,
    matrix_tree_count,
    verify_partition,
)
from jahangir_ssc.graphs import spoke_index

from oracles import (
    brute_spanning_trees,
    is_spanning_tree,
    random_connected_graph,
)

# class sizes frozen from the structured enumeration, cross-checked
# against the determinant and the generic enumeration below
CLASS_COUNTS = {
    3: (8, 24, 18, 0, 0),
    4: (16, 64, 80, 32, 0),
    5: (32, 160, 250, 160, 120),
    6: (64, 384, 672, 704, 876),
    7: (128, 896, 1666, 2688, 4704),
    8: (256, 2048, 3936, 9728, 21664),
}


# ---------------------------------------------------------------------------
# generic enumeration


def test_generic_triangle():
    trees = enumerate_spanning_trees_generic(Graph(3, ((0, 1), (1, 2), (0, 2))))
    assert sorted(trees, key=sorted) == [
        frozenset({0, 1}), frozenset({0, 2}), frozenset({1, 2})]


def test_generic_path_and_singleton():
    path = Graph(3, ((0, 1), (1, 2)))
    assert enumerate_spanning_trees_generic(path) == [frozenset({0, 1})]
    assert enumerate_spanning_trees_generic(Graph(1, ())) == [frozenset()]


def test_generic_disconnected_is_empty():
    assert enumerate_spanning_trees_generic(Graph(4, ((0, 1), (2, 3)))) == []


def test_generic_matches_brute_force(j3):
    assert set(enumerate_spanning_trees_generic(j3)) == brute_spanning_trees(
        j3.vertex_count, list(j3.edges))


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_generic_count_matches_determinant(m):
    g = build_jahangir(m)
    assert len(enumerate_spanning_trees_generic(g)) == matrix_tree_count(g)


def test_generic_random_graphs():
    rng = random.Random(11)
    for _ in range(15):
        n, edges = random_connected_graph(rng)
        g = Graph(n, tuple(edges))
        trees = enumerate_spanning_trees_generic(g)
        assert len(trees) == len(set(trees)) == matrix_tree_count(g)
        assert set(trees) == brute_spanning_trees(n, edges)


def test_generic_canonical_order(j3):
    trees = enumerate_spanning_trees_generic(j3)
    assert trees == sorted(trees, key=sorted)


# ---------------------------------------------------------------------------
# structured enumeration


@pytest.mark.parametrize("m", list(CLASS_COUNTS))
def test_structured_class_counts(m):
    records = enumerate_spanning_trees_jahangir(m)
    counts = {cls: 0 for cls in TreeClass}
    for rec in records:
        counts[rec.tree_class] += 1
    assert tuple(counts[cls] for cls in TreeClass) == CLASS_COUNTS[m]
    assert len(records) == matrix_tree_count(build_jahangir(m))


@pytest.mark.parametrize("m", [3, 4])
def test_structured_equals_generic_as_sets(m):
    g = build_jahangir(m)
    structured = {rec.kept for rec in enumerate_spanning_trees_jahangir(m)}
    assert structured == set(enumerate_spanning_trees_generic(g))


def test_structured_records_are_consistent(j4):
    all_edges = frozenset(range(j4.edge_count))
    for rec in enumerate_spanning_trees_jahangir(4):
        assert rec.kept | rec.removed == all_edges
        assert not rec.kept & rec.removed
        assert len(rec.removed) == 4  # cyclomatic number of J(2,m) is m
        chosen = [j4.edges[i] for i in rec.kept]
        assert is_spanning_tree(j4.vertex_count, chosen)


def test_structured_keeps_at_least_one_spoke():
    # dropping every spoke isolates the hub, so no class allows it
    for m in (3, 4, 5):
        spokes = {spoke_index(j, m) for j in range(1, m + 1)}
        for rec in enumerate_spanning_trees_jahangir(m):
            assert not spokes <= rec.removed


# ---------------------------------------------------------------------------
# classification


@pytest.mark.parametrize("m", [3, 4])
def test_classify_round_trip(m):
    for rec in enumerate_spanning_trees_jahangir(m):
        assert classify_tree(rec.removed, m) == rec.tree_class


def test_classify_named_examples(j3):
    from jahangir_ssc import EdgeLabel

    def by_labels(*names):
        return frozenset(j3.index_of_label(EdgeLabel.parse(n)) for n in names)

    assert classify_tree(by_labels("e12", "e22", "e32"), 3) == TreeClass.KEEP_ALL_SPOKES
    assert classify_tree(by_labels("e11", "e12", "e22"), 3) == TreeClass.DROP_ONE_SPOKE
    assert classify_tree(by_labels("e11", "e21", "e13"), 3) == TreeClass.DROP_RUN


def test_classify_rejects_non_trees():
    # removing all three spokes leaves the hub isolated
    with pytest.raises(ClassificationError):
        classify_tree(frozenset({0, 3, 6}), 3)
    # removing a full base cycle disconnects its middle rim vertex
    with pytest.raises(ClassificationError):
        classify_tree(frozenset({0, 1, 2}), 3)


def test_classify_rejects_bad_input():
    with pytest.raises(ClassificationError):
        classify_tree(frozenset({0, 1}), 3)  # wrong cardinality
    with pytest.raises(ClassificationError):
        classify_tree(frozenset({0, 1, 99}), 3)  # out of range
    with pytest.raises(InvalidParameterError):
        classify_tree(frozenset({0, 1}), 2)  # family needs m >= 3


# ---------------------------------------------------------------------------
# the partition claim


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_verify_partition(m):
    report = verify_partition(m)
    assert report.ok
    assert report.disjoint
    assert report.union_matches
    assert report.total == report.generic_total == matrix_tree_count(build_jahangir(m))
    assert not report.missing and not report.extra
    assert tuple(count for _, count in report.class_counts) == CLASS_COUNTS[m]
