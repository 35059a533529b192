import random

import pytest

from jahangir_ssc import (
    CapacityError,
    EdgeLabel,
    Graph,
    GraphParseError,
    InvalidParameterError,
    build_jahangir,
    emit_graph,
    enumerate_simple_cycles,
    is_connected,
    jahangir_order,
    matrix_tree_count,
    parse_graph,
)
from jahangir_ssc.graphs import base_cycle_indices, rim_indices, spoke_index

from oracles import (
    brute_simple_cycles,
    laplacian_tree_count,
    random_connected_graph,
)

TRIANGLE = Graph(3, ((0, 1), (1, 2), (0, 2)))

# frozen by the fraction-determinant oracle below (see test_matrix_tree_family)
TREE_COUNTS = {3: 50, 4: 192, 5: 722, 6: 2700, 7: 10082, 8: 37632}


# ---------------------------------------------------------------------------
# construction


def test_build_shape():
    for m in (3, 4, 8):
        g = build_jahangir(m)
        assert g.vertex_count == 2 * m + 1
        assert g.edge_count == 3 * m
        assert g.labels is not None and len(g.labels) == 3 * m


@pytest.mark.parametrize("m", [0, 1, 2, -5])
def test_build_rejects_small_m(m):
    with pytest.raises(InvalidParameterError):
        build_jahangir(m)


def test_degree_profile(j4):
    deg = [0] * j4.vertex_count
    for u, v in j4.edges:
        deg[u] += 1
        deg[v] += 1
    assert deg[0] == 4                      # hub meets every spoke
    rim = sorted(deg[1:])
    assert rim == [2, 2, 2, 2, 3, 3, 3, 3]  # spoke feet have degree 3


def test_edge_index_helpers():
    m = 4
    g = build_jahangir(m)
    for j in range(1, m + 1):
        s = spoke_index(j, m)
        assert g.labels[s] == EdgeLabel(j, 1)
        r1, r2 = rim_indices(j, m)
        assert g.labels[r1] == EdgeLabel(j, 2)
        assert g.labels[r2] == EdgeLabel(j, 3)
    # cycle j closes with the next spoke, wrapping at m
    assert base_cycle_indices(1, m) == frozenset({0, 1, 2, 3})
    assert base_cycle_indices(m, m) == frozenset({9, 10, 11, 0})


def test_base_cycles_are_cycles(j3):
    for j in range(1, 4):
        idx = base_cycle_indices(j, 3)
        deg: dict[int, int] = {}
        for i in idx:
            for x in j3.edges[i]:
                deg[x] = deg.get(x, 0) + 1
        assert all(d == 2 for d in deg.values())


def test_label_bijection(j5):
    for i in range(j5.edge_count):
        assert j5.index_of_label(j5.label_of(i)) == i
    with pytest.raises(InvalidParameterError):
        j5.index_of_label(EdgeLabel(9, 1))
    with pytest.raises(InvalidParameterError):
        TRIANGLE.label_of(0)


def test_label_parse_round_trip():
    for text in ("e11", "e53", "e122", "e301"):
        assert str(EdgeLabel.parse(text)) == text
    # multi-digit j: the final digit is always the position
    assert EdgeLabel.parse("e123") == EdgeLabel(12, 3)
    for bad in ("e1", "x11", "e1x", ""):
        with pytest.raises(InvalidParameterError):
            EdgeLabel.parse(bad)
    with pytest.raises(InvalidParameterError):
        EdgeLabel.parse("e10")  # position must be 1..3
    with pytest.raises(InvalidParameterError):
        EdgeLabel(0, 1)


def test_graph_validation():
    with pytest.raises(InvalidParameterError):
        Graph(2, ((0, 2),))
    with pytest.raises(InvalidParameterError):
        Graph(3, ((1, 1),))
    with pytest.raises(InvalidParameterError):
        Graph(3, ((0, 1), (1, 0)))
    with pytest.raises(InvalidParameterError):
        Graph(3, ((0, 1),), labels=(EdgeLabel(1, 1), EdgeLabel(1, 2)))
    with pytest.raises(InvalidParameterError):
        Graph(3, ((0, 1), (1, 2)), labels=(EdgeLabel(1, 1), EdgeLabel(1, 1)))


def test_jahangir_order_detection(j3, j4):
    assert jahangir_order(j3) == 3
    assert jahangir_order(j4) == 4
    assert jahangir_order(TRIANGLE) is None
    # same edge set, scrambled order: still recognized
    shuffled = Graph(j3.vertex_count, tuple(reversed(j3.edges)))
    assert jahangir_order(shuffled) == 3
    # right size, wrong wiring
    wrong = Graph(7, tuple((i, (i + 1) % 7) for i in range(7)) + ((0, 2), (0, 3)))
    assert jahangir_order(wrong) is None


# ---------------------------------------------------------------------------
# document format


def test_round_trip(j3):
    assert parse_graph(emit_graph(j3)) == j3
    assert parse_graph(emit_graph(TRIANGLE)) == TRIANGLE


def test_parse_minimal():
    g = parse_graph('{"vertices": 2, "edges": [[0, 1]]}')
    assert g.edge_count == 1 and g.labels is None


@pytest.mark.parametrize(
    "text, needle",
    [
        ('{"vertices": 3, "edges": [[0, 1], [0]]}', "edges[1]"),
        ('{"vertices": 3, "edges": [[0, 1], [1, true]]}', "edges[1]"),
        ('{"vertices": 3, "edges": [[0, 1]], "labels": ["zz"]}', "labels[0]"),
        ('{"vertices": 3, "edges": [[0, 5]]}', "edges[0]"),
        ('{"vertices": 3, "edges": [[0, 1], [1, 0]]}', "edges[1]"),
        ('{"vertices": true, "edges": []}', "vertices"),
        ('{"vertices": 3, "edges": [[0, 1]], "extra": 1}', "extra"),
        ('[1, 2]', "object"),
        ('{"vertices": 3 "edges": []}', "line 1"),
    ],
)
def test_parse_errors_name_the_entry(text, needle):
    with pytest.raises(GraphParseError) as exc:
        parse_graph(text)
    assert needle in str(exc.value)


# ---------------------------------------------------------------------------
# spanning-tree count


def test_matrix_tree_small():
    assert matrix_tree_count(TRIANGLE) == 3
    path = Graph(4, ((0, 1), (1, 2), (2, 3)))
    assert matrix_tree_count(path) == 1
    disconnected = Graph(4, ((0, 1), (2, 3)))
    assert matrix_tree_count(disconnected) == 0
    assert matrix_tree_count(Graph(1, ())) == 1
    with pytest.raises(InvalidParameterError):
        matrix_tree_count(Graph(0, ()))


def test_matrix_tree_complete_graphs():
    # Cayley: n^(n-2)
    for n in (4, 5, 6):
        edges = tuple((u, v) for u in range(n) for v in range(u + 1, n))
        assert matrix_tree_count(Graph(n, edges)) == n ** (n - 2)


def test_matrix_tree_family():
    for m, want in TREE_COUNTS.items():
        g = build_jahangir(m)
        assert matrix_tree_count(g) == want
        assert laplacian_tree_count(g.vertex_count, list(g.edges)) == want


def test_matrix_tree_random_agrees_with_fraction_oracle():
    rng = random.Random(1)
    for _ in range(25):
        n, edges = random_connected_graph(rng)
        g = Graph(n, tuple(edges))
        assert matrix_tree_count(g) == laplacian_tree_count(n, edges)


# ---------------------------------------------------------------------------
# simple cycles


def test_simple_cycles_j3(j3):
    cycles = enumerate_simple_cycles(j3)
    assert len(cycles) == 7
    assert sorted(len(c) for c in cycles) == [4, 4, 4, 6, 6, 6, 6]
    assert set(cycles) == brute_simple_cycles(j3.vertex_count, list(j3.edges))


def test_simple_cycles_j4(j4):
    cycles = enumerate_simple_cycles(j4)
    assert len(cycles) == 13
    assert set(cycles) == brute_simple_cycles(j4.vertex_count, list(j4.edges))


def test_simple_cycles_counts_follow_family_rule():
    # m base cycles, then one merged cycle per run of consecutive
    # spokes dropped: m^2 - m + 1 in total
    for m in (3, 4, 5, 6):
        cycles = enumerate_simple_cycles(build_jahangir(m))
        assert len(cycles) == m * m - m + 1


def test_simple_cycles_acyclic_graphs():
    assert enumerate_simple_cycles(Graph(4, ((0, 1), (1, 2), (2, 3)))) == []
    assert enumerate_simple_cycles(Graph(2, ((0, 1),))) == []
    assert enumerate_simple_cycles(Graph(1, ())) == []


def test_simple_cycles_disconnected():
    g = Graph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)))
    cycles = enumerate_simple_cycles(g)
    assert len(cycles) == 2
    assert set(cycles) == brute_simple_cycles(6, list(g.edges))


def test_simple_cycles_random():
    rng = random.Random(7)
    for _ in range(20):
        n, edges = random_connected_graph(rng)
        g = Graph(n, tuple(edges))
        assert set(enumerate_simple_cycles(g)) == brute_simple_cycles(n, edges)


def test_simple_cycles_canonical_order(j3):
    cycles = enumerate_simple_cycles(j3)
    assert cycles == sorted(cycles, key=lambda c: sorted(c))


def test_simple_cycles_capacity():
    n = 9  # K9 has 28 independent cycles, above the 26 cap
    edges = tuple((u, v) for u in range(n) for v in range(u + 1, n))
    with pytest.raises(CapacityError):
        enumerate_simple_cycles(Graph(n, edges))


def test_is_connected():
    assert is_connected(TRIANGLE)
    assert not is_connected(Graph(4, ((0, 1), (2, 3))))
    assert is_connected(Graph(1, ()))
    assert not is_connected(Graph(0, ()))
