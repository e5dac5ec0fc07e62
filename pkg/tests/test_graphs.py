from itertools import combinations

import pytest

from nctb.generators import complete_bipartite, cycle, octahedron, path, random_tree
from nctb.graphs import (
    Graph,
    GraphError,
    all_pairs_distances,
    diametral_pair,
    false_twin_classes,
    hausdorff_distance,
    hyperbolicity2,
    interval_vertices,
    vertex_cover,
)


def test_graph_validation():
    with pytest.raises(GraphError):
        Graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 5)])
    g = Graph(3, [(0, 1), (1, 2)])
    assert g.adj == ((1,), (0, 2), (1,))


def test_distances_on_path_and_cycle():
    d = all_pairs_distances(path(3))
    assert d.d(0, 2) == 2
    d6 = all_pairs_distances(cycle(6))
    assert d6.d(0, 3) == 3
    assert d6.diameter() == 3


def test_disconnected_distance_error_names_vertices():
    g = Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(GraphError, match=r"0 and 2"):
        all_pairs_distances(g)


def test_interval_vertices():
    d = all_pairs_distances(path(3))
    assert interval_vertices(d, 0, 2) == {0, 1, 2}
    d4 = all_pairs_distances(cycle(4))
    assert interval_vertices(d4, 0, 2) == {0, 1, 2, 3}
    d6 = all_pairs_distances(cycle(6))
    assert interval_vertices(d6, 0, 2) == {0, 1, 2}


def test_diametral_pair_is_lex_least():
    d = all_pairs_distances(path(3))
    assert diametral_pair({0, 1, 2}, d) == (0, 2)
    assert diametral_pair({1}, d) == (1, 1)
    d6 = all_pairs_distances(cycle(6))
    members = {4, 5, 0, 1, 2}
    # brute force: all pairs at maximal distance, then the lexicographic least
    pairs = [(u, v) for u, v in combinations(sorted(members), 2)]
    diam = max(d6.d(u, v) for u, v in pairs)
    best = min(p for p in pairs if d6.d(*p) == diam)
    assert diam == 3 and best == (1, 4)
    assert diametral_pair(members, d6) == (1, 4)


def test_false_twins():
    assert false_twin_classes(path(3)) == [(0, 2), (1,)]
    star = complete_bipartite(1, 4)
    classes = false_twin_classes(star)
    assert (1, 2, 3, 4) in classes
    assert all(len(c) == 1 for c in false_twin_classes(cycle(6)))


def test_vertex_cover_modes():
    star = complete_bipartite(1, 4)
    assert vertex_cover(star, "exact") == {0}
    assert len(vertex_cover(cycle(6), "exact")) == 3
    approx = vertex_cover(path(3), "approx2")
    assert len(approx) <= 2
    for u, v in path(3).edges:
        assert u in approx or v in approx


def test_vertex_cover_budget():
    with pytest.raises(GraphError):
        vertex_cover(cycle(8), "exact", budget=2)


def test_hyperbolicity_values():
    assert hyperbolicity2(all_pairs_distances(random_tree(12, 0))) == 0
    assert hyperbolicity2(all_pairs_distances(cycle(4))) == 2
    assert hyperbolicity2(all_pairs_distances(cycle(6))) == 2
    assert hyperbolicity2(all_pairs_distances(path(3))) == 0


def test_hyperbolicity_relabel_invariant():
    g = cycle(7)
    perm = [3, 5, 0, 1, 6, 2, 4]
    edges = [(perm[u], perm[v]) for u, v in g.edges]
    h = Graph(7, edges)
    assert hyperbolicity2(all_pairs_distances(g)) == hyperbolicity2(all_pairs_distances(h))


def test_hausdorff_examples():
    d = all_pairs_distances(path(3))
    assert hausdorff_distance({1}, {0, 1, 2}, d) == 1
    assert hausdorff_distance({0, 1}, {0, 1}, d) == 0
    d6 = all_pairs_distances(cycle(6))
    assert hausdorff_distance({5, 0, 1}, {2, 3, 4}, d6) == 2


def test_octahedron_shape():
    g = octahedron(3)
    assert g.n == 6
    for v in range(6):
        assert g.degree(v) == 4
    d = all_pairs_distances(g)
    assert d.diameter() == 2
