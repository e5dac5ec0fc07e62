import pytest

from nctb.balls import enumerate_balls
from nctb.cactus import CactusStructure, apex, gate
from nctb.constructors import (
    cactus_nctm,
    cycle_nctm,
    diam2_nctm,
    hyperbolic_approx_nctm_plus,
    interval_nctm_plus,
    tree_nctm_plus,
)
from nctb.generators import (
    complete_bipartite,
    cycle,
    octahedron,
    path,
    random_connected,
    random_interval,
    random_tree,
)
from nctb.graphs import Graph, GraphError, IntervalRepresentation, all_pairs_distances
from nctb.teaching import balls_as_concept_class, verify, verify_approx


def check_map(g, tm, positive_only, max_size):
    cc = balls_as_concept_class(enumerate_balls(g))
    rep = verify(cc, tm, positive_only)
    assert rep.ok, rep.violations[:5]
    assert rep.size <= max_size
    return rep


def test_tree_map_values_on_p3():
    g = path(3)
    fam = enumerate_balls(g)
    tm = tree_nctm_plus(g)
    assert tm[fam.index_of({0, 1, 2})].positive == {0, 2}
    assert tm[fam.index_of({0})].positive == {0}
    check_map(g, tm, True, 2)


def test_tree_map_rejects_non_trees():
    with pytest.raises(GraphError):
        tree_nctm_plus(cycle(4))


@pytest.mark.parametrize("seed", range(6))
def test_tree_map_random(seed):
    g = random_tree(30 + seed, seed)
    check_map(g, tree_nctm_plus(g), True, 2)


def test_interval_map_on_scaled_p3():
    rep = IntervalRepresentation([(0, 4), (2, 6), (5, 8)])
    g = rep.induced_graph()
    assert g == path(3)
    tm = interval_nctm_plus(g, rep)
    fam = enumerate_balls(g)
    assert tm[fam.index_of({0, 1, 2})].positive == {0, 2}
    assert tm[fam.index_of({1})].positive == {1}
    check_map(g, tm, True, 2)


def test_interval_map_degenerate_farthest_pair():
    # the middle segment is strictly contained in every other member segment
    rep = IntervalRepresentation([(1, 40), (20, 30), (0, 100), (90, 110)])
    g = rep.induced_graph()
    tm = interval_nctm_plus(g, rep)
    check_map(g, tm, True, 2)
    assert all(len(s.positive) in (1, 2) for s in tm)


@pytest.mark.parametrize("seed", range(6))
def test_interval_map_random(seed):
    g, rep = random_interval(20 + seed, seed)
    check_map(g, interval_nctm_plus(g, rep), True, 2)


def test_interval_map_rejects_mismatched_representation():
    rep = IntervalRepresentation([(0, 1), (2, 3)])
    with pytest.raises(GraphError):
        interval_nctm_plus(Graph(2, [(0, 1)]), rep)


def test_cycle_map_values_on_c6():
    tm = cycle_nctm(6)
    fam = enumerate_balls(cycle(6))
    s = tm[fam.index_of({5, 0, 1})]
    assert (s.positive, s.negative) == ({5}, {2})
    full = tm[fam.index_of(frozenset(range(6)))]
    assert not full.support
    # exactly one concept gets the empty sample
    assert sum(1 for t in tm if not t.support) == 1
    check_map(cycle(6), tm, False, 2)


@pytest.mark.parametrize("n", range(3, 15))
def test_cycle_map_all_sizes(n):
    check_map(cycle(n), cycle_nctm(n), False, 2)


def test_cactus_map_on_c6_values():
    g = cycle(6)
    fam = enumerate_balls(g)
    tm = cactus_nctm(g)
    s = tm[fam.index_of({5, 0, 1})]
    assert (s.positive, s.negative) == ({1, 5}, {2, 4})
    s = tm[fam.index_of({4, 5, 0, 1, 2})]
    assert (s.positive, s.negative) == ({1, 4}, {3})
    s = tm[fam.index_of(frozenset(range(6)))]
    assert (s.positive, s.negative) == ({0, 3}, frozenset())
    check_map(g, tm, False, 4)


def test_cactus_map_on_trees_has_no_negatives():
    for seed in range(4):
        g = random_tree(14, seed)
        tm = cactus_nctm(g)
        assert all(not s.negative for s in tm)
        check_map(g, tm, False, 2)


@pytest.mark.parametrize("seed", range(8))
def test_cactus_map_random(seed):
    from nctb.generators import random_cactus

    g = random_cactus(24 + seed, seed)
    tm = cactus_nctm(g)
    check_map(g, tm, False, 4)
    for s in tm:
        assert len(s.positive) <= 2 and len(s.negative) <= 2


def test_cactus_map_rejects_non_cactus():
    with pytest.raises(GraphError):
        cactus_nctm(complete_bipartite(2, 3))


def test_cactus_recentring_invariant():
    from nctb.balls import ball
    from nctb.generators import random_cactus
    from nctb.graphs import diametral_pair

    g = random_cactus(18, 4)
    d = all_pairs_distances(g)
    fam = enumerate_balls(g)
    for i in range(len(fam)):
        members = fam.members(i)
        u, v = diametral_pair(members, d)
        for x, r in fam.reps[i]:
            y = apex(d, x, u, v)
            assert ball(g, y, r - d.d(x, y)).members == members


def test_gate_and_apex_basics():
    g = random_tree(10, 2)
    d = all_pairs_distances(g)
    struct = CactusStructure.build(g)
    # tree gates: nearest endpoint of each edge block
    for blk in struct.blocks:
        for z in range(g.n):
            gz = gate(d, z, blk)
            assert all(d.d(z, w) == d.d(z, gz) + d.d(gz, w) for w in blk.vertices)
    # apex of x with u=v=x is x itself
    assert apex(d, 3, 3, 3) == 3


def test_hyperbolic_map_tree_exact():
    g = random_tree(16, 7)
    tm, delta2 = hyperbolic_approx_nctm_plus(g)
    assert delta2 == 0
    fam = enumerate_balls(g)
    rep = verify_approx(fam, tm, 0, all_pairs_distances(g))
    assert rep.ok


@pytest.mark.parametrize("seed", range(5))
def test_hyperbolic_map_random(seed):
    g = random_connected(16, seed, 0.25)
    tm, delta2 = hyperbolic_approx_nctm_plus(g)
    fam = enumerate_balls(g)
    rep = verify_approx(fam, tm, delta2, all_pairs_distances(g))
    assert rep.ok and rep.size <= 2


def test_diam2_map():
    g = octahedron(3)
    tm = diam2_nctm(g)
    check_map(g, tm, False, 2)
    g = complete_bipartite(3, 3)
    check_map(g, diam2_nctm(g), False, 2)


def test_diam2_map_rejects_c5():
    with pytest.raises(GraphError, match="does not cover"):
        diam2_nctm(cycle(5))


def test_diam2_map_rejects_wrong_diameter():
    with pytest.raises(GraphError):
        diam2_nctm(path(4))
