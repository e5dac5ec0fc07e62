import pytest

from nctb.balls import enumerate_balls
from nctb.generators import cycle, edgeless, octahedron, path
from nctb.graphs import Graph
from nctb.solver import BUDGET_EXCEEDED, NO, YES, nctd_decision, nctd_exact
from nctb.teaching import ConceptClass, balls_as_concept_class, verify


def ball_class(g):
    return balls_as_concept_class(enumerate_balls(g))


def test_edgeless_positive_k1_yes():
    res = nctd_decision(ball_class(edgeless(3)), 1, True)
    assert res.answer == YES
    assert res.witness.size <= 1


def test_k2_positive_k1_no():
    assert nctd_decision(ball_class(Graph(2, [(0, 1)])), 1, True).answer == NO


def test_every_small_graph_with_an_edge_fails_positive_k1(tiny_graph_corpus):
    for g in tiny_graph_corpus:
        if g.m >= 1 and g.n <= 6:
            assert nctd_decision(ball_class(g), 1, True).answer == NO


def test_cycle_signed_values():
    for n in (6, 7, 8):
        res = nctd_exact(ball_class(cycle(n)), positive_only=False, budget=10**7)
        assert res.k == 2 and res.status == "optimal"
        assert res.no_upto == 1


def test_cycle_positive_lower_bounds():
    assert nctd_decision(ball_class(cycle(4)), 1, True).answer == NO
    assert nctd_decision(ball_class(cycle(6)), 2, True).answer == NO


def test_c6_positive_exact_is_six():
    # every almost-full ball forces its missing vertex into the full ball's
    # teaching set, so the positive-only size equals n here
    res = nctd_exact(ball_class(cycle(6)), positive_only=True)
    assert res.k == 6


def test_octahedron_positive_gap():
    cc = ball_class(octahedron(3))
    assert nctd_decision(cc, 5, True).answer == NO
    assert nctd_exact(cc, positive_only=True).k == 6


def test_witness_always_verifies(tiny_graph_corpus):
    for g in tiny_graph_corpus:
        cc = ball_class(g)
        for positive_only in (False, True):
            res = nctd_exact(cc, positive_only)
            assert res.k is not None
            rep = verify(cc, res.witness, positive_only)
            assert rep.ok and rep.size <= res.k


def test_signed_never_beats_positive(tiny_graph_corpus):
    for g in tiny_graph_corpus:
        cc = ball_class(g)
        signed = nctd_exact(cc, False).k
        positive = nctd_exact(cc, True).k
        assert signed <= positive


def test_trees_and_intervals_positive_at_most_two(small_tree_corpus):
    from nctb.generators import random_interval

    for g in small_tree_corpus[:4]:
        if g.n <= 7:
            assert nctd_exact(ball_class(g), True).k <= 2
    for seed in range(4):
        g, _rep = random_interval(6, seed)
        assert nctd_exact(ball_class(g), True).k <= 2


def test_monotone_in_k():
    cc = ball_class(cycle(6))
    answers = [nctd_decision(cc, k, False).answer for k in range(0, 4)]
    first_yes = answers.index(YES)
    assert all(a == NO for a in answers[:first_yes])
    assert all(a == YES for a in answers[first_yes:])


def test_determinism():
    cc = ball_class(cycle(7))
    r1 = nctd_exact(cc, False)
    r2 = nctd_exact(cc, False)
    assert r1.k == r2.k
    assert r1.witness == r2.witness
    assert r1.nodes_explored == r2.nodes_explored


def test_budget_exhaustion_is_explicit():
    cc = ball_class(cycle(7))
    res = nctd_decision(cc, 2, False, budget=5)
    assert res.answer == BUDGET_EXCEEDED
    assert res.witness is None
    full = nctd_exact(cc, False, budget=10)
    assert full.status == BUDGET_EXCEEDED and full.k is None


def test_kmax_exhaustion():
    res = nctd_exact(ball_class(Graph(2, [(0, 1)])), True, kmax=1)
    assert res.k is None and res.no_upto == 1
    assert res.status == BUDGET_EXCEEDED


def test_single_concept_class():
    cc = ConceptClass(2, [{0}])
    res = nctd_decision(cc, 0, True)
    assert res.answer == YES and res.witness.size == 0


def test_input_validation():
    cc = ball_class(path(3))
    with pytest.raises(ValueError):
        nctd_decision(cc, -1, True)
    with pytest.raises(ValueError):
        nctd_decision(ConceptClass(2, []), 1, True)
