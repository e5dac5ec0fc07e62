"""Property-based invariants over randomized graphs and families."""

from hypothesis import given, settings
from hypothesis import strategies as st

from nctb.balls import ball, enumerate_balls
from nctb.generators import random_cactus, random_connected, random_tree
from nctb.graphs import all_pairs_distances, bfs_distances, hausdorff_distance
from nctb.teaching import balls_as_concept_class, verify


def connected_graphs(max_n=10):
    return st.builds(
        lambda n, seed, p: random_connected(n, seed, p),
        st.integers(2, max_n),
        st.integers(0, 10**6),
        st.floats(0.1, 0.6),
    )


@given(connected_graphs(), st.integers(0, 12), st.data())
@settings(max_examples=60, deadline=None)
def test_ball_monotone_in_radius(g, r, data):
    x = data.draw(st.integers(0, g.n - 1))
    inner = ball(g, x, r).members
    outer = ball(g, x, r + 1).members
    assert inner <= outer
    ecc = max(bfs_distances(g, x))
    assert ball(g, x, ecc).members == frozenset(range(g.n))


@given(connected_graphs(9), st.data())
@settings(max_examples=40, deadline=None)
def test_hausdorff_matches_inflated_inclusion(g, data):
    d = all_pairs_distances(g)
    fam = enumerate_balls(g)
    i = data.draw(st.integers(0, len(fam) - 1))
    j = data.draw(st.integers(0, len(fam) - 1))
    rho = data.draw(st.integers(0, 4))
    a, b = fam.members(i), fam.members(j)
    (xa, ra), (xb, rb) = fam.canonical[i], fam.canonical[j]
    lhs = hausdorff_distance(a, b, d) <= rho
    rhs = a <= ball(g, xb, rb + rho).members and b <= ball(g, xa, ra + rho).members
    assert lhs == rhs


@given(st.integers(4, 18), st.integers(0, 10**6))
@settings(max_examples=30, deadline=None)
def test_twin_relabeling_keeps_family(n, seed):
    from nctb.graphs import Graph, false_twin_classes

    g = random_tree(n, seed)
    twins = next((c for c in false_twin_classes(g) if len(c) >= 2), None)
    if twins is None:
        return
    a, b = twins[0], twins[1]
    perm = list(range(g.n))
    perm[a], perm[b] = b, a
    h = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
    fam_g = enumerate_balls(g)
    fam_h = enumerate_balls(h)
    relabeled = {frozenset(perm[v] for v in fam_g.members(i)) for i in range(len(fam_g))}
    assert relabeled == {fam_h.members(i) for i in range(len(fam_h))}


@given(st.integers(3, 16), st.integers(0, 10**6))
@settings(max_examples=25, deadline=None)
def test_tree_map_invariant(n, seed):
    from nctb.constructors import tree_nctm_plus

    g = random_tree(n, seed)
    tm = tree_nctm_plus(g)
    rep = verify(balls_as_concept_class(enumerate_balls(g)), tm, True)
    assert rep.ok and rep.size <= 2


@given(st.integers(3, 16), st.integers(0, 10**6))
@settings(max_examples=25, deadline=None)
def test_cactus_map_invariant(n, seed):
    from nctb.constructors import cactus_nctm

    g = random_cactus(n, seed)
    tm = cactus_nctm(g)
    rep = verify(balls_as_concept_class(enumerate_balls(g)), tm, False)
    assert rep.ok and rep.size <= 4


@given(st.integers(2, 7), st.integers(0, 10**5))
@settings(max_examples=15, deadline=None)
def test_unique_identifiers_never_clash(n, seed):
    """Concepts whose map uniquely identifies them among realizable ones are clash-free."""
    from nctb.solver import nctd_exact

    g = random_connected(n, seed, 0.4)
    cc = balls_as_concept_class(enumerate_balls(g))
    res = nctd_exact(cc, positive_only=True)
    rep = verify(cc, res.witness, True)
    assert rep.ok


@given(st.integers(2, 6), st.integers(1, 8), st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_definitive_samples_never_clash(ground, count, seed):
    """Fully signed samples identify their concept, so no pair clashes."""
    import random as _random

    from nctb.teaching import ConceptClass, SignedSample, TeachingMap

    rng = _random.Random(seed)
    pool = list(range(1 << ground))
    rng.shuffle(pool)
    masks = pool[: min(count, len(pool))]
    concepts = [frozenset(v for v in range(ground) if m >> v & 1) for m in masks]
    cc = ConceptClass(ground, concepts)
    universe = frozenset(range(ground))
    tm = TeachingMap([SignedSample(c, universe - c) for c in concepts])
    assert verify(cc, tm).ok


def _naive_verify_ok(concepts, samples, positive_only):
    """Independent reimplementation of the verifier from the definitions."""
    for c, s in zip(concepts, samples):
        if not (s.positive <= c and not (s.negative & c)):
            return False
        if positive_only and s.negative:
            return False
    for i in range(len(concepts)):
        for j in range(len(concepts)):
            if i == j:
                continue
            ci, cj = concepts[i], concepts[j]
            ti, tj = samples[i], samples[j]
            cross_ij = ti.positive <= cj and not (ti.negative & cj)
            cross_ji = tj.positive <= ci and not (tj.negative & ci)
            if cross_ij and cross_ji:
                return False
    return True


@given(st.integers(2, 6), st.integers(2, 8), st.integers(0, 10**6), st.booleans())
@settings(max_examples=80, deadline=None)
def test_verifier_agrees_with_naive_definition(ground, count, seed, positive_only):
    import random as _random

    from nctb.teaching import ConceptClass, SignedSample, TeachingMap

    rng = _random.Random(seed)
    pool = list(range(1, 1 << ground))
    rng.shuffle(pool)
    masks = pool[: min(count, len(pool))]
    concepts = [frozenset(v for v in range(ground) if m >> v & 1) for m in masks]
    samples = []
    for c in concepts:
        pos = frozenset(v for v in c if rng.random() < 0.5)
        neg = frozenset(v for v in range(ground)
                        if v not in c and rng.random() < 0.3)
        if rng.random() < 0.15:  # sprinkle in broken samples too
            pos = pos | {rng.randrange(ground)}
            neg = neg - pos
        samples.append(SignedSample(pos, neg))
    cc = ConceptClass(ground, concepts)
    tm = TeachingMap(samples)
    assert verify(cc, tm, positive_only).ok == _naive_verify_ok(
        concepts, samples, positive_only
    )
