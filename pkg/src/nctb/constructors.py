"""Constructive teaching maps for specific graph classes.

Each constructor returns a teaching map positionally aligned with
``enumerate_balls(g)`` (so with ``balls_as_concept_class`` of that family).
Trees, interval graphs, and the hyperbolic construction give positive-only
maps of size at most 2; cycles give signed maps of size at most 2; cacti give
signed maps of size at most 4.
"""

from __future__ import annotations

from .balls import enumerate_balls
from .cactus import CactusStructure, apex, gate
from .graphs import (
    Graph,
    GraphError,
    IntervalRepresentation,
    all_pairs_distances,
    diametral_pair,
    mask_of,
)
from .teaching import EMPTY_SAMPLE, SignedSample, TeachingMap, positive_sample


def tree_nctm_plus(g: Graph) -> TeachingMap:
    """Each ball teaches a diametral pair; radius-0 balls teach themselves."""
    if not g.is_connected() or g.m != g.n - 1:
        raise GraphError("input is not a tree")
    d = all_pairs_distances(g)
    fam = enumerate_balls(g)
    samples = []
    for i in range(len(fam)):
        u, v = diametral_pair(fam.members(i), d)
        samples.append(positive_sample({u, v}))
    return TeachingMap(samples)


def interval_nctm_plus(g: Graph, rep: IntervalRepresentation) -> TeachingMap:
    """Each ball teaches its leftmost-ending and rightmost-starting members."""
    rep.validate_for(g)
    fam = enumerate_balls(g)
    samples = []
    for i in range(len(fam)):
        mem = sorted(fam.members(i))
        if len(mem) == 1:
            samples.append(positive_sample(mem))
            continue
        u = min(mem, key=lambda w: rep.segments[w][1])
        v = max(mem, key=lambda w: rep.segments[w][0])
        if u == v:
            # Every other member's segment strictly contains u's, so teaching
            # u alone already pins the ball; a second member keeps the set
            # size at 2 and distinct from the radius-0 ball at u.
            other = min(w for w in mem if w != u)
            samples.append(positive_sample({u, other}))
        else:
            samples.append(positive_sample({u, v}))
    return TeachingMap(samples)


def cycle_nctm(n: int) -> TeachingMap:
    """Signed map for the balls of an n-cycle, n >= 3.

    A proper ball is an arc; it teaches its first vertex (positive) and the
    first vertex past its last one (negative), both in the fixed orientation
    of increasing index.  The full ball gets the empty sample.
    """
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    from .generators import cycle as cycle_graph

    g = cycle_graph(n)
    fam = enumerate_balls(g)
    full = frozenset(range(n))
    samples = []
    for i in range(len(fam)):
        if fam.members(i) == full:
            samples.append(EMPTY_SAMPLE)
            continue
        x, r = fam.canonical[i]
        first = (x - r) % n
        outside = (x + r + 1) % n
        samples.append(SignedSample(frozenset({first}), frozenset({outside})))
    return TeachingMap(samples)


def diam2_nctm(g: Graph) -> TeachingMap:
    """Signed size-2 map for diameter-2 graphs whose edges cover everything.

    Requires B_1(x) union B_1(y) = V for every edge xy.  Radius-0 balls teach
    themselves plus a neighbor negatively; proper unit balls teach the center
    plus a vertex at distance 2 negatively; the full ball is empty.
    """
    d = all_pairs_distances(g)
    if d.diameter() != 2:
        raise GraphError("graph must have diameter 2")
    full = (1 << g.n) - 1
    ball1 = [mask_of(w for w in range(g.n) if d.rows[x][w] <= 1) for x in range(g.n)]
    for u, v in g.edges:
        if ball1[u] | ball1[v] != full:
            raise GraphError(f"edge ({u},{v}) does not cover the graph with unit balls")
    fam = enumerate_balls(g)
    full_set = frozenset(range(g.n))
    samples = []
    for i in range(len(fam)):
        mem = fam.members(i)
        if mem == full_set:
            samples.append(EMPTY_SAMPLE)
            continue
        x, r = fam.canonical[i]
        if r == 0:
            y = g.adj[x][0]
            samples.append(SignedSample(frozenset({x}), frozenset({y})))
        else:
            z = min(w for w in range(g.n) if d.rows[x][w] == 2)
            samples.append(SignedSample(frozenset({x}), frozenset({z})))
    return TeachingMap(samples)


def hyperbolic_approx_nctm_plus(g: Graph) -> tuple[TeachingMap, int]:
    """Diametral-pair map plus twice the graph's hyperbolicity.

    The map is positive-only of size at most 2 and non-clashing for every
    pair of balls whose Hausdorff distance exceeds the returned value.
    """
    from .graphs import hyperbolicity2

    d = all_pairs_distances(g)
    delta2 = hyperbolicity2(d)
    fam = enumerate_balls(g)
    samples = []
    for i in range(len(fam)):
        u, v = diametral_pair(fam.members(i), d)
        samples.append(positive_sample({u, v}))
    return TeachingMap(samples), delta2


def cactus_nctm(g: Graph) -> TeachingMap:
    """Signed map of size at most 4 for a cactus (tree of cycles).

    Positives are a diametral pair.  Negatives come from the minimal-radius
    representative (x, r): among vertices at distance exactly r + 1 from x
    whose gate in x's cycle avoids the two arcs from x to the gates of the
    diametral pair, pick the one entered past each gate that lands farthest
    along the cycle.
    """
    struct = CactusStructure.build(g)
    d = all_pairs_distances(g)
    fam = enumerate_balls(g)
    samples = []
    for i in range(len(fam)):
        mem = fam.members(i)
        if len(mem) == 1:
            samples.append(positive_sample(mem))
            continue
        u, v = diametral_pair(mem, d)
        x, r = fam.canonical[i]
        if apex(d, x, u, v) != x:
            raise GraphError("minimal ball does not recenter to itself; not a cactus")
        negatives = _cactus_negatives(g, d, struct, mem, x, r, u, v)
        if negatives & mem:
            raise GraphError("negative teaching vertex inside its ball; construction bug")
        samples.append(SignedSample(frozenset({u, v}), negatives))
    return TeachingMap(samples)


def _cactus_negatives(g, d, struct, mem, x, r, u, v) -> frozenset:
    path = struct.path_blocks(u, v)
    holding = [bi for bi in path if x in struct.blocks[bi]]
    if not holding:
        raise GraphError("minimal center off the diametral path of cycles; not a cactus")
    if len(holding) > 1:
        return frozenset()  # x is a cut vertex between blocks of the path
    block = struct.blocks[holding[0]]
    gate_up = gate(d, u, block)
    gate_vp = gate(d, v, block)
    rx = d.rows[x]
    excluded = set()
    for w in block.vertices:
        if rx[w] + d.rows[w][gate_up] == rx[gate_up]:
            excluded.add(w)
        if rx[w] + d.rows[w][gate_vp] == rx[gate_vp]:
            excluded.add(w)
    candidates = []
    for z in range(g.n):
        if rx[z] != r + 1:
            continue
        zg = gate(d, z, block)
        if zg not in excluded:
            candidates.append((z, zg))
    if not candidates:
        return frozenset()
    negatives = set()
    for gp in (gate_up, gate_vp):
        side = [
            (z, zg)
            for z, zg in candidates
            if rx[gp] + d.rows[gp][z] == rx[z]
        ]
        if side:
            chosen = min(side, key=lambda zz: (-d.rows[gp][zz[1]], zz[0]))
            negatives.add(chosen[0])
    return frozenset(negatives)
