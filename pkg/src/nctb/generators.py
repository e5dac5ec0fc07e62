"""Deterministic instance generators.

Every randomized generator is a pure function of (n, seed).
"""

from __future__ import annotations

import random

from .graphs import Graph, GraphError, IntervalRepresentation


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def octahedron(n: int) -> Graph:
    """K_{2n} minus the perfect matching pairing i with i + n."""
    if n < 2:
        raise GraphError("octahedron needs n >= 2")
    edges = [
        (u, v)
        for u in range(2 * n)
        for v in range(u + 1, 2 * n)
        if v - u != n
    ]
    return Graph(2 * n, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("complete bipartite graph needs both sides non-empty")
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree via a Pruefer sequence."""
    if n < 1:
        raise GraphError("tree needs n >= 1")
    if n == 1:
        return Graph(1, [])
    if n == 2:
        return Graph(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    leaf_heap = sorted(v for v in range(n) if degree[v] == 1)
    import heapq

    heapq.heapify(leaf_heap)
    for v in seq:
        u = heapq.heappop(leaf_heap)
        edges.append((u, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaf_heap, v)
    u = heapq.heappop(leaf_heap)
    w = heapq.heappop(leaf_heap)
    edges.append((u, w))
    return Graph(n, edges)


def random_cactus(n: int, seed: int) -> Graph:
    """Random cactus grown by attaching pendant edges and cycles."""
    if n < 1:
        raise GraphError("cactus needs n >= 1")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    size = 1
    while size < n:
        a = rng.randrange(size)
        remaining = n - size
        if remaining < 2 or rng.random() < 0.4:
            edges.append((a, size))
            size += 1
        else:
            length = rng.randint(3, min(8, remaining + 1))
            ring = [a] + list(range(size, size + length - 1))
            for i in range(len(ring)):
                edges.append((ring[i], ring[(i + 1) % len(ring)]))
            size += length - 1
    return Graph(n, edges)


def random_interval(n: int, seed: int) -> tuple[Graph, IntervalRepresentation]:
    """Connected random interval graph with its representation."""
    if n < 1:
        raise GraphError("interval graph needs n >= 1")
    if n == 1:
        rep = IntervalRepresentation([(0, 1)])
        return Graph(1, []), rep
    for attempt in range(1000):
        rng = random.Random(f"{seed}:{attempt}")
        points = rng.sample(range(1, 12 * n), 2 * n)
        rng.shuffle(points)
        segs = []
        for i in range(n):
            a, b = points[2 * i], points[2 * i + 1]
            segs.append((min(a, b), max(a, b)))
        rep = IntervalRepresentation(segs)
        g = rep.induced_graph()
        if g.is_connected():
            return g, rep
    raise GraphError("failed to generate a connected interval graph")


def random_connected(n: int, seed: int, p: float = 0.25) -> Graph:
    """Random connected graph: random tree plus independent extra edges."""
    tree = random_tree(n, seed)
    rng = random.Random(f"{seed}:extra")
    edges = set(tree.edges)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    return Graph(n, sorted(edges))


def edgeless(n: int) -> Graph:
    if n < 1:
        raise GraphError("graph needs n >= 1")
    return Graph(n, [])
