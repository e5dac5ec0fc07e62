"""Graph type and metric primitives.

Vertices are the integers ``0..n-1``.  Graphs are simple and undirected;
metric operations additionally require connectivity and raise
:class:`GraphError` otherwise.  Hot paths encode vertex sets as Python int
bitmasks (bit ``v`` set means vertex ``v`` belongs to the set); public entry
points accept and return frozensets.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from itertools import combinations


class GraphError(ValueError):
    """An input graph violates a structural precondition."""


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def set_of(mask: int) -> frozenset:
    return frozenset(iter_bits(mask))


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "_edges")

    def __init__(self, n: int, edges):
        if n <= 0:
            raise GraphError("graph needs at least one vertex")
        seen = set()
        adj = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u} not allowed")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.adj = tuple(tuple(sorted(nbrs)) for nbrs in adj)
        self._edges = tuple(sorted(seen))

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self):
        return self._edges

    def neighbors(self, v: int):
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def is_connected(self) -> bool:
        return self.n == 1 or -1 not in bfs_distances(self, 0)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; unreachable vertices get ``-1``."""
    dist = [-1] * g.n
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        du = dist[u] + 1
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = du
                q.append(w)
    return dist


class DistanceMatrix:
    """All-pairs hop distances of a connected graph."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = rows

    @property
    def n(self) -> int:
        return len(self.rows)

    def d(self, u: int, v: int) -> int:
        return self.rows[u][v]

    def row(self, u: int):
        return self.rows[u]

    def eccentricity(self, u: int) -> int:
        return max(self.rows[u])

    def diameter(self) -> int:
        return max(max(r) for r in self.rows)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    rows = []
    for s in range(g.n):
        dist = bfs_distances(g, s)
        if -1 in dist:
            t = dist.index(-1)
            raise GraphError(
                f"graph is disconnected: vertices {s} and {t} are mutually unreachable"
            )
        rows.append(tuple(dist))
    return DistanceMatrix(tuple(rows))


def interval_vertices(d: DistanceMatrix, u: int, v: int) -> frozenset:
    """Vertices lying on at least one shortest path between u and v."""
    duv = d.rows[u][v]
    ru, rv = d.rows[u], d.rows[v]
    return frozenset(w for w in range(d.n) if ru[w] + rv[w] == duv)


def diametral_pair(members, d: DistanceMatrix) -> tuple[int, int]:
    """Lexicographically least pair (u, v), u <= v, realizing diam(members)."""
    ms = sorted(members)
    if not ms:
        raise ValueError("empty vertex set has no diametral pair")
    if len(ms) == 1:
        return (ms[0], ms[0])
    best = (ms[0], ms[0])
    best_d = 0
    for i, u in enumerate(ms):
        row = d.rows[u]
        for v in ms[i + 1:]:
            if row[v] > best_d:
                best_d = row[v]
                best = (u, v)
    return best


def false_twin_classes(g: Graph) -> list[tuple[int, ...]]:
    """Partition of V into classes with equal open neighborhoods."""
    groups: dict = {}
    for v in range(g.n):
        groups.setdefault(g.adj[v], []).append(v)
    return sorted((tuple(vs) for vs in groups.values()), key=lambda c: c[0])


def vertex_cover(g: Graph, mode: str = "approx2", budget: int = 20) -> frozenset:
    """A vertex cover, either 2-approximate (maximal matching) or minimum.

    Exact mode branches on edges and refuses covers larger than ``budget``.
    """
    if mode == "approx2":
        cover = set()
        for u, v in g.edges:
            if u not in cover and v not in cover:
                cover.add(u)
                cover.add(v)
        return frozenset(cover)
    if mode == "exact":
        return _vertex_cover_exact(g, budget)
    raise ValueError(f"unknown vertex cover mode {mode!r}")


def _vertex_cover_exact(g: Graph, budget: int) -> frozenset:
    edges = g.edges
    best: set | None = None

    def first_uncovered(cover):
        for e in edges:
            if e[0] not in cover and e[1] not in cover:
                return e
        return None

    def search(cover):
        nonlocal best
        limit = budget if best is None else min(budget, len(best) - 1)
        if len(cover) > limit:
            return
        e = first_uncovered(cover)
        if e is None:
            if best is None or len(cover) < len(best):
                best = set(cover)
            return
        for w in e:
            cover.add(w)
            search(cover)
            cover.discard(w)

    search(set())
    if best is None:
        raise GraphError(f"exact vertex cover exceeds the size budget {budget}")
    return frozenset(best)


def hyperbolicity2(d: DistanceMatrix) -> int:
    """Twice the four-point hyperbolicity, as an exact integer.

    For every quadruple the three pairwise distance sums are formed; the
    result is the largest gap between the two biggest sums.  Fewer than four
    vertices give 0.
    """
    n = d.n
    if n < 4:
        return 0
    rows = d.rows
    best = 0
    for u, v, x, y in combinations(range(n), 4):
        ru, rv, rx = rows[u], rows[v], rows[x]
        s1 = ru[v] + rx[y]
        s2 = ru[x] + rv[y]
        s3 = ru[y] + rv[x]
        hi = s1 if s1 >= s2 else s2
        if s3 > hi:
            hi = s3
        mid = s1 + s2 + s3 - hi - min(s1, s2, s3)
        if hi - mid > best:
            best = hi - mid
    return best


def hausdorff_distance(a, b, d: DistanceMatrix) -> int:
    """Hausdorff distance between two non-empty vertex sets."""
    av = sorted(getattr(a, "members", a))
    bv = sorted(getattr(b, "members", b))
    if not av or not bv:
        raise ValueError("hausdorff distance needs non-empty sets")
    rows = d.rows
    h = 0
    for u in av:
        ru = rows[u]
        m = min(ru[w] for w in bv)
        if m > h:
            h = m
    for w in bv:
        rw = rows[w]
        m = min(rw[u] for u in av)
        if m > h:
            h = m
    return h


class IntervalRepresentation:
    """Closed segments of the line, one per vertex, with pairwise distinct ends.

    Endpoints are stored as :class:`fractions.Fraction` so files may carry
    integer or rational values.
    """

    __slots__ = ("segments",)

    def __init__(self, segments):
        segs = []
        for s, e in segments:
            s, e = Fraction(s), Fraction(e)
            if s > e:
                raise GraphError(f"segment [{s},{e}] has its start after its end")
            segs.append((s, e))
        ends = [p for seg in segs for p in seg]
        if len(set(ends)) != len(ends):
            raise GraphError("interval representation has coinciding endpoints")
        self.segments = tuple(segs)

    @property
    def n(self) -> int:
        return len(self.segments)

    def intersects(self, u: int, v: int) -> bool:
        su, eu = self.segments[u]
        sv, ev = self.segments[v]
        return su <= ev and sv <= eu

    def induced_graph(self) -> Graph:
        n = self.n
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if self.intersects(u, v)]
        return Graph(n, edges)

    def validate_for(self, g: Graph) -> None:
        if self.n != g.n or self.induced_graph() != g:
            raise GraphError("interval representation does not match the graph")
