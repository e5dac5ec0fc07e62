"""Cactus structure: blocks, block tree, gates, and apexes.

A cactus is a connected graph whose 2-connected blocks are single edges or
simple cycles.  Blocks of a cactus are gated: every vertex z has a unique
gate in each block lying on shortest paths from z to the whole block.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import DistanceMatrix, Graph, GraphError


@dataclass(frozen=True)
class Block:
    vertices: tuple[int, ...]  # cycle order for cycles, the two ends for edges
    is_cycle: bool

    def __contains__(self, v: int) -> bool:
        return v in self.vertices


class CactusStructure:
    """Block decomposition of a cactus plus its block tree."""

    __slots__ = ("graph", "blocks", "cut_vertices", "_blocks_of", "_tree")

    def __init__(self, graph, blocks, cut_vertices, blocks_of, tree):
        self.graph = graph
        self.blocks = blocks
        self.cut_vertices = cut_vertices
        self._blocks_of = blocks_of
        self._tree = tree

    @classmethod
    def build(cls, g: Graph) -> "CactusStructure":
        if not g.is_connected():
            raise GraphError("cactus must be connected")
        comps = _biconnected_components(g)
        blocks = []
        for edge_list in comps:
            blocks.append(_classify_block(edge_list))
        blocks_of: list[list[int]] = [[] for _ in range(g.n)]
        for bi, blk in enumerate(blocks):
            for v in blk.vertices:
                blocks_of[v].append(bi)
        cut = frozenset(v for v in range(g.n) if len(blocks_of[v]) > 1)
        # Bipartite block tree: block node ("b", i), cut vertex node ("c", v).
        tree: dict = {}
        for bi, blk in enumerate(blocks):
            tree.setdefault(("b", bi), [])
            for v in blk.vertices:
                if v in cut:
                    tree[("b", bi)].append(("c", v))
                    tree.setdefault(("c", v), []).append(("b", bi))
        return cls(g, tuple(blocks), cut, tuple(tuple(b) for b in blocks_of),
                   {k: tuple(v) for k, v in tree.items()})

    def blocks_of(self, v: int) -> tuple[int, ...]:
        return self._blocks_of[v]

    def node_of(self, v: int):
        if v in self.cut_vertices:
            return ("c", v)
        return ("b", self._blocks_of[v][0])

    def path_blocks(self, u: int, v: int) -> list[int]:
        """Indices of the blocks on the block-tree path between u's and v's nodes.

        The union of these blocks is the path of cycles spanned by u and v.
        An empty list means u = v = a cut vertex (the path is a single node).
        """
        start, goal = self.node_of(u), self.node_of(v)
        if start == goal:
            return [start[1]] if start[0] == "b" else []
        parent = {start: None}
        queue = [start]
        while queue:
            node = queue.pop(0)
            if node == goal:
                break
            for nb in self._tree.get(node, ()):
                if nb not in parent:
                    parent[nb] = node
                    queue.append(nb)
        path = []
        node = goal
        while node is not None:
            path.append(node)
            node = parent[node]
        return [idx for kind, idx in reversed(path) if kind == "b"]


def _biconnected_components(g: Graph) -> list[list[tuple[int, int]]]:
    """Edge sets of the biconnected components (iterative Hopcroft-Tarjan)."""
    disc = [-1] * g.n
    low = [0] * g.n
    comps: list[list[tuple[int, int]]] = []
    estack: list[tuple[int, int]] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        work = [(root, -1, iter(g.adj[root]))]
        while work:
            u, parent, it = work[-1]
            descended = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == -1:
                    estack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    work.append((w, u, iter(g.adj[w])))
                    descended = True
                    break
                if disc[w] < disc[u]:
                    estack.append((u, w))
                    if disc[w] < low[u]:
                        low[u] = disc[w]
            if descended:
                continue
            work.pop()
            if work:
                p = work[-1][0]
                if low[u] < low[p]:
                    low[p] = low[u]
                if low[u] >= disc[p]:
                    comp = []
                    while estack:
                        e = estack.pop()
                        comp.append(e)
                        if e == (p, u):
                            break
                    comps.append(comp)
    return comps


def _classify_block(edge_list) -> Block:
    verts = sorted({v for e in edge_list for v in e})
    ne = len(edge_list)
    if ne == 1:
        return Block(tuple(verts), False)
    if ne != len(verts):
        raise GraphError("graph is not a cactus: a block is neither an edge nor a cycle")
    adj: dict[int, list[int]] = {v: [] for v in verts}
    for a, b in edge_list:
        adj[a].append(b)
        adj[b].append(a)
    if any(len(nb) != 2 for nb in adj.values()):
        raise GraphError("graph is not a cactus: a block is neither an edge nor a cycle")
    order = [verts[0]]
    prev = None
    while len(order) < len(verts):
        cur = order[-1]
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        prev = cur
        order.append(nxt)
    return Block(tuple(order), True)


def is_cactus(g: Graph) -> bool:
    try:
        CactusStructure.build(g)
        return True
    except GraphError:
        return False


def gate(d: DistanceMatrix, z: int, block: Block) -> int:
    """The gate of z in a gated block: its unique distance minimizer.

    Raises GraphError when the minimizer is not unique or does not lie on
    shortest paths to the whole block, both of which signal a non-cactus.
    """
    row = d.rows[z]
    best = min(block.vertices, key=lambda w: row[w])
    bd = row[best]
    for w in block.vertices:
        if w != best and row[w] == bd:
            raise GraphError("block is not gated (two nearest vertices); not a cactus")
    for w in block.vertices:
        if row[w] != bd + d.rows[best][w]:
            raise GraphError("gate property violated; not a cactus")
    return best


def apex(d: DistanceMatrix, x: int, u: int, v: int) -> int:
    """The farthest vertex from x on shortest paths from x to both u and v.

    Unique in a cactus; a tie means the input is not a cactus.
    """
    rx, ru, rv = d.rows[x], d.rows[u], d.rows[v]
    dxu, dxv = rx[u], rx[v]
    best = x
    bd = 0
    tie = False
    for y in range(d.n):
        if rx[y] + ru[y] == dxu and rx[y] + rv[y] == dxv:
            if rx[y] > bd:
                bd = rx[y]
                best = y
                tie = False
            elif rx[y] == bd and y != best:
                tie = True
    if tie:
        raise GraphError("apex is not unique; not a cactus")
    return best
