"""Balls of a graph: single balls, the deduplicated family, VC-dimension.

The family of distinct balls is the concept class most of this package works
over.  Enumeration visits every (center, radius) pair with the radius capped
at the center's eccentricity; larger radii repeat the eccentricity ball.  On
a disconnected graph the enumeration is per component, radii capped at the
component eccentricity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError, bfs_distances, mask_of, set_of


@dataclass(frozen=True)
class Ball:
    center: int
    radius: int
    members: frozenset


def ball(g: Graph, x: int, r: int) -> Ball:
    """The ball of radius r around x; r past the eccentricity gives everything reachable."""
    if not 0 <= x < g.n:
        raise GraphError(f"center {x} out of range for n={g.n}")
    if r < 0:
        raise ValueError("radius must be non-negative")
    row = bfs_distances(g, x)
    return Ball(x, r, frozenset(v for v, dv in enumerate(row) if 0 <= dv <= r))


class BallFamily:
    """All distinct balls of a graph, with full representative bookkeeping.

    ``masks[i]`` is the i-th class as a bitmask, classes sorted by ascending
    mask value.  ``reps[i]`` lists every (center, radius) realizing the class;
    ``canonical[i]`` is the minimum-radius one, ties broken by center id.
    """

    __slots__ = ("n", "masks", "reps", "canonical", "_index")

    def __init__(self, n: int, masks, reps):
        self.n = n
        self.masks = tuple(masks)
        self.reps = tuple(tuple(r) for r in reps)
        self.canonical = tuple(min(rs, key=lambda cr: (cr[1], cr[0])) for rs in self.reps)
        self._index = {m: i for i, m in enumerate(self.masks)}

    def __len__(self) -> int:
        return len(self.masks)

    def members(self, i: int) -> frozenset:
        return set_of(self.masks[i])

    def index_of(self, members) -> int:
        m = members if isinstance(members, int) else mask_of(members)
        try:
            return self._index[m]
        except KeyError:
            raise KeyError("vertex set is not a ball of this graph") from None


def enumerate_balls(g: Graph) -> BallFamily:
    by_mask: dict[int, list[tuple[int, int]]] = {}
    for x in range(g.n):
        row = bfs_distances(g, x)
        ecc = max(dv for dv in row if dv >= 0)
        layers: list[list[int]] = [[] for _ in range(ecc + 1)]
        for v, dv in enumerate(row):
            if dv >= 0:
                layers[dv].append(v)
        m = 0
        for r in range(ecc + 1):
            for v in layers[r]:
                m |= 1 << v
            by_mask.setdefault(m, []).append((x, r))
    masks = sorted(by_mask)
    return BallFamily(g.n, masks, [by_mask[m] for m in masks])


@dataclass(frozen=True)
class VCDimension:
    value: int
    witness: tuple[int, ...]
    maybe_larger: bool


def vc_dimension_of_balls(g: Graph, dmax: int, family: BallFamily | None = None) -> VCDimension:
    """Largest d <= dmax with a d-subset of V shattered by the ball family.

    Candidate sets grow level by level; a set can only be shattered when all
    its subsets are, so each level extends the previous one (apriori-style).
    If shattered sets still exist at dmax the result is flagged maybe_larger.
    """
    fam = family if family is not None else enumerate_balls(g)
    masks = fam.masks
    n = fam.n
    prev: list[tuple[int, ...]] = [()]
    d = 0
    witness: tuple[int, ...] = ()
    while d < dmax:
        prev_set = set(prev)
        level = []
        for s in prev:
            start = s[-1] + 1 if s else 0
            for v in range(start, n):
                t = s + (v,)
                if len(t) >= 2 and any(
                    t[:i] + t[i + 1:] not in prev_set for i in range(len(t) - 1)
                ):
                    continue
                if _shatters(masks, t):
                    level.append(t)
        if not level:
            return VCDimension(d, witness, False)
        d += 1
        witness = level[0]
        prev = level
    return VCDimension(d, witness, True)


def _shatters(masks, subset) -> bool:
    k = len(subset)
    want = 1 << k
    bits = [1 << v for v in subset]
    seen = set()
    for m in masks:
        tr = 0
        for i, b in enumerate(bits):
            if m & b:
                tr |= 1 << i
        if tr not in seen:
            seen.add(tr)
            if len(seen) == want:
                return True
    return False
