"""False-twin kernelization for positive-only teaching of ball families.

Given a vertex cover X, the complement I is independent and every vertex of
I is described by its neighborhood inside X.  Once a twin class inside I
holds more than 2^|X| + 1 vertices, deleting one of them does not change
whether a positive-only non-clashing map of any given size exists, so the
kernel keeps at most 2^|X| + 1 vertices per class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .balls import enumerate_balls
from .graphs import Graph, GraphError, false_twin_classes, vertex_cover
from .solver import SolveResult, nctd_exact
from .teaching import balls_as_concept_class


@dataclass(frozen=True)
class KernelTrace:
    cover: frozenset  # in original vertex ids
    deletions: tuple  # (original id, original ids of its twin class at deletion)
    kernel: Graph
    vertex_map: dict  # original id -> kernel id, or None when deleted


def rr1_step(g: Graph, cover) -> tuple[Graph, int] | None:
    """Delete one member of an oversized false-twin class outside the cover.

    Returns the reduced graph (vertices above the deleted one shift down by
    one) and the deleted vertex, or None when no class exceeds 2^|X| + 1.
    The deleted vertex is the largest id in the first oversized class.
    """
    cover = frozenset(cover)
    for u, v in g.edges:
        if u not in cover and v not in cover:
            raise GraphError(f"set is not a vertex cover: edge ({u},{v}) uncovered")
    threshold = (1 << len(cover)) + 1
    for cls in false_twin_classes(g):
        members = [v for v in cls if v not in cover]
        if len(members) > threshold:
            victim = members[-1]
            return _delete_vertex(g, victim), victim
    return None


def _delete_vertex(g: Graph, victim: int) -> Graph:
    def new_id(v):
        return v if v < victim else v - 1

    edges = [(new_id(u), new_id(v)) for u, v in g.edges if victim not in (u, v)]
    return Graph(g.n - 1, edges)


def kernelize(g: Graph, cover_mode: str = "approx2") -> KernelTrace:
    """Exhaustively apply the twin deletion rule with a computed cover."""
    if not g.is_connected():
        raise GraphError("kernelization expects a connected graph")
    cover = vertex_cover(g, cover_mode)
    to_original = list(range(g.n))
    current = g
    current_cover = set(cover)
    deletions = []
    while True:
        step = rr1_step(current, current_cover)
        if step is None:
            break
        reduced, victim = step
        victim_class = next(
            cls for cls in false_twin_classes(current)
            if victim in cls
        )
        deletions.append((
            to_original[victim],
            tuple(to_original[w] for w in victim_class if w not in current_cover),
        ))
        del to_original[victim]
        current_cover = {v if v < victim else v - 1 for v in current_cover}
        current = reduced
    vertex_map: dict[int, int | None] = {v: None for v in range(g.n)}
    for new, old in enumerate(to_original):
        vertex_map[old] = new
    xsize = len(cover)
    bound = (1 << xsize) * ((1 << xsize) + 1) + xsize
    if current.n > bound:
        raise RuntimeError("kernel exceeds its size bound; internal error")
    return KernelTrace(cover, tuple(deletions), current, vertex_map)


def solve_via_kernel(g: Graph, positive_only: bool = True, kmax: int | None = None,
                     budget: int = 10**7, cover_mode: str = "approx2") -> SolveResult:
    """Kernelize, then run the exact solver on the kernel's ball family.

    Only the positive-only variant is supported: twin deletion is only known
    to preserve that one.
    """
    if not positive_only:
        raise ValueError("the kernel pipeline supports positive-only mode only")
    trace = kernelize(g, cover_mode)
    cc = balls_as_concept_class(enumerate_balls(trace.kernel))
    return nctd_exact(cc, True, kmax, budget)
