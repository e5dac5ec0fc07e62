import pytest

from nctb.balls import enumerate_balls
from nctb.generators import complete_bipartite, cycle, path
from nctb.graphs import Graph, GraphError, vertex_cover
from nctb.kernel import kernelize, rr1_step, solve_via_kernel
from nctb.solver import nctd_exact
from nctb.teaching import balls_as_concept_class


def planted_twin_graph(base_edges, base_n, classes, seed=0):
    """Attach twin classes to a small base: classes = [(attach set, count)]."""
    edges = list(base_edges)
    n = base_n
    for attach, count in classes:
        for _ in range(count):
            for a in attach:
                edges.append((a, n))
            n += 1
    return Graph(n, edges)


def test_rr1_on_star():
    g = complete_bipartite(1, 7)
    step = rr1_step(g, {0})
    assert step is not None
    reduced, victim = step
    assert victim == 7  # largest id in the oversized class
    assert reduced.n == 7


def test_rr1_none_when_class_small_enough():
    assert rr1_step(path(3), {1}) is None
    assert rr1_step(cycle(6), frozenset({0, 2, 4})) is None


def test_rr1_requires_a_cover():
    with pytest.raises(GraphError):
        rr1_step(cycle(6), {0, 1})


def test_kernelize_star_exact_cover():
    trace = kernelize(complete_bipartite(1, 7), "exact")
    assert trace.kernel == complete_bipartite(1, 3)
    assert trace.cover == {0}
    assert [d[0] for d in trace.deletions] == [7, 6, 5, 4]
    assert trace.vertex_map[0] == 0 and trace.vertex_map[7] is None


def test_kernelize_c6_unchanged():
    trace = kernelize(cycle(6))
    assert trace.kernel == cycle(6)
    assert not trace.deletions


def test_kernel_idempotent():
    trace = kernelize(complete_bipartite(1, 9), "exact")
    again = kernelize(trace.kernel, "exact")
    assert not again.deletions


def test_kernel_size_bound():
    for b in (5, 9, 12):
        trace = kernelize(complete_bipartite(1, b), "exact")
        x = len(trace.cover)
        assert trace.kernel.n <= (1 << x) * ((1 << x) + 1) + x


def test_rr1_never_deletes_cover_or_disconnects():
    g = planted_twin_graph([(0, 1)], 2, [((0,), 6), ((1,), 2), ((0, 1), 1)])
    cover = vertex_cover(g, "exact")
    current = g
    cur_cover = set(cover)
    while True:
        step = rr1_step(current, cur_cover)
        if step is None:
            break
        current, victim = step
        assert victim not in cur_cover
        cur_cover = {v if v < victim else v - 1 for v in cur_cover}
        assert current.is_connected()


@pytest.mark.parametrize("classes", [
    [((0,), 6)],
    [((0,), 6), ((1,), 1)],
    [((0,), 7), ((0, 1), 1)],
])
def test_rr1_safety_per_step(classes):
    g = planted_twin_graph([(0, 1)], 2, classes)
    cover = vertex_cover(g, "exact")
    current = g
    cur_cover = set(cover)
    k = nctd_exact(balls_as_concept_class(enumerate_balls(current)), True).k
    steps = 0
    while True:
        step = rr1_step(current, cur_cover)
        if step is None:
            break
        current, victim = step
        cur_cover = {v if v < victim else v - 1 for v in cur_cover}
        k_now = nctd_exact(balls_as_concept_class(enumerate_balls(current)), True).k
        assert k_now == k
        steps += 1
    assert steps >= 1


def test_solve_via_kernel_matches_direct():
    for b in (4, 7, 9):
        g = complete_bipartite(1, b)
        direct = nctd_exact(balls_as_concept_class(enumerate_balls(g)), True).k
        assert solve_via_kernel(g, True).k == direct


def test_solve_via_kernel_refuses_signed():
    with pytest.raises(ValueError):
        solve_via_kernel(cycle(6), positive_only=False)
