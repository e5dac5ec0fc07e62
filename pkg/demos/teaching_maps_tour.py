"""Tour of the constructive teaching maps, one graph class at a time.

Run: python3 demos/teaching_maps_tour.py
"""

from nctb import (
    all_pairs_distances,
    balls_as_concept_class,
    enumerate_balls,
    verify,
    verify_approx,
)
from nctb.constructors import (
    cactus_nctm,
    cycle_nctm,
    diam2_nctm,
    hyperbolic_approx_nctm_plus,
    interval_nctm_plus,
    tree_nctm_plus,
)
from nctb.generators import octahedron, random_cactus, random_connected, random_interval, random_tree


def show(title, g, tm, rep):
    print(f"{title}: n={g.n}, {len(tm)} ball classes, map size {tm.size}, "
          f"non-clashing={rep.ok}")


def main():
    # Trees: any diametral pair pins a ball among all balls.
    g = random_tree(30, seed=1)
    tm = tree_nctm_plus(g)
    show("tree", g, tm, verify(balls_as_concept_class(enumerate_balls(g)), tm, True))

    # Interval graphs: leftmost-ending plus rightmost-starting member.
    g, rep = random_interval(25, seed=2)
    tm = interval_nctm_plus(g, rep)
    show("interval", g, tm, verify(balls_as_concept_class(enumerate_balls(g)), tm, True))

    # Cycles need a negative example; one per arc suffices.
    tm = cycle_nctm(12)
    from nctb.generators import cycle

    g = cycle(12)
    show("cycle", g, tm, verify(balls_as_concept_class(enumerate_balls(g)), tm, False))
    sample = tm[enumerate_balls(g).index_of(frozenset({11, 0, 1}))]
    print(f"  the arc around 0 teaches +{sorted(sample.positive)} "
          f"-{sorted(sample.negative)}")

    # Cacti: a diametral pair plus up to two negatives off the center's cycle.
    g = random_cactus(30, seed=3)
    tm = cactus_nctm(g)
    show("cactus", g, tm, verify(balls_as_concept_class(enumerate_balls(g)), tm, False))

    # Diameter-2 graphs with covering edges: signed size 2.
    g = octahedron(4)
    tm = diam2_nctm(g)
    show("octahedron", g, tm, verify(balls_as_concept_class(enumerate_balls(g)), tm, False))

    # Any graph: diametral pairs are non-clashing up to Hausdorff slack 2*delta.
    g = random_connected(20, seed=4, p=0.2)
    tm, delta2 = hyperbolic_approx_nctm_plus(g)
    rep = verify_approx(enumerate_balls(g), tm, delta2, all_pairs_distances(g))
    print(f"hyperbolic: n={g.n}, 2*delta={delta2}, approximate map ok={rep.ok}")


if __name__ == "__main__":
    main()
