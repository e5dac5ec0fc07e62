"""Hardness gadgets and their explicit witnesses, end to end.

Run: python3 demos/hardness_gadgets_tour.py
"""

from nctb import balls_as_concept_class, enumerate_balls, nctd_decision, verify
from nctb.graphs import all_pairs_distances
from nctb.reductions import (
    Partitioned3SatInstance,
    SetCoverInstance,
    min_set_cover_size,
    p3sat_extract_assignment,
    p3sat_forward_map,
    p3sat_to_gadget,
    preprocess_setcover,
    setcover_forward_map,
    setcover_to_gadget,
)


def set_cover_demo():
    inst = SetCoverInstance(
        4, (frozenset({1, 2}), frozenset({2, 3}), frozenset({3, 4}), frozenset({1, 4})), 2
    )
    print(f"set cover: 4 elements, 4 sets, budget {inst.budget}, "
          f"minimum cover {min_set_cover_size(inst)}")
    for flavor in ("split", "cobipartite", "bipartite"):
        pre = preprocess_setcover(inst, flavor).instance
        out = setcover_to_gadget(pre, flavor)
        tm = setcover_forward_map(pre, (0, 2), flavor, out)
        rep = verify(balls_as_concept_class(enumerate_balls(out.graph)), tm, True)
        print(f"  {flavor}: {out.graph.n} vertices, budget k={out.k}, "
              f"witness size {tm.size}, verified={rep.ok}")
    # the ball family really encodes the covering question
    out = setcover_to_gadget(preprocess_setcover(inst, "split").instance, "split")
    cc = balls_as_concept_class(enumerate_balls(out.graph))
    print("  decision at k:", nctd_decision(cc, out.k, True).answer,
          "| at k-1:", nctd_decision(cc, out.k - 1, True).answer)


def p3sat_demo():
    inst = Partitioned3SatInstance(5, (
        (("a", 1, True), ("b", 1, True), ("c", 1, True)),
        (("a", 2, False), ("b", 2, True), ("c", 2, True)),
        (("a", 3, True), ("b", 3, False), ("c", 3, True)),
        (("a", 4, True), ("b", 4, True), ("c", 4, False)),
        (("a", 5, False), ("b", 5, False), ("c", 5, True)),
        (("a", 1, True), ("b", 2, False), ("c", 3, True)),
    ))
    out = p3sat_to_gadget(inst)
    d = all_pairs_distances(out.graph)
    print(f"p3sat gadget: {out.graph.n} vertices, diameter {d.diameter()}, "
          f"budget k={out.k}, recorded vertex cover of size {len(out.cover)}")
    assignment = {(p, i): True for p in "abc" for i in range(1, 6)}
    tm = p3sat_forward_map(inst, assignment, out)
    rep = verify(balls_as_concept_class(enumerate_balls(out.graph)), tm, True)
    print(f"  witness map size {tm.size}, verified={rep.ok}")
    back = p3sat_extract_assignment(tm, out)
    print(f"  extracted assignment equals the one we started from: {back == assignment}")


if __name__ == "__main__":
    set_cover_demo()
    p3sat_demo()
