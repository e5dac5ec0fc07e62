"""Exact teaching numbers on small instances, signed versus positive-only.

Run: python3 demos/exact_solver_tour.py
"""

from nctb import balls_as_concept_class, enumerate_balls, nctd_decision, nctd_exact
from nctb.generators import cycle, edgeless, octahedron
from nctb.graphs import Graph


def main():
    # Cycles: signed maps of size 2 exist, size 1 never does.
    for n in (6, 7, 8):
        cc = balls_as_concept_class(enumerate_balls(cycle(n)))
        res = nctd_exact(cc, positive_only=False)
        print(f"C{n}: signed teaching number = {res.k} "
              f"({res.nodes_explored} nodes, {res.status})")

    # Positive-only is a different world: each almost-full ball forces its
    # missing vertex into the full ball's teaching set.
    cc = balls_as_concept_class(enumerate_balls(cycle(6)))
    print("C6 positive-only:", nctd_exact(cc, positive_only=True).k)

    cc = balls_as_concept_class(enumerate_balls(octahedron(3)))
    print("octahedron(3) positive-only at k=5:",
          nctd_decision(cc, 5, positive_only=True).answer)
    print("octahedron(3) positive-only exact:",
          nctd_exact(cc, positive_only=True).k)

    # Size 1 suffices exactly when there are no edges at all.
    print("edgeless(3) at k=1:",
          nctd_decision(balls_as_concept_class(enumerate_balls(edgeless(3))),
                        1, positive_only=True).answer)
    print("K2 at k=1:",
          nctd_decision(balls_as_concept_class(enumerate_balls(Graph(2, [(0, 1)]))),
                        1, positive_only=True).answer)


if __name__ == "__main__":
    main()
