"""Non-clashing teaching maps for the balls of a graph.

A library for experimenting with teaching maps over the concept class formed
by all distinct balls of a finite graph: constructive maps for trees,
interval graphs, cycles, cacti, and hyperbolic graphs; a universal verifier;
an exact solver for the minimum teaching map size; a false-twin
kernelization; and generators for the hardness gadgets that tie the problem
to Set Cover and partitioned 3-SAT.
"""

from .balls import Ball, BallFamily, VCDimension, ball, enumerate_balls, vc_dimension_of_balls
from .cactus import CactusStructure, apex, gate, is_cactus
from .constructors import (
    cactus_nctm,
    cycle_nctm,
    diam2_nctm,
    hyperbolic_approx_nctm_plus,
    interval_nctm_plus,
    tree_nctm_plus,
)
from .graphs import (
    DistanceMatrix,
    Graph,
    GraphError,
    IntervalRepresentation,
    all_pairs_distances,
    bfs_distances,
    diametral_pair,
    false_twin_classes,
    hausdorff_distance,
    hyperbolicity2,
    interval_vertices,
    vertex_cover,
)
from .kernel import KernelTrace, kernelize, rr1_step, solve_via_kernel
from .reductions import (
    InvalidWitnessError,
    Partitioned3SatInstance,
    ReductionOutput,
    SetCoverInstance,
    SetRep,
    min_set_cover_size,
    p3sat_extract_assignment,
    p3sat_forward_map,
    p3sat_to_gadget,
    preprocess_setcover,
    satisfies,
    set_rep,
    setcover_forward_map,
    setcover_to_gadget,
)
from .solver import DecisionResult, SolveResult, nctd_decision, nctd_exact
from .teaching import (
    ConceptClass,
    SignedSample,
    TeachingMap,
    VerificationReport,
    balls_as_concept_class,
    c5_example_class,
    clashes,
    realizable,
    verify,
    verify_approx,
)

__version__ = "0.1.0"
