"""Command-line interface.

Every subcommand prints a machine-readable summary as its last stdout line:
``RESULT key=value ...`` (or a JSON object with --json).  Exit codes: 0 for
success or a verified/YES outcome, 1 for a verification failure or a NO
decision, 2 for usage or input errors.  Randomized generators take --seed,
falling back to the NCTB_SEED environment variable, then 0.  A --threads
flag is accepted for interface stability; results never depend on it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import fileio, generators
from .balls import enumerate_balls, vc_dimension_of_balls
from .constructors import (
    cactus_nctm,
    cycle_nctm,
    diam2_nctm,
    hyperbolic_approx_nctm_plus,
    interval_nctm_plus,
    tree_nctm_plus,
)
from .graphs import GraphError, all_pairs_distances, hyperbolicity2
from .kernel import kernelize, solve_via_kernel
from .reductions import (
    InvalidWitnessError,
    p3sat_extract_assignment,
    p3sat_forward_map,
    p3sat_to_gadget,
    preprocess_setcover,
    setcover_forward_map,
    setcover_to_gadget,
)
from .solver import BUDGET_EXCEEDED, YES, nctd_decision, nctd_exact
from .teaching import balls_as_concept_class, verify, verify_approx


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    return int(os.environ.get("NCTB_SEED", "0"))


def _emit(args, body: str, summary: dict) -> None:
    if body:
        sys.stdout.write(body if body.endswith("\n") else body + "\n")
    if getattr(args, "json", False):
        sys.stdout.write(json.dumps(summary, sort_keys=True) + "\n")
    else:
        pairs = " ".join(f"{k}={v}" for k, v in summary.items())
        sys.stdout.write(f"RESULT {pairs}\n")


def _write_out(path: str | None, text: str) -> str:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        return ""
    return text


def _load_graph(args):
    return fileio.load_graph(args.input)


def cmd_gen(args) -> int:
    seed = _seed(args)
    rep_text = None
    if args.family == "path":
        g = generators.path(args.n)
    elif args.family == "cycle":
        g = generators.cycle(args.n)
    elif args.family == "octahedron":
        g = generators.octahedron(args.n)
    elif args.family == "complete-bipartite":
        g = generators.complete_bipartite(args.a, args.b)
    elif args.family == "tree":
        g = generators.random_tree(args.n, seed)
    elif args.family == "cactus":
        g = generators.random_cactus(args.n, seed)
    elif args.family == "interval":
        g, rep = generators.random_interval(args.n, seed)
        rep_text = fileio.format_interval_representation(rep)
    elif args.family == "connected":
        g = generators.random_connected(args.n, seed, args.p)
    elif args.family == "edgeless":
        g = generators.edgeless(args.n)
    else:
        raise GraphError(f"unknown family {args.family!r}")
    if rep_text is not None:
        if not args.rep_out:
            raise GraphError("interval generation needs --rep-out for the representation")
        _write_out(args.rep_out, rep_text)
    body = _write_out(args.out, fileio.format_graph(g))
    _emit(args, body, {"n": g.n, "m": g.m, "seed": seed})
    return 0


def cmd_balls(args) -> int:
    g = _load_graph(args)
    fam = enumerate_balls(g)
    lines = []
    for i in range(len(fam)):
        x, r = fam.canonical[i]
        members = " ".join(str(v) for v in sorted(fam.members(i)))
        lines.append(f"{i} center {x} radius {r} members {members}")
    body = _write_out(args.out, "\n".join(lines) + "\n")
    _emit(args, body, {"count": len(fam)})
    return 0


_CONSTRUCTORS = ("tree", "interval", "cycle", "cactus", "hyperbolic", "diam2")


def cmd_construct(args) -> int:
    g = _load_graph(args)
    summary = {"constructor": args.family}
    if args.family == "tree":
        tm = tree_nctm_plus(g)
    elif args.family == "interval":
        if not args.rep:
            raise GraphError("interval construction needs --rep")
        rep = fileio.load_interval_representation(args.rep)
        tm = interval_nctm_plus(g, rep)
    elif args.family == "cycle":
        tm = cycle_nctm(g.n)
    elif args.family == "cactus":
        tm = cactus_nctm(g)
    elif args.family == "hyperbolic":
        tm, delta2 = hyperbolic_approx_nctm_plus(g)
        summary["delta2"] = delta2
    elif args.family == "diam2":
        tm = diam2_nctm(g)
    else:
        raise GraphError(f"unknown constructor {args.family!r}")
    summary["size"] = tm.size
    body = _write_out(args.out, fileio.format_teaching_map(tm))
    _emit(args, body, summary)
    return 0


def cmd_verify(args) -> int:
    tm = fileio.load_teaching_map(args.map)
    if args.concepts:
        cc = fileio.load_concept_class(args.concepts)
        if args.rho is not None:
            raise GraphError("approximate verification needs a graph, not a concept file")
        report = verify(cc, tm, args.positive_only)
    else:
        g = _load_graph(args)
        fam = enumerate_balls(g)
        if args.rho is not None:
            d = all_pairs_distances(g)
            report = verify_approx(fam, tm, args.rho, d)
        else:
            report = verify(balls_as_concept_class(fam), tm, args.positive_only)
    for i, j, reason in report.violations:
        sys.stdout.write(f"violation {reason} {i} {j}\n")
    _emit(args, "", {"ok": str(report.ok).lower(), "size": report.size,
                     "violations": len(report.violations)})
    return 0 if report.ok else 1


def cmd_solve(args) -> int:
    g = _load_graph(args)
    positive_only = args.mode == "nctd+"
    if args.via_kernel:
        result = solve_via_kernel(g, positive_only, args.kmax, args.budget)
    else:
        cc = balls_as_concept_class(enumerate_balls(g))
        result = nctd_exact(cc, positive_only, args.kmax, args.budget)
    body = ""
    if result.witness is not None:
        body = fileio.format_teaching_map(result.witness)
    if result.k is not None:
        answer = "YES"
    elif args.kmax is not None and result.no_upto >= args.kmax:
        answer = "NO"  # every size up to kmax genuinely refuted
    else:
        answer = "UNDECIDED"
    summary = {
        "answer": answer,
        "k": result.k if result.k is not None else result.no_upto,
        "nodes": result.nodes_explored,
        "status": result.status,
    }
    _emit(args, body, summary)
    if answer == "UNDECIDED":
        return 2
    return 0 if answer == "YES" else 1


def cmd_decide(args) -> int:
    g = _load_graph(args)
    cc = balls_as_concept_class(enumerate_balls(g))
    res = nctd_decision(cc, args.k, args.mode == "nctd+", args.budget)
    body = ""
    if res.witness is not None:
        body = fileio.format_teaching_map(res.witness)
    _emit(args, body, {"answer": res.answer.upper() if res.answer != BUDGET_EXCEEDED
                       else "UNDECIDED",
                       "k": args.k, "nodes": res.nodes})
    if res.answer == BUDGET_EXCEEDED:
        return 2
    return 0 if res.answer == YES else 1


def cmd_kernelize(args) -> int:
    g = _load_graph(args)
    trace = kernelize(g, args.cover)
    body = fileio.format_graph(trace.kernel)
    if args.out:
        _write_out(args.out, body)
        body = ""
    for orig, cls in trace.deletions:
        sys.stdout.write(f"deleted {orig} twins {' '.join(str(v) for v in cls)}\n")
    _emit(args, body, {
        "n": trace.kernel.n,
        "deleted": len(trace.deletions),
        "cover_size": len(trace.cover),
    })
    return 0


def cmd_reduce(args) -> int:
    if args.flavor == "p3sat":
        inst = fileio.load_p3sat(args.input)
        out = p3sat_to_gadget(inst)
    else:
        raw = fileio.load_set_cover(args.input)
        pre = preprocess_setcover(raw, args.flavor)
        out = setcover_to_gadget(pre.instance, args.flavor)
    body = fileio.format_graph(out.graph)
    if args.out:
        _write_out(args.out, body)
        body = ""
    if args.roles_out:
        _write_out(args.roles_out, fileio.format_roles(out.roles))
    _emit(args, body, {"k": out.k, "n": out.graph.n, "flavor": out.flavor})
    return 0


def cmd_witness(args) -> int:
    if args.flavor == "p3sat":
        inst = fileio.load_p3sat(args.input)
        assignment = _parse_assignment(args.assignment, inst.n_vars)
        tm = p3sat_forward_map(inst, assignment)
        k = 3 * inst.n_vars + 3 * inst.m_clauses
    else:
        raw = fileio.load_set_cover(args.input)
        pre = preprocess_setcover(raw, args.flavor)
        cover = [int(x) for x in args.cover.split(",")] if args.cover else None
        if cover is None:
            raise GraphError("set cover witnesses need --cover with 0-based set indices")
        out = setcover_to_gadget(pre.instance, args.flavor)
        tm = setcover_forward_map(pre.instance, cover, args.flavor, out)
        k = out.k
    body = _write_out(args.out, fileio.format_teaching_map(tm))
    _emit(args, body, {"size": tm.size, "k": k})
    return 0


def _parse_assignment(text: str, n_vars: int) -> dict:
    if not text:
        raise GraphError("need --assignment like a1=1,b2=0,...")
    assignment = {}
    for tok in text.split(","):
        key, _, val = tok.partition("=")
        part, idx = key[0], int(key[1:])
        assignment[(part, idx)] = val.strip() in ("1", "true", "True")
    for part in "abc":
        for i in range(1, n_vars + 1):
            assignment.setdefault((part, i), False)
    return assignment


def cmd_extract(args) -> int:
    inst = fileio.load_p3sat(args.input)
    out = p3sat_to_gadget(inst)
    tm = fileio.load_teaching_map(args.map)
    from .reductions import satisfies

    assignment = p3sat_extract_assignment(tm, out)
    text = ",".join(
        f"{part}{i}={'1' if assignment[(part, i)] else '0'}"
        for part in "abc"
        for i in range(1, inst.n_vars + 1)
    )
    ok = satisfies(inst, assignment)
    _emit(args, text + "\n", {"satisfies": str(ok).lower()})
    return 0 if ok else 1


def cmd_vcdim(args) -> int:
    g = _load_graph(args)
    res = vc_dimension_of_balls(g, args.dmax)
    witness = ",".join(str(v) for v in res.witness)
    _emit(args, "", {"vcdim": res.value,
                     "maybe_larger": str(res.maybe_larger).lower(),
                     "witness": witness or "-"})
    return 0


def cmd_hyperbolicity(args) -> int:
    g = _load_graph(args)
    d = all_pairs_distances(g)
    delta2 = hyperbolicity2(d)
    _emit(args, "", {"delta2": delta2})
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="nctb",
        description="Non-clashing teaching maps for the balls of a graph.",
    )
    ap.add_argument("--json", action="store_true", help="emit the summary as JSON")
    ap.add_argument("--threads", type=int, default=1,
                    help="accepted for compatibility; never changes output")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("--family", "--class", dest="family", required=True,
                   choices=["path", "cycle", "octahedron", "complete-bipartite",
                            "tree", "cactus", "interval", "connected", "edgeless"])
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--a", type=int, default=3)
    p.add_argument("--b", type=int, default=3)
    p.add_argument("--p", type=float, default=0.25)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out")
    p.add_argument("--rep-out")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("balls", help="enumerate the distinct balls")
    p.add_argument("--input", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_balls)

    p = sub.add_parser("construct", help="build a teaching map for a graph class")
    p.add_argument("--family", "--class", dest="family", required=True,
                   choices=list(_CONSTRUCTORS))
    p.add_argument("--input", required=True)
    p.add_argument("--rep")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("verify", help="verify a teaching map")
    p.add_argument("--input")
    p.add_argument("--concepts")
    p.add_argument("--map", required=True)
    p.add_argument("--positive-only", action="store_true")
    p.add_argument("--rho", type=int, default=None)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("solve", help="exact minimum teaching map size")
    p.add_argument("--input", required=True)
    p.add_argument("--mode", choices=["nctd", "nctd+"], default="nctd+")
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--budget", type=int, default=10**7)
    p.add_argument("--via-kernel", action="store_true")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("decide", help="decide one size bound")
    p.add_argument("--input", required=True)
    p.add_argument("--mode", choices=["nctd", "nctd+"], default="nctd+")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int, default=10**7)
    p.set_defaults(fn=cmd_decide)

    p = sub.add_parser("kernelize", help="apply the twin deletion rule exhaustively")
    p.add_argument("--input", required=True)
    p.add_argument("--cover", choices=["approx2", "exact"], default="approx2")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_kernelize)

    p = sub.add_parser("reduce", help="build a hardness gadget")
    p.add_argument("--flavor", required=True,
                   choices=["split", "cobipartite", "bipartite", "p3sat"])
    p.add_argument("--input", required=True)
    p.add_argument("--out")
    p.add_argument("--roles-out")
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("witness", help="emit a forward witness teaching map")
    p.add_argument("--flavor", required=True,
                   choices=["split", "cobipartite", "bipartite", "p3sat"])
    p.add_argument("--input", required=True)
    p.add_argument("--cover", help="comma-separated 0-based set indices")
    p.add_argument("--assignment", help="p3sat assignment like a1=1,b2=0")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_witness)

    p = sub.add_parser("extract", help="read an assignment off a gadget witness")
    p.add_argument("--input", required=True, help="the original formula file")
    p.add_argument("--map", required=True)
    p.set_defaults(fn=cmd_extract)

    p = sub.add_parser("vcdim", help="VC-dimension of the ball family")
    p.add_argument("--input", required=True)
    p.add_argument("--dmax", type=int, default=4)
    p.set_defaults(fn=cmd_vcdim)

    p = sub.add_parser("hyperbolicity", help="four-point hyperbolicity (doubled)")
    p.add_argument("--input", required=True)
    p.set_defaults(fn=cmd_hyperbolicity)

    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (GraphError, InvalidWitnessError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
