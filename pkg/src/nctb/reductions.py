"""Hardness gadget builders and their explicit witness teaching maps.

Two sources are supported:

* Set Cover instances become split, co-bipartite, or bipartite graphs whose
  ball families admit a positive-only non-clashing map of size k exactly
  when the instance has a small enough cover;
* partitioned 3-SAT instances (three equal variable groups, no clause with
  two variables from one group) become diameter-3 graphs with a vertex cover
  of logarithmic size, via an injection of indices into half-size subsets.

Builders return fully role-annotated graphs; forward maps are positionally
aligned with ``enumerate_balls`` of the gadget.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .balls import enumerate_balls
from .graphs import Graph, GraphError, all_pairs_distances, bfs_distances
from .teaching import SignedSample, TeachingMap, positive_sample

PARTS = ("a", "b", "c")


class InvalidWitnessError(ValueError):
    """A teaching map does not carry the structure a valid witness must have."""


# ---------------------------------------------------------------------------
# Set Cover


@dataclass(frozen=True)
class SetCoverInstance:
    """Elements 1..n_elements, a family of sets covering them, and a budget."""

    n_elements: int
    sets: tuple[frozenset, ...]
    budget: int

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(frozenset(s) for s in self.sets))
        if self.n_elements < 1:
            raise ValueError("instance needs at least one element")
        if not self.sets:
            raise ValueError("instance needs a non-empty family of sets")
        if self.budget < 1:
            raise ValueError("budget must be positive")
        universe = set(range(1, self.n_elements + 1))
        for s in self.sets:
            if not s <= universe:
                raise ValueError("set member outside the element universe")
        if set().union(*self.sets) != universe:
            raise ValueError("family does not cover the universe")

    @property
    def m(self) -> int:
        return len(self.sets)


def min_set_cover_size(inst: SetCoverInstance) -> int:
    """Brute-force minimum cover size (fixture-scale instances only)."""
    universe = frozenset(range(1, inst.n_elements + 1))
    for size in range(0, inst.m + 1):
        for subset in combinations(range(inst.m), size):
            if frozenset().union(*(inst.sets[j] for j in subset), frozenset()) >= universe:
                return size
    raise RuntimeError("unreachable: the full family covers")


@dataclass(frozen=True)
class PreprocessedSetCover:
    instance: SetCoverInstance
    removed_elements: tuple[int, ...]
    duplicated_sets: tuple[int, ...]  # indices (pre-duplication) of copied sets


def preprocess_setcover(inst: SetCoverInstance, flavor: str = "split") -> PreprocessedSetCover:
    """Normalize an instance without changing its minimum cover size.

    Elements contained in every set are dropped (any choice covers them);
    while an element is missing from exactly one set, that set is duplicated,
    which strictly raises every element's deficit or keeps it.  Co-bipartite
    and bipartite targets additionally require more sets than elements, met
    by further duplication.
    """
    if flavor not in ("split", "cobipartite", "bipartite"):
        raise ValueError(f"unknown flavor {flavor!r}")
    elements = sorted(range(1, inst.n_elements + 1))
    sets = list(inst.sets)
    removed = []
    duplicated = []
    changed = True
    while changed:
        changed = False
        for e in list(elements):
            holders = sum(1 for s in sets if e in s)
            if holders == len(sets):
                elements.remove(e)
                removed.append(e)
                changed = True
            elif holders == len(sets) - 1:
                missing = next(j for j, s in enumerate(sets) if e not in s)
                duplicated.append(missing)
                sets.append(sets[missing])
                changed = True
    if not elements:
        raise ValueError("instance degenerates: every element lies in every set")
    if flavor in ("cobipartite", "bipartite"):
        while len(sets) <= len(elements):
            duplicated.append(len(sets) - 1)
            sets.append(sets[-1])
    rename = {e: i + 1 for i, e in enumerate(elements)}
    new_sets = [frozenset(rename[e] for e in s if e in rename) for s in sets]
    out = SetCoverInstance(len(elements), tuple(new_sets), inst.budget)
    return PreprocessedSetCover(out, tuple(removed), tuple(duplicated))


@dataclass(frozen=True)
class ReductionOutput:
    graph: Graph
    k: int
    roles: tuple[str, ...]
    flavor: str
    cover: frozenset | None = None

    def vertex_of(self, role: str) -> int:
        return self.roles.index(role)


class _SCLayout:
    """Vertex numbering shared by the three Set Cover gadgets."""

    def __init__(self, n, m):
        self.n, self.m = n, m

    def v(self, i):  # elements, 1-based
        return i - 1

    def s(self, j):  # sets, 1-based
        return self.n + j - 1

    def u(self, j):  # 1..m+1
        return self.n + self.m + j - 1

    def w(self, j):  # 1..m
        return self.n + 2 * self.m + 1 + j - 1

    @property
    def after_w(self):
        return self.n + 3 * self.m + 1


def _setcover_check_preprocessed(inst: SetCoverInstance, flavor: str) -> None:
    m = inst.m
    for e in range(1, inst.n_elements + 1):
        if sum(1 for s in inst.sets if e in s) > m - 2:
            raise GraphError(
                f"element {e} lies in more than m-2 sets; preprocess the instance first"
            )
    if flavor in ("cobipartite", "bipartite") and m <= inst.n_elements:
        raise GraphError("this flavor needs more sets than elements; preprocess first")


def setcover_to_gadget(inst: SetCoverInstance, flavor: str) -> ReductionOutput:
    """Build the gadget graph for a preprocessed Set Cover instance."""
    if flavor not in ("split", "cobipartite", "bipartite"):
        raise ValueError(f"unknown flavor {flavor!r}")
    _setcover_check_preprocessed(inst, flavor)
    n, m, t = inst.n_elements, inst.m, inst.budget
    lay = _SCLayout(n, m)
    edges = set()

    def add(a, b):
        edges.add((a, b) if a < b else (b, a))

    for i in range(1, n + 1):
        for j in range(1, m + 1):
            if i not in inst.sets[j - 1]:
                add(lay.v(i), lay.s(j))
    for j in range(1, m + 2):
        for l in range(1, m + 1):
            if j != l:
                add(lay.u(j), lay.w(l))
    roles = [f"v{i}" for i in range(1, n + 1)]
    roles += [f"s{j}" for j in range(1, m + 1)]
    roles += [f"u{j}" for j in range(1, m + 2)]
    roles += [f"w{j}" for j in range(1, m + 1)]

    if flavor == "split":
        for j in range(1, m + 2):
            for l in range(1, m + 1):
                add(lay.u(j), lay.s(l))
        for i in range(1, n + 1):
            for l in range(1, m + 1):
                add(lay.v(i), lay.w(l))
        uv = [lay.u(j) for j in range(1, m + 2)] + [lay.v(i) for i in range(1, n + 1)]
        for a in range(len(uv)):
            for b in range(a + 1, len(uv)):
                add(uv[a], uv[b])
        g = Graph(lay.after_w, sorted(edges))
        out = ReductionOutput(g, m + t, tuple(roles), flavor)
        _check_split(out, lay)
        return out

    if flavor == "cobipartite":
        for j in range(1, m + 2):
            for l in range(1, m + 1):
                add(lay.u(j), lay.s(l))
        for i in range(1, n + 1):
            for l in range(1, m + 1):
                add(lay.v(i), lay.w(l))
        uv = [lay.u(j) for j in range(1, m + 2)] + [lay.v(i) for i in range(1, n + 1)]
        for a in range(len(uv)):
            for b in range(a + 1, len(uv)):
                add(uv[a], uv[b])
        ws = [lay.w(j) for j in range(1, m + 1)] + [lay.s(j) for j in range(1, m + 1)]
        for a in range(len(ws)):
            for b in range(a + 1, len(ws)):
                add(ws[a], ws[b])
        star = lay.after_w
        for i in range(1, n + 1):
            add(star, lay.v(i))
        for j in range(1, m + 1):
            add(star, lay.w(j))
        for j in range(1, m + 2):
            add(star, lay.u(j))
        roles.append("v_star")
        g = Graph(star + 1, sorted(edges))
        return ReductionOutput(g, 2 * m + t + 1, tuple(roles), flavor)

    # bipartite
    for j in range(1, m + 2):
        for i in range(1, n + 1):
            add(lay.u(j), lay.v(i))
    z = lay.after_w
    for j in range(1, m + 2):
        add(z, lay.u(j))
    for j in range(1, m + 1):
        add(z, lay.s(j))
    roles.append("z")
    g = Graph(z + 1, sorted(edges))
    out = ReductionOutput(g, m + t, tuple(roles), flavor)
    _check_bipartite(out, lay)
    return out


def _check_split(out: ReductionOutput, lay: _SCLayout) -> None:
    g = out.graph
    top = lay.u(lay.m + 1)
    if g.degree(top) != g.n - 1:
        raise RuntimeError("split gadget lost its universal vertex")
    for a in [lay.w(j) for j in range(1, lay.m + 1)] + [lay.s(j) for j in range(1, lay.m + 1)]:
        for b in g.adj[a]:
            if b != a and b in {lay.w(j) for j in range(1, lay.m + 1)} | {
                lay.s(j) for j in range(1, lay.m + 1)
            }:
                raise RuntimeError("split gadget: sets-and-w side is not independent")


def _check_bipartite(out: ReductionOutput, lay: _SCLayout) -> None:
    g = out.graph
    d = all_pairs_distances(g)
    if d.diameter() != 3:
        raise RuntimeError("bipartite gadget must have diameter 3")
    left = {lay.w(j) for j in range(1, lay.m + 1)}
    left |= {lay.v(i) for i in range(1, lay.n + 1)}
    left.add(lay.after_w)  # z
    for u, v in g.edges:
        if (u in left) == (v in left):
            raise RuntimeError("gadget is not bipartite with the expected sides")


def setcover_forward_map(inst: SetCoverInstance, cover, flavor: str,
                         out: ReductionOutput | None = None) -> TeachingMap:
    """Positive-only witness map of size at most k from a valid cover.

    ``cover`` is a collection of 0-based set indices whose union covers the
    universe and whose size is within the instance budget.
    """
    cover = sorted(set(cover))
    covered = frozenset().union(*(inst.sets[j] for j in cover), frozenset())
    if covered != frozenset(range(1, inst.n_elements + 1)):
        raise ValueError("given sets do not cover the universe")
    if len(cover) > inst.budget:
        raise ValueError("given cover exceeds the instance budget")
    if out is None:
        out = setcover_to_gadget(inst, flavor)
    g = out.graph
    n, m = inst.n_elements, inst.m
    lay = _SCLayout(n, m)
    fam = enumerate_balls(g)
    full = frozenset(range(g.n))
    sprime = frozenset(lay.s(j + 1) for j in cover)
    vset = frozenset(lay.v(i) for i in range(1, n + 1))
    sset = frozenset(lay.s(j) for j in range(1, m + 1))
    uset = frozenset(lay.u(j) for j in range(1, m + 2))
    wset = frozenset(lay.w(j) for j in range(1, m + 1))
    u_small = frozenset(lay.u(j) for j in range(1, m + 1))
    top = lay.u(m + 1)
    ball1 = [frozenset(v for v, dv in enumerate(bfs_distances(g, x)) if dv <= 1)
             for x in range(g.n)]

    def sample_for(i: int) -> SignedSample:
        members = fam.members(i)
        x, r = fam.canonical[i]
        if r == 0:
            return positive_sample({x})
        if flavor == "split":
            if members == full:
                return positive_sample(sprime | (ball1[top] & wset))
            if x in vset:
                return positive_sample(ball1[x] & sset)
            if x in wset | sset:
                return positive_sample({x, top})
            return positive_sample(sprime | (ball1[x] & wset))
        if flavor == "cobipartite":
            star = lay.after_w
            if members == full:
                return positive_sample({star} | sprime | u_small | (ball1[top] & wset))
            if x == star:
                return positive_sample({star, top})
            if x in vset:
                return positive_sample({star} | uset | (ball1[x] & sset))
            if x in sset:
                return positive_sample({x, top} | (ball1[x] & vset))
            if x in wset:
                return positive_sample({star} | sset | (ball1[x] & uset))
            return positive_sample({star} | sprime | u_small | (ball1[x] & wset))
        # bipartite
        z = lay.after_w
        if members == full:
            return positive_sample(sprime | (ball1[top] & wset))
        if x == z:
            return positive_sample({z} | sset)
        if r == 1:
            if x in vset:
                return positive_sample({x} | (ball1[x] & sset))
            if x in sset:
                return positive_sample({x, z} | (ball1[x] & vset))
            if x in wset:
                return positive_sample({x} | (ball1[x] & u_small))
            return positive_sample({x} | (ball1[x] & wset))
        if x in vset:
            return positive_sample({lay.w(1)} | (ball1[x] & sset))
        if x in sset:
            return positive_sample({top, z} | (ball1[x] & vset))
        if x in wset:
            return positive_sample({x, z} | (ball1[x] & u_small))
        return positive_sample(sprime | (ball1[x] & wset))

    return TeachingMap([sample_for(i) for i in range(len(fam))])


# ---------------------------------------------------------------------------
# Set representation gadget


@dataclass(frozen=True)
class SetRep:
    """Injection of 1..count into the p-subsets of 1..2p, colex order."""

    count: int
    p: int
    subsets: tuple[frozenset, ...]

    def subset(self, index: int) -> frozenset:
        return self.subsets[index - 1]

    def index_of(self, subset) -> int:
        return self.subsets.index(frozenset(subset)) + 1


def set_rep(m_clauses: int) -> SetRep:
    """Representation for 3M indices with the smallest adequate p."""
    if m_clauses < 1:
        raise ValueError("need at least one clause")
    count = 3 * m_clauses
    p = 1
    while comb(2 * p, p) < count:
        p += 1
    combos = sorted(
        combinations(range(1, 2 * p + 1), p),
        key=lambda c: tuple(reversed(c)),
    )
    subsets = tuple(frozenset(c) for c in combos[:count])
    return SetRep(count, p, subsets)


# ---------------------------------------------------------------------------
# Partitioned 3-SAT


@dataclass(frozen=True)
class Partitioned3SatInstance:
    """3-CNF with variables split into three equal groups a, b, c.

    A literal is (part, index, positive) with 1-based index; no clause may
    use two variables from the same part.
    """

    n_vars: int  # variables per part
    clauses: tuple[tuple[tuple[str, int, bool], ...], ...]

    def __post_init__(self):
        clauses = tuple(tuple(tuple(lit) for lit in cl) for cl in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        if self.n_vars < 1:
            raise ValueError("need at least one variable per part")
        if not clauses:
            raise ValueError("need at least one clause")
        for cl in clauses:
            if not 1 <= len(cl) <= 3:
                raise ValueError("clauses carry one to three literals")
            parts_seen = set()
            for part, idx, positive in cl:
                if part not in PARTS:
                    raise ValueError(f"unknown part {part!r}")
                if not 1 <= idx <= self.n_vars:
                    raise ValueError(f"variable index {idx} out of range")
                if part in parts_seen:
                    raise ValueError("clause uses two variables from one part")
                parts_seen.add(part)
                if not isinstance(positive, bool):
                    raise ValueError("literal polarity must be a bool")

    @property
    def m_clauses(self) -> int:
        return len(self.clauses)


def satisfies(inst: Partitioned3SatInstance, assignment: dict) -> bool:
    for cl in inst.clauses:
        if not any(assignment[(part, idx)] == positive for part, idx, positive in cl):
            return False
    return True


class _P3Layout:
    """Vertex numbering of the partitioned 3-SAT gadget."""

    def __init__(self, n_vars: int, m_clauses: int, p: int):
        self.N, self.M, self.p = n_vars, m_clauses, p

    def c(self, j):  # clauses, 1-based
        return j - 1

    def w(self, l):  # 1..3M
        return self.M + l - 1

    def u(self, l):  # 1..3M
        return 4 * self.M + l - 1

    @property
    def u_top(self):
        return 7 * self.M

    @property
    def u_twin(self):
        return 7 * self.M + 1

    @property
    def z(self):
        return 7 * self.M + 2

    def lit(self, part, l):  # literal vertex, l in 1..2N (even: t, odd: f)
        return 7 * self.M + 3 + PARTS.index(part) * 2 * self.N + l - 1

    def t(self, part, i):
        return self.lit(part, 2 * i)

    def f(self, part, i):
        return self.lit(part, 2 * i - 1)

    def vp(self, part, q):  # v^part_q, q in 1..2p
        base = 7 * self.M + 3 + 6 * self.N
        return base + PARTS.index(part) * 4 * self.p + q - 1

    def vstar(self, part, q):  # starred copy
        base = 7 * self.M + 3 + 6 * self.N
        return base + PARTS.index(part) * 4 * self.p + 2 * self.p + q - 1

    def vw(self, q):  # clique V^W, q in 1..2p
        return 7 * self.M + 3 + 6 * self.N + 12 * self.p + q - 1

    def cv(self, part, i):  # validity clause vertices, i in 1..N
        return (7 * self.M + 3 + 6 * self.N + 14 * self.p
                + PARTS.index(part) * self.N + i - 1)

    @property
    def total(self):
        return 7 * self.M + 3 + 9 * self.N + 14 * self.p


def p3sat_to_gadget(inst: Partitioned3SatInstance) -> ReductionOutput:
    """Diameter-3 gadget whose positive-only teaching number encodes the formula.

    The budget is 3N + 3M.  The output records the logarithmic vertex cover
    made of the three hub vertices plus all representation vertices.
    """
    N, M = inst.n_vars, inst.m_clauses
    if M <= N:
        raise GraphError("the construction needs more clauses than per-part variables")
    rep = set_rep(M)
    p = rep.p
    lay = _P3Layout(N, M, p)
    twop = set(range(1, 2 * p + 1))
    edges = set()

    def add(a, b):
        edges.add((a, b) if a < b else (b, a))

    # literal vertices against their representation columns
    for part in PARTS:
        for i in range(1, N + 1):
            for q in rep.subset(2 * i):
                add(lay.t(part, i), lay.vp(part, q))
            for q in rep.subset(2 * i - 1):
                add(lay.f(part, i), lay.vp(part, q))
            # starred copies: both literals share the positive literal's columns
            for q in rep.subset(2 * i):
                add(lay.t(part, i), lay.vstar(part, q))
                add(lay.f(part, i), lay.vstar(part, q))
    # clause vertices, complementary columns
    for j, cl in enumerate(inst.clauses, start=1):
        by_part = {part: None for part in PARTS}
        for part, idx, positive in cl:
            by_part[part] = (idx, positive)
        for part in PARTS:
            if by_part[part] is None:
                cols = twop
            else:
                idx, positive = by_part[part]
                l = 2 * idx if positive else 2 * idx - 1
                cols = twop - rep.subset(l)
            for q in cols:
                add(lay.c(j), lay.vp(part, q))
    # validity clauses
    for part in PARTS:
        for i in range(1, N + 1):
            for q in twop - rep.subset(2 * i):
                add(lay.cv(part, i), lay.vstar(part, q))
            for other in PARTS:
                if other != part:
                    for q in twop:
                        add(lay.cv(part, i), lay.vstar(other, q))
    # the u row against every representation vertex
    for l in range(1, 3 * M + 1):
        for part in PARTS:
            for q in twop:
                add(lay.u(l), lay.vp(part, q))
                add(lay.u(l), lay.vstar(part, q))
    # w and u rows against the clique V^W, complementary columns
    for l in range(1, 3 * M + 1):
        for q in rep.subset(l):
            add(lay.w(l), lay.vw(q))
        for q in twop - rep.subset(l):
            add(lay.u(l), lay.vw(q))
    for q1 in range(1, 2 * p + 1):
        for q2 in range(q1 + 1, 2 * p + 1):
            add(lay.vw(q1), lay.vw(q2))
    # hub vertices
    for l in range(1, 3 * M + 1):
        add(lay.z, lay.u(l))
    for part in PARTS:
        for l in range(1, 2 * N + 1):
            add(lay.z, lay.lit(part, l))
    add(lay.z, lay.u_top)
    add(lay.z, lay.u_twin)
    hub_excluded = {lay.u(l) for l in range(1, 3 * M + 1)}
    hub_excluded |= {lay.lit(part, l) for part in PARTS for l in range(1, 2 * N + 1)}
    hub_excluded |= {lay.u_top, lay.u_twin}
    for v in range(lay.total):
        if v not in hub_excluded:
            add(lay.u_top, v)
            add(lay.u_twin, v)

    roles = [""] * lay.total
    for j in range(1, M + 1):
        roles[lay.c(j)] = f"c{j}"
    for l in range(1, 3 * M + 1):
        roles[lay.w(l)] = f"w{l}"
        roles[lay.u(l)] = f"u{l}"
    roles[lay.u_top] = "u_top"
    roles[lay.u_twin] = "u_twin"
    roles[lay.z] = "z"
    for part in PARTS:
        for i in range(1, N + 1):
            roles[lay.t(part, i)] = f"t_{part}{2 * i}"
            roles[lay.f(part, i)] = f"f_{part}{2 * i - 1}"
            roles[lay.cv(part, i)] = f"cv_{part}{i}"
        for q in range(1, 2 * p + 1):
            roles[lay.vp(part, q)] = f"v_{part}{q}"
            roles[lay.vstar(part, q)] = f"vs_{part}{q}"
    for q in range(1, 2 * p + 1):
        roles[lay.vw(q)] = f"vw{q}"

    cover = {lay.u_top, lay.u_twin, lay.z}
    cover |= {lay.vw(q) for q in range(1, 2 * p + 1)}
    for part in PARTS:
        cover |= {lay.vp(part, q) for q in range(1, 2 * p + 1)}
        cover |= {lay.vstar(part, q) for q in range(1, 2 * p + 1)}

    g = Graph(lay.total, sorted(edges))
    for a, b in g.edges:
        if a not in cover and b not in cover:
            raise RuntimeError("recorded set is not a vertex cover; construction bug")
    _check_p3sat_structure(g, inst, lay)
    return ReductionOutput(g, 3 * N + 3 * M, tuple(roles), "p3sat", frozenset(cover))


def _check_p3sat_structure(g: Graph, inst: Partitioned3SatInstance, lay: _P3Layout) -> None:
    d = all_pairs_distances(g)
    if d.diameter() != 3:
        raise RuntimeError("gadget must have diameter 3")
    full = frozenset(range(g.n))
    for l in range(1, 3 * lay.M + 1):
        ball2 = frozenset(v for v in range(g.n) if d.rows[lay.u(l)][v] <= 2)
        if ball2 != full - {lay.w(l)}:
            raise RuntimeError("u-row radius-2 ball lost its identity")
    for part in PARTS:
        for i in range(1, lay.N + 1):
            ball2 = frozenset(v for v in range(g.n) if d.rows[lay.cv(part, i)][v] <= 2)
            if ball2 != full - {lay.t(part, i), lay.f(part, i)}:
                raise RuntimeError("validity-clause radius-2 ball lost its identity")


def p3sat_forward_map(inst: Partitioned3SatInstance, assignment: dict,
                      out: ReductionOutput | None = None) -> TeachingMap:
    """Positive-only witness map of size 3N + 3M from a satisfying assignment."""
    if not satisfies(inst, assignment):
        raise ValueError("assignment does not satisfy the formula")
    N, M = inst.n_vars, inst.m_clauses
    rep = set_rep(M)
    p = rep.p
    if 2 * p + 3 > 3 * N:
        raise ValueError(
            "instance too small for the witness map: its fixed teaching sets "
            f"need 2p+3 = {2 * p + 3} <= 3N = {3 * N}"
        )
    if out is None:
        out = p3sat_to_gadget(inst)
    g = out.graph
    lay = _P3Layout(N, M, p)
    full = frozenset(range(g.n))
    rows = [bfs_distances(g, x) for x in range(g.n)]
    ball1 = [frozenset(v for v in range(g.n) if rows[x][v] <= 1) for x in range(g.n)]
    ball2 = [frozenset(v for v in range(g.n) if rows[x][v] <= 2) for x in range(g.n)]

    pi_prime = frozenset(
        lay.t(part, i) if assignment[(part, i)] else lay.f(part, i)
        for part in PARTS
        for i in range(1, N + 1)
    )
    uset = frozenset(lay.u(l) for l in range(1, 3 * M + 1))
    wset = frozenset(lay.w(l) for l in range(1, 3 * M + 1))
    aset = frozenset(lay.lit(part, l) for part in PARTS for l in range(1, 2 * N + 1))
    vwset = frozenset(lay.vw(q) for q in range(1, 2 * p + 1))
    vside = frozenset(
        lay.vp(part, q) for part in PARTS for q in range(1, 2 * p + 1)
    ) | frozenset(lay.vstar(part, q) for part in PARTS for q in range(1, 2 * p + 1))
    cset = frozenset(lay.c(j) for j in range(1, M + 1))
    cvset = frozenset(lay.cv(part, i) for part in PARTS for i in range(1, N + 1))
    tops = frozenset({lay.u_top, lay.u_twin})
    t2 = {part: lay.t(part, 1) for part in PARTS}

    fam = enumerate_balls(g)

    def sample_for(idx: int) -> SignedSample:
        members = fam.members(idx)
        x, r = fam.canonical[idx]
        if r == 0:
            return positive_sample({x})
        if members == full:
            return positive_sample((ball2[lay.u_top] & wset) | pi_prime)
        if members == full - aset:
            # Shared by the whole clique row at radius 2, and by any
            # representation column no literal is wired to; the clique-row
            # teaching set is the one that separates it from everything.
            return positive_sample(tops | {lay.z} | vwset | uset)
        if x == lay.z:
            return positive_sample({lay.z, lay.u(1)})
        if x in aset:
            if r == 1:
                return positive_sample(ball1[x])
            part = next(pt for pt in PARTS if lay.lit(pt, 1) <= x <= lay.lit(pt, 2 * N))
            others = [t2[pt] for pt in PARTS if pt != part]
            return positive_sample({lay.u(1), *others} | ball1[x])
        if x in vside:
            base = ball1[x] - uset
            if r == 1:
                return positive_sample(base)
            return positive_sample({lay.w(1), lay.z} | base)
        if x in vwset:
            if r == 1:
                return positive_sample(tops | vwset | (ball1[x] & uset))
            return positive_sample(tops | {lay.z} | vwset | uset)
        if x in cset | cvset:
            if r == 1:
                return positive_sample(ball1[x])
            return positive_sample({x, lay.w(1)} | (ball2[x] & aset))
        if x in uset or x in tops:
            if r == 1:
                # Keep the hub row's unit-ball sets small: identity, z, and
                # the V^W fingerprint; the full closed neighborhood would
                # blow past the budget on small instances.
                return positive_sample({x, lay.z} | (ball1[x] & vwset))
            return positive_sample((ball2[x] & wset) | pi_prime)
        if x in wset:
            if r == 1:
                return positive_sample(ball1[x])
            return positive_sample({x, lay.z} | tops | (ball2[x] & uset))
        raise RuntimeError(f"no teaching rule for canonical center {x} radius {r}")

    samples = [sample_for(i) for i in range(len(fam))]
    tm = TeachingMap(samples)
    if tm.size > out.k:
        raise RuntimeError("witness map exceeds its budget; construction bug")
    return tm


def p3sat_extract_assignment(tm: TeachingMap, out: ReductionOutput) -> dict:
    """Read an assignment off the full ball's teaching set.

    For each variable the teaching set of the whole-graph ball must name the
    vertex of at least one of its two literals; the positive literal wins
    exactly when it appears alone.
    """
    if out.flavor != "p3sat":
        raise ValueError("assignment extraction works on partitioned 3-SAT gadgets")
    fam = enumerate_balls(out.graph)
    full_idx = fam.index_of(frozenset(range(out.graph.n)))
    chosen = tm[full_idx].positive
    lit_vertices: dict[tuple[str, int, str], int] = {}
    for v, role in enumerate(out.roles):
        if role.startswith(("t_", "f_")):
            kind = role[0]
            part = role[2]
            l = int(role[3:])
            i = l // 2 if kind == "t" else (l + 1) // 2
            lit_vertices[(part, i, kind)] = v
    assignment = {}
    n_vars = max(i for (_, i, _) in lit_vertices)
    for part in PARTS:
        for i in range(1, n_vars + 1):
            t_in = lit_vertices[(part, i, "t")] in chosen
            f_in = lit_vertices[(part, i, "f")] in chosen
            if not t_in and not f_in:
                raise InvalidWitnessError(
                    f"teaching set of the full ball misses both literals of {part}{i}"
                )
            assignment[(part, i)] = t_in and not f_in
    return assignment
