"""Exact minimum non-clashing teaching map sizes by canonical backtracking.

A sample realizable by a concept is determined by its support (signs are
forced by membership), so candidates are support sets of size at most k,
subsets of the concept in positive-only mode.  Two concepts clash under
chosen supports S, S' exactly when neither support meets their disagreement
set D = C xor C'; the search propagates the contrapositive: once an assigned
support misses D, the partner's support must hit D inside its own allowed
set.

Three sound shortcuts decide most small instances outright:

* distinct concepts always need distinct samples (equal samples clash), so
  more concepts than sign vectors of support <= k is an immediate NO;
* a pair whose disagreement set avoids one side's allowed set forces a
  permanent unary requirement on the other side;
* more pairwise disjoint requirements than k on one concept is a NO.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .teaching import ConceptClass, SignedSample, TeachingMap, verify

YES = "yes"
NO = "no"
BUDGET_EXCEEDED = "budget-exceeded"
OPTIMAL = "optimal"


@dataclass(frozen=True)
class DecisionResult:
    answer: str  # yes | no | budget-exceeded
    witness: TeachingMap | None
    nodes: int


@dataclass(frozen=True)
class SolveResult:
    k: int | None
    witness: TeachingMap | None
    positive_only: bool
    nodes_explored: int
    status: str  # optimal | budget-exceeded
    no_upto: int  # largest k proven infeasible (-1 when none)


class _Budget(Exception):
    pass


def nctd_decision(cc: ConceptClass, k: int, positive_only: bool,
                  budget: int = 10**7) -> DecisionResult:
    """Decide whether a non-clashing map of size at most k exists.

    Concept selection is fail-first (most pending requirements first, with
    descending cardinality breaking ties) and candidate supports per concept
    are enumerated by size then lexicographically, so the search is fully
    deterministic and the witness of a YES answer is canonical.  The node
    budget counts attempted candidate placements; exhausting it is reported
    explicitly, never as a NO.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if len(cc) == 0:
        raise ValueError("concept class must be non-empty")
    n = cc.ground_size
    count = len(cc)
    distinct = 0
    for s in range(0, min(k, n) + 1):
        distinct += comb(n, s) * (1 if positive_only else 2 ** s)
        if distinct >= count:
            break
    if distinct < count:
        return DecisionResult(NO, None, 0)

    masks = cc.masks
    full = (1 << n) - 1
    static_rank = {ci: rank for rank, ci in enumerate(
        sorted(range(count), key=lambda i: (-masks[i].bit_count(), i)))}
    allowed = [masks[i] if positive_only else full for i in range(count)]

    # Permanent unary requirements: if D(i, j) misses allowed[i], concept j
    # alone must distinguish the pair.
    base_musts: list[list[int]] = [[] for _ in range(count)]
    for i in range(count):
        mi, ai = masks[i], allowed[i]
        for j in range(i + 1, count):
            diff = mi ^ masks[j]
            if not diff & ai:
                base_musts[j].append(diff & allowed[j])
            elif not diff & allowed[j]:
                base_musts[i].append(diff & ai)
    for i in range(count):
        if _disjoint_lower_bound(base_musts[i]) > k:
            return DecisionResult(NO, None, 0)

    # Forward checking with conflict-directed backjumping and fail-first
    # dynamic concept selection.  Pending requirements carry the depth that
    # created them (-1 for the permanent ones); when a depth runs out of
    # candidates, search resumes at the deepest contributor, and skipped
    # subtrees provably contain no solution.
    pending: list[list[tuple[int, int]]] = [[(m, -1) for m in ms] for ms in base_musts]
    # Greedy pairwise-disjoint requirement tracking: disjoint requirements
    # need distinct support vertices, so more than k of them is infeasible.
    dj_mask = [0] * count
    dj_cnt = [0] * count
    for i in range(count):
        for req, _ in pending[i]:
            if not req & dj_mask[i]:
                dj_mask[i] |= req
                dj_cnt[i] += 1
    chosen: list[int] = [0] * count
    free = [True] * count
    conf: list[set[int]] = [set() for _ in range(count)]
    SUCCESS = count
    nodes = 0

    def pick() -> int:
        # Most constrained first; descending cardinality breaks ties.
        best = -1
        best_key = None
        for i in range(count):
            if free[i]:
                key = (-dj_cnt[i], -len(pending[i]), static_rank[i])
                if best_key is None or key < best_key:
                    best, best_key = i, key
        return best

    def search(depth: int) -> int:
        """Returns SUCCESS, or the depth to jump back to (-1: no depth helps)."""
        nonlocal nodes
        if depth == count:
            return SUCCESS
        ci = pick()
        free[ci] = False
        mi = masks[ci]
        conf[depth] = {src for _, src in pending[ci]}
        try:
            for cand in _support_candidates(allowed[ci], [r for r, _ in pending[ci]], k):
                nodes += 1
                if nodes > budget:
                    raise _Budget
                added: list[tuple[int, int, int]] = []
                feasible = True
                for cj in range(count):
                    if not free[cj]:
                        continue
                    diff = mi ^ masks[cj]
                    if cand & diff:
                        continue
                    req = diff & allowed[cj]
                    if not req:
                        feasible = False
                        break
                    pending[cj].append((req, depth))
                    added.append((cj, dj_mask[cj], dj_cnt[cj]))
                    if not req & dj_mask[cj]:
                        dj_mask[cj] |= req
                        dj_cnt[cj] += 1
                        if dj_cnt[cj] > k:
                            conf[depth].update(src for _, src in pending[cj])
                            feasible = False
                            break
                if feasible:
                    chosen[ci] = cand
                    result = search(depth + 1)
                else:
                    result = None
                for cj, old_mask, old_cnt in reversed(added):
                    pending[cj].pop()
                    dj_mask[cj] = old_mask
                    dj_cnt[cj] = old_cnt
                if result == SUCCESS:
                    return SUCCESS
                if result is not None and result != depth:
                    return result
        finally:
            free[ci] = True
        conf[depth].discard(depth)
        prior = [lvl for lvl in conf[depth] if 0 <= lvl < depth]
        if not prior:
            return -1
        target = max(prior)
        conf[target].update(lvl for lvl in conf[depth] if lvl != target)
        return target

    try:
        found = search(0) == SUCCESS
    except _Budget:
        return DecisionResult(BUDGET_EXCEEDED, None, nodes)
    if not found:
        return DecisionResult(NO, None, nodes)
    samples = []
    for i in range(count):
        sup = chosen[i]
        samples.append(SignedSample(
            frozenset(v for v in _bits(sup) if masks[i] >> v & 1),
            frozenset(v for v in _bits(sup) if not masks[i] >> v & 1),
        ))
    witness = TeachingMap(samples)
    report = verify(cc, witness, positive_only)
    if not report.ok or report.size > k:
        raise RuntimeError("solver produced an invalid witness; internal error")
    return DecisionResult(YES, witness, nodes)


def nctd_exact(cc: ConceptClass, positive_only: bool, kmax: int | None = None,
               budget: int = 10**7) -> SolveResult:
    """Smallest k with a non-clashing map, by iterative deepening.

    Teaching every concept all of its members is always non-clashing, so the
    answer is at most the largest concept size; that is the default kmax.
    """
    if kmax is None:
        kmax = max(m.bit_count() for m in cc.masks)
    total = 0
    for k in range(kmax + 1):
        res = nctd_decision(cc, k, positive_only, budget - total)
        total += res.nodes
        if res.answer == YES:
            return SolveResult(k, res.witness, positive_only, total, OPTIMAL, k - 1)
        if res.answer == BUDGET_EXCEEDED:
            return SolveResult(None, None, positive_only, total, BUDGET_EXCEEDED, k - 1)
    return SolveResult(None, None, positive_only, total, BUDGET_EXCEEDED, kmax)


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _disjoint_lower_bound(musts) -> int:
    """Greedy count of pairwise disjoint requirement sets (hitting-set bound)."""
    taken = 0
    cnt = 0
    for mm in sorted(musts, key=lambda m: m.bit_count()):
        if not mm & taken:
            taken |= mm
            cnt += 1
    return cnt


def _support_candidates(allowed: int, musts, k: int):
    """Support masks within ``allowed`` hitting every requirement, canonically.

    Order is by support size, then lexicographic on the sorted vertex tuple.
    Requirements that are singletons force their vertex into the support,
    which keeps the enumeration near-minimal on heavily constrained concepts.
    """
    forced = 0
    rest = []
    seen = set()
    for mm in musts:
        mm &= allowed
        if not mm:
            return
        if mm in seen:
            continue
        seen.add(mm)
        if mm.bit_count() == 1:
            forced |= mm
        else:
            rest.append(mm)
    nf = forced.bit_count()
    if nf > k:
        return
    rest = [mm for mm in rest if not mm & forced]
    if _disjoint_lower_bound(rest) > k - nf:
        return
    base = list(_bits(allowed & ~forced))
    for extra in range(0, k - nf + 1):
        for combo in combinations(base, extra):
            m = forced
            for v in combo:
                m |= 1 << v
            if all(m & mm for mm in rest):
                yield m
