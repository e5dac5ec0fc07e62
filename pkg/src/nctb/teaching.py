"""Concept classes, signed samples, teaching maps, and the verifier.

A concept class is a finite family of distinct subsets of a ground set
``0..ground_size-1``.  A signed sample carries disjoint positive and negative
vertex sets; it is realizable by a concept when the positives lie inside and
the negatives outside.  A teaching map assigns one realizable sample per
concept; it is non-clashing when no two distinct concepts are both consistent
with the union of their teaching sets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .balls import BallFamily
from .graphs import DistanceMatrix, mask_of

CLASH = "clash"
INCLUSION_BROKEN = "inclusion-broken"
NOT_REALIZABLE = "not-realizable"


@dataclass(frozen=True)
class SignedSample:
    positive: frozenset = frozenset()
    negative: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "positive", frozenset(self.positive))
        object.__setattr__(self, "negative", frozenset(self.negative))
        if self.positive & self.negative:
            raise ValueError("a vertex cannot be both a positive and a negative example")

    @property
    def support(self) -> frozenset:
        return self.positive | self.negative

    def __len__(self) -> int:
        return len(self.positive) + len(self.negative)


EMPTY_SAMPLE = SignedSample()


def positive_sample(vertices) -> SignedSample:
    return SignedSample(frozenset(vertices), frozenset())


class ConceptClass:
    """Ordered family of distinct concepts over a ground set."""

    __slots__ = ("ground_size", "concepts", "labels", "masks")

    def __init__(self, ground_size: int, concepts, labels=None):
        concepts = tuple(frozenset(c) for c in concepts)
        masks = []
        seen = set()
        for c in concepts:
            if any(not 0 <= v < ground_size for v in c):
                raise ValueError("concept member out of range")
            m = mask_of(c)
            if m in seen:
                raise ValueError("concepts must be pairwise distinct as sets")
            seen.add(m)
            masks.append(m)
        if labels is not None and len(labels) != len(concepts):
            raise ValueError("one label per concept expected")
        self.ground_size = ground_size
        self.concepts = concepts
        self.labels = tuple(labels) if labels is not None else (None,) * len(concepts)
        self.masks = tuple(masks)

    def __len__(self) -> int:
        return len(self.concepts)

    def label(self, i: int):
        return self.labels[i]


class TeachingMap:
    """One signed sample per concept, positionally aligned with the class."""

    __slots__ = ("samples",)

    def __init__(self, samples):
        self.samples = tuple(samples)

    def __len__(self) -> int:
        return len(self.samples)

    def __getitem__(self, i: int) -> SignedSample:
        return self.samples[i]

    def __iter__(self):
        return iter(self.samples)

    def __eq__(self, other):
        return isinstance(other, TeachingMap) and self.samples == other.samples

    @property
    def size(self) -> int:
        return max((len(s) for s in self.samples), default=0)


def realizable(sample: SignedSample, concept) -> bool:
    """True when positives lie in the concept and negatives outside it."""
    concept = frozenset(concept)
    return sample.positive <= concept and not (sample.negative & concept)


def clashes(t1: SignedSample, t2: SignedSample, c1, c2) -> bool:
    """True when each sample is also realizable by the other concept."""
    c1, c2 = frozenset(c1), frozenset(c2)
    if c1 == c2:
        raise ValueError("clash test needs two distinct concepts")
    return realizable(t1, c2) and realizable(t2, c1)


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    size: int
    violations: tuple = ()
    positive_only: bool = False

    def __post_init__(self):
        assert self.ok == (not self.violations)


def verify(cc: ConceptClass, tm: TeachingMap, positive_only: bool = False) -> VerificationReport:
    """Check realizability, the inclusion condition, and pairwise non-clashing.

    Violations are (i, j, reason) triples in lexicographic order; unary
    problems are reported with i == j.  Runs in O(|cc|^2) mask operations.
    """
    if len(tm) != len(cc):
        raise ValueError(f"map covers {len(tm)} concepts, class has {len(cc)}")
    n = cc.ground_size
    full = (1 << n) - 1
    masks = cc.masks
    pos, neg = [], []
    violations = []
    for i, s in enumerate(tm.samples):
        p, q = mask_of(s.positive), mask_of(s.negative)
        if (p | q) & ~full:
            raise ValueError(f"sample {i} mentions vertices outside the ground set")
        pos.append(p)
        neg.append(q)
        if (p & (masks[i] ^ full)) or (q & masks[i]):
            violations.append((i, i, NOT_REALIZABLE))
        if positive_only and q:
            violations.append((i, i, INCLUSION_BROKEN))
    not_masks = [m ^ full for m in masks]
    k = len(masks)
    for i in range(k):
        pi, ni = pos[i], neg[i]
        mi, nmi = masks[i], not_masks[i]
        for j in range(i + 1, k):
            if (pi & not_masks[j]) or (ni & masks[j]):
                continue
            if (pos[j] & nmi) or (neg[j] & mi):
                continue
            violations.append((i, j, CLASH))
    violations.sort()
    size = max((len(s) for s in tm.samples), default=0)
    return VerificationReport(not violations, size, tuple(violations), positive_only)


def verify_approx(family: BallFamily, tm: TeachingMap, rho: int,
                  d: DistanceMatrix) -> VerificationReport:
    """Positive-only verification over a ball family where nearby pairs are exempt.

    A pair of balls is exempt from the non-clashing requirement when their
    Hausdorff distance is at most rho, or equivalently when each is contained
    in the other inflated by rho.
    """
    if len(tm) != len(family):
        raise ValueError(f"map covers {len(tm)} concepts, family has {len(family)}")
    n = family.n
    full = (1 << n) - 1
    masks = family.masks
    inflated = []
    for x, r in family.canonical:
        row = d.rows[x]
        lim = r + rho
        inflated.append(mask_of(v for v in range(n) if row[v] <= lim))
    pos, neg = [], []
    violations = []
    for i, s in enumerate(tm.samples):
        p, q = mask_of(s.positive), mask_of(s.negative)
        pos.append(p)
        neg.append(q)
        if (p & (masks[i] ^ full)) or (q & masks[i]):
            violations.append((i, i, NOT_REALIZABLE))
        if q:
            violations.append((i, i, INCLUSION_BROKEN))
    not_masks = [m ^ full for m in masks]
    k = len(masks)
    for i in range(k):
        pi, ni = pos[i], neg[i]
        mi, nmi = masks[i], not_masks[i]
        infl_i = inflated[i]
        for j in range(i + 1, k):
            if (pi & not_masks[j]) or (ni & masks[j]):
                continue
            if (pos[j] & nmi) or (neg[j] & mi):
                continue
            if (mi & (inflated[j] ^ full)) == 0 and (masks[j] & (infl_i ^ full)) == 0:
                continue  # within Hausdorff distance rho of each other
            violations.append((i, j, CLASH))
    violations.sort()
    size = max((len(s) for s in tm.samples), default=0)
    return VerificationReport(not violations, size, tuple(violations), True)


def balls_as_concept_class(family: BallFamily) -> ConceptClass:
    """One concept per distinct ball, labeled by its canonical (center, radius)."""
    labels = [f"B({x},{r})" for x, r in family.canonical]
    return ConceptClass(family.n, [family.members(i) for i in range(len(family))], labels)


def c5_example_class() -> tuple[ConceptClass, TeachingMap]:
    """A 10-concept class on the 5-cycle with a size-2 positive-only map.

    Concepts are the five non-adjacent vertex pairs and the five paths of
    length two (vertex order 0..4 taken as counterclockwise).  Each pair
    teaches itself; each path teaches its first edge.
    """
    concepts = []
    labels = []
    samples = []
    for i in range(5):
        pair = frozenset({i, (i + 2) % 5})
        concepts.append(pair)
        labels.append(f"pair({i},{(i + 2) % 5})")
        samples.append(positive_sample(pair))
    for x in range(5):
        concepts.append(frozenset({x, (x + 1) % 5, (x + 2) % 5}))
        labels.append(f"path({x},{(x + 1) % 5},{(x + 2) % 5})")
        samples.append(positive_sample({x, (x + 1) % 5}))
    return ConceptClass(5, concepts, labels), TeachingMap(samples)
