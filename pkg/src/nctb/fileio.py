"""Plain-text file formats.

All formats are line oriented; ``#`` starts a comment except where a trailing
comment carries a concept label.  Parsers take text, loaders take paths.
"""

from __future__ import annotations

from fractions import Fraction

from .graphs import Graph, GraphError, IntervalRepresentation
from .reductions import Partitioned3SatInstance, SetCoverInstance
from .teaching import ConceptClass, SignedSample, TeachingMap


def _data_lines(text: str):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


# -- graphs ------------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    lines = list(_data_lines(text))
    if not lines:
        raise GraphError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError("graph file must start with a line 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise GraphError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        u, v = line.split()
        edges.append((int(u), int(v)))
    return Graph(n, edges)


def format_graph(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(out) + "\n"


# -- interval representations -------------------------------------------------

def parse_interval_representation(text: str) -> IntervalRepresentation:
    rows = {}
    for line in _data_lines(text):
        v, s, e = line.split()
        rows[int(v)] = (Fraction(s), Fraction(e))
    if sorted(rows) != list(range(len(rows))):
        raise GraphError("interval file must list every vertex 0..n-1 exactly once")
    return IntervalRepresentation([rows[v] for v in range(len(rows))])


def format_interval_representation(rep: IntervalRepresentation) -> str:
    out = []
    for v, (s, e) in enumerate(rep.segments):
        out.append(f"{v} {s} {e}")
    return "\n".join(out) + "\n"


# -- concept classes -----------------------------------------------------------

def parse_concept_class(text: str, ground_size: int | None = None) -> ConceptClass:
    concepts = []
    labels = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        data, _, comment = line.partition("#")
        data = data.strip()
        members = frozenset() if data == "-" else frozenset(int(tok) for tok in data.split())
        concepts.append(members)
        labels.append(comment.strip() or None)
    if ground_size is None:
        ground_size = 1 + max((max(c) for c in concepts if c), default=-1)
    return ConceptClass(ground_size, concepts, labels)


def format_concept_class(cc: ConceptClass) -> str:
    out = []
    for c, label in zip(cc.concepts, cc.labels):
        line = " ".join(str(v) for v in sorted(c)) if c else "-"
        if label:
            line = f"{line} # {label}"
        out.append(line)
    return "\n".join(out) + "\n"


# -- teaching maps --------------------------------------------------------------

def parse_teaching_map(text: str) -> TeachingMap:
    samples: dict[int, SignedSample] = {}
    for line in _data_lines(text):
        toks = line.split()
        if toks[0] != "concept":
            raise ValueError("teaching map lines start with 'concept <index>'")
        idx = int(toks[1])
        rest = toks[2:]
        if not rest or rest[0] != "pos":
            raise ValueError("teaching map lines need a 'pos' section")
        if "neg" in rest:
            cut = rest.index("neg")
            pos, neg = rest[1:cut], rest[cut + 1:]
        else:
            pos, neg = rest[1:], []
        if idx in samples:
            raise ValueError(f"duplicate entry for concept {idx}")
        samples[idx] = SignedSample(
            frozenset(int(t) for t in pos), frozenset(int(t) for t in neg)
        )
    if sorted(samples) != list(range(len(samples))):
        raise ValueError("teaching map must cover concepts 0..k-1 without gaps")
    return TeachingMap([samples[i] for i in range(len(samples))])


def format_teaching_map(tm: TeachingMap) -> str:
    out = []
    for i, s in enumerate(tm):
        line = f"concept {i} pos " + " ".join(str(v) for v in sorted(s.positive))
        if s.negative:
            line += " neg " + " ".join(str(v) for v in sorted(s.negative))
        out.append(" ".join(line.split()))
    return "\n".join(out) + "\n"


# -- set cover -------------------------------------------------------------------

def parse_set_cover(text: str) -> SetCoverInstance:
    lines = list(_data_lines(text))
    if not lines:
        raise ValueError("empty set cover file")
    n, m, t = (int(x) for x in lines[0].split())
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} set lines, found {len(lines) - 1}")
    sets = []
    for line in lines[1:]:
        if line == "-":
            sets.append(frozenset())
        else:
            sets.append(frozenset(int(x) for x in line.split()))
    return SetCoverInstance(n, tuple(sets), t)


def format_set_cover(inst: SetCoverInstance) -> str:
    out = [f"{inst.n_elements} {inst.m} {inst.budget}"]
    for s in inst.sets:
        out.append(" ".join(str(e) for e in sorted(s)) if s else "-")
    return "\n".join(out) + "\n"


# -- partitioned 3-SAT --------------------------------------------------------------

def parse_p3sat(text: str) -> Partitioned3SatInstance:
    lines = list(_data_lines(text))
    if not lines:
        raise ValueError("empty formula file")
    n, m = (int(x) for x in lines[0].split())
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} clause lines, found {len(lines) - 1}")
    clauses = []
    for line in lines[1:]:
        clause = []
        for tok in line.split():
            part, idx, sign = tok.split(":")
            if sign not in ("+", "-"):
                raise ValueError(f"literal sign must be + or -, got {sign!r}")
            clause.append((part, int(idx), sign == "+"))
        clauses.append(tuple(clause))
    return Partitioned3SatInstance(n, tuple(clauses))


def format_p3sat(inst: Partitioned3SatInstance) -> str:
    out = [f"{inst.n_vars} {inst.m_clauses}"]
    for cl in inst.clauses:
        out.append(" ".join(
            f"{part}:{idx}:{'+' if positive else '-'}" for part, idx, positive in cl
        ))
    return "\n".join(out) + "\n"


# -- role annotations ----------------------------------------------------------------

def format_roles(roles) -> str:
    return "\n".join(f"{v} {r}" for v, r in enumerate(roles)) + "\n"


def parse_roles(text: str) -> tuple[str, ...]:
    rows = {}
    for line in _data_lines(text):
        v, role = line.split()
        rows[int(v)] = role
    return tuple(rows[v] for v in range(len(rows)))


# -- path helpers ------------------------------------------------------------

def _load(path, parser, *args):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return parser(text, *args)
    except (GraphError, ValueError) as exc:
        raise type(exc)(f"{path}: {exc}") from None


def load_graph(path) -> Graph:
    return _load(path, parse_graph)


def load_interval_representation(path) -> IntervalRepresentation:
    return _load(path, parse_interval_representation)


def load_teaching_map(path) -> TeachingMap:
    return _load(path, parse_teaching_map)


def load_concept_class(path, ground_size=None) -> ConceptClass:
    return _load(path, parse_concept_class, ground_size)


def load_set_cover(path) -> SetCoverInstance:
    return _load(path, parse_set_cover)


def load_p3sat(path) -> Partitioned3SatInstance:
    return _load(path, parse_p3sat)
