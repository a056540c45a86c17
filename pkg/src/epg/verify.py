"""Intersection graphs of representations and checks against a target graph."""

from __future__ import annotations

import enum
import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Mapping

from .graph import Edge, Graph, edge, sort_labels
from .grid import GridPath, Representation, crossing_points


class VertexMismatch(ValueError):
    pass


class NotInducedFourCycle(ValueError):
    pass


def overlapping_pairs(rep: Representation) -> set[Edge]:
    """All vertex pairs whose paths share a grid-edge.

    Segments are bucketed by grid-line and swept in order of their start.
    """
    buckets: dict[tuple, list[tuple]] = defaultdict(list)
    for v, path in rep.items():
        for s in path.segments:
            if s.lo < s.hi:
                buckets[(s.orientation, s.line)].append((s.lo, s.hi, v))
    pairs: set[Edge] = set()
    for items in buckets.values():
        items.sort(key=lambda t: (t[0], t[1]))
        active: list[tuple] = []
        for lo, hi, v in items:
            active = [a for a in active if a[1] > lo]
            for _, _, w in active:
                if w != v:
                    pairs.add(edge(v, w))
            active.append((lo, hi, v))
    return pairs


def intersection_graph(rep: Representation) -> Graph:
    return Graph(rep.vertices, overlapping_pairs(rep))


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    max_bends: int
    budget: int | None
    missing_edges: FrozenSet[Edge] = field(default_factory=frozenset)
    extra_edges: FrozenSet[Edge] = field(default_factory=frozenset)
    per_vertex_bends: Mapping[str, int] = field(default_factory=dict)

    def summary(self) -> str:
        lines = [f"ok: {self.ok}", f"max bends: {self.max_bends} (budget {self.budget})"]
        for name, es in (("missing", self.missing_edges), ("extra", self.extra_edges)):
            if es:
                shown = ", ".join("-".join(sort_labels(e)) for e in sorted(es, key=sort_labels)[:10])
                lines.append(f"{name} edges ({len(es)}): {shown}")
        return "\n".join(lines)


def verify_representation(rep: Representation, target: Graph, budget: int | None = None) -> VerifyReport:
    if set(rep.vertices) != set(target.vertices):
        only_rep = sorted(set(rep.vertices) - set(target.vertices))
        only_g = sorted(set(target.vertices) - set(rep.vertices))
        raise VertexMismatch(f"no path for {only_g[:5]}; unknown vertices {only_rep[:5]}")
    got = overlapping_pairs(rep)
    missing = frozenset(target.edges - got)
    extra = frozenset(got - target.edges)
    per = {v: rep[v].bends for v in rep}
    mb = max(per.values(), default=0)
    ok = not missing and not extra and (budget is None or mb <= budget)
    return VerifyReport(ok, mb, budget, missing, extra, per)


# -- 4-cycles in single-bend representations ---------------------------------


class FourCycleClass(enum.Enum):
    FRAME = "frame"
    TRUE_PIE = "true pie"
    FALSE_PIE = "false pie"
    OTHER = "other"


def _bend_point(p: GridPath):
    return p.corners[1] if p.bends == 1 else None


def _passes_straight(p: GridPath, pt) -> bool:
    """The point is interior to one segment of ``p`` (not a bend, not an end)."""
    if pt in p.corners:
        return False
    return any(s.contains_point(pt) for s in p.segments)


def classify_4cycle(rep: Representation, cycle: Iterable[str]) -> FourCycleClass:
    cycle = list(cycle)
    if len(set(cycle)) != 4:
        raise NotInducedFourCycle("need four distinct vertices")
    sub = intersection_graph(rep.restrict(cycle))
    if len(sub.edges) != 4 or any(sub.degree(v) != 2 for v in cycle):
        raise NotInducedFourCycle(f"{cycle} does not induce a 4-cycle")
    paths = [rep[v] for v in cycle]
    if any(p.bends > 1 for p in paths):
        return FourCycleClass.OTHER
    common = [q for q in _candidate_points(paths) if all(_on_path(p, q) for p in paths)]
    for pt in sorted(common):
        bent_here = [p for p in paths if _bend_point(p) == pt]
        straight = [p for p in paths if _passes_straight(p, pt)]
        if len(bent_here) == 4:
            return FourCycleClass.TRUE_PIE
        if len(straight) == 2 and len(bent_here) == 2:
            return FourCycleClass.FALSE_PIE
    bps = [_bend_point(p) for p in paths]
    if all(b is not None for b in bps) and len(set(bps)) == 4:
        xs = {b[0] for b in bps}
        ys = {b[1] for b in bps}
        if len(xs) == 2 and len(ys) == 2:
            return FourCycleClass.FRAME
    return FourCycleClass.OTHER


def _on_path(p: GridPath, q) -> bool:
    return any(s.contains_point(q) for s in p.segments)


def _candidate_points(paths) -> set:
    """Corners plus perpendicular crossings: any point shared by paths that
    are not all collinear there is one of these."""
    pts = {c for p in paths for c in p.corners}
    for p, q in itertools.combinations(paths, 2):
        pts |= crossing_points(p, q)
    return pts
