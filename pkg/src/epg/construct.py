"""Constructors turning covers, orders and build sequences into representations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .graph import (
    CliqueCover,
    DegeneracyOrder,
    Graph,
    GraphError,
    cover_from_coloring,
    degeneracy_order,
    edge_coloring,
    sort_labels,
)
from .grid import GridPath, H, V, Representation, compress_coordinates, normalize_path
from .layout import ConstructionError, Layout, sign


class InvalidOrder(GraphError):
    pass


# -- global clique cover: staircases -----------------------------------------


def construct_from_global_cover(g: Graph, cover: CliqueCover) -> Representation:
    """Staircases with k-1 bends from a cover by k families.

    Family i gets a block of parallel grid-lines, one per clique, vertical for
    odd i and horizontal for even i.  A vertex's i-th segment lies on the line
    of its clique in family i and runs from block i-1 to block i+1, so two
    segments share a line exactly when the vertices share a clique, and then
    they overlap.
    """
    cover.validate(g)
    fams = cover.extended(g).families
    if not fams:
        fams = (tuple(frozenset([v]) for v in g.vertices),)
    k = len(fams)
    pos = []
    for fam in fams:
        where = {}
        for j, clique in enumerate(sorted(fam, key=sort_labels), 1):
            for v in clique:
                where[v] = j
        pos.append(where)
    base = {}
    xo, yo = 0, 1  # y = 0 is block 0, the common start line
    for i in range(1, k + 1):
        if i % 2:
            base[i] = xo
            xo += len(fams[i - 1]) + 1
        else:
            base[i] = yo
            yo += len(fams[i - 1]) + 1
    end_line = xo if (k + 1) % 2 else yo

    def coord(i, v):
        if i == 0:
            return 0
        if i == k + 1:
            return end_line
        return base[i] + pos[i - 1][v]

    paths = {}
    for v in g.vertices:
        pts = [(coord(1, v), 0)]
        for i in range(1, k + 1):
            if i % 2:
                pts.append((coord(i, v), coord(i + 1, v)))
            else:
                pts.append((coord(i + 1, v), coord(i, v)))
        paths[v] = normalize_path(pts)
    return compress_coordinates(Representation(paths))


def construct_edge_coloring(g: Graph) -> Representation:
    """Colour classes are matchings, hence a global cover with chi' families."""
    return construct_from_global_cover(g, cover_from_coloring(edge_coloring(g)))


# -- local clique cover: snakes ----------------------------------------------


def construct_from_local_cover(g: Graph, cover: CliqueCover) -> Representation:
    """One vertical lane per clique; each vertex snakes through its lanes.

    Vertex number t runs its vertical pieces over [-t, t] and its connectors on
    the lines y = t and y = -t, which no other vertex uses.
    """
    cover.validate(g)
    cliques = cover.cliques()
    covered = set().union(*cliques) if cliques else set()
    cliques = cliques + [frozenset([v]) for v in g.vertices if v not in covered]
    lanes: dict[str, list[int]] = {v: [] for v in g.vertices}
    for j, c in enumerate(cliques):
        for v in c:
            lanes[v].append(2 * j)
    paths = {}
    for t, v in enumerate(g.vertices, 1):
        pts = []
        for s, x in enumerate(lanes[v]):
            lo, hi = (-t, t) if s % 2 == 0 else (t, -t)
            pts.extend([(x, lo), (x, hi)])
        paths[v] = normalize_path(pts)
    return compress_coordinates(Representation(paths))


# -- degeneracy --------------------------------------------------------------


def construct_degeneracy(g: Graph, order: DegeneracyOrder | None = None, check: bool = True) -> Representation:
    """Insert vertices along a degeneracy order with at most 2d-1 bends each.

    Every vertical display is kept crossing the line y = 0, so all of them see
    each other.  A new vertex snakes through the vertical displays of all but
    one earlier neighbour on one side of that line, then hooks across it into a
    horizontal display of the last neighbour.
    """
    if order is None:
        order = degeneracy_order(g)
    try:
        order.validate(g)
    except GraphError as exc:
        raise InvalidOrder(str(exc)) from exc
    d = order.d
    if d == 0:
        return Representation({v: GridPath(((2 * i, 0), (2 * i + 1, 0))) for i, v in enumerate(order.order)})
    if d == 1:
        return _construct_forest(g, order)
    budget = 2 * d - 1
    back = order.back_neighbors(g)
    lay = Layout()
    for v in order.order:
        lay = _insert_degenerate(lay, v, back[v], budget, check)
    return lay.representation()


def _degeneracy_ok(lay: Layout, v: str, nbrs, budget: int) -> bool:
    if lay.paths[v].bends > budget or lay.neighbours_of(v) != set(nbrs):
        return False
    return all(lay.axis_displays(u, V) and lay.free_parts(u, H) for u in lay.paths)


def _insert_degenerate(lay: Layout, v: str, nbrs: list[str], budget: int, check: bool) -> Layout:
    for attempt in _degenerate_candidates(lay, v, nbrs):
        trial = Layout(lay.paths)
        pts = attempt(trial)
        if pts is None:
            continue
        trial.add(v, normalize_path(pts))
        if not check or _degeneracy_ok(trial, v, nbrs, budget):
            return trial
    raise ConstructionError(f"could not insert {v!r} with neighbours {nbrs}")


def _degenerate_candidates(lay: Layout, v: str, nbrs: list[str]):
    if not nbrs:
        def lone(t: Layout):
            x0 = t.beyond(0)
            x1 = t.above(0, x0)
            y0 = t.beyond(1)
            y1 = t.beyond(1, -1)
            return [(x0, y0), (x1, y0), (x1, y1)]

        yield lone
        return
    for hook in reversed(nbrs):
        rest = [w for w in nbrs if w != hook]
        for target in lay.free_parts(hook, H):
            for descending in (False, True):
                yield _hook_builder(rest, hook, target, descending)


def _hook_builder(rest, hook, target, descending):
    line_k, lo_k, hi_k = target

    def build(t: Layout):
        side = -sign(line_k)  # the snake goes on the other side of y = 0
        if side == 0:
            return None
        shows = []
        for w in rest:
            ds = t.axis_displays(w, V)
            if not ds:
                return None
            shows.append(ds[0])
        shows.sort(key=lambda s: s[0], reverse=descending)
        ys = _lanes(t, shows, side, 3)
        if ys is None:
            return None
        near, far, end = ys
        pts = []
        m = len(shows)
        for i, (x, _, _) in enumerate(shows):
            # the last piece runs near -> end; earlier ones alternate
            k = m - 1 - i
            if k == 0:
                pts.extend([(x, near), (x, end)])
            elif k % 2:
                pts.extend([(x, far), (x, near)])
            else:
                pts.extend([(x, near), (x, far)])
        if not pts:
            pts.append((t.beyond(0), end))
        x_in = t.above(0, lo_k, hi_k)
        x_out = t.above(0, x_in, hi_k)
        pts.extend([(x_in, pts[-1][1]), (x_in, line_k), (x_out, line_k)])
        return pts

    return build


def _lanes(t: Layout, shows, side: int, count: int):
    """``count`` fresh lines between y = 0 and the ends of all displays on ``side``."""
    if side > 0:
        bound = min((hi for _, _, hi in shows), default=None)
        out, cur = [], 0
        for _ in range(count):
            cur = t.above(1, cur, bound)
            out.append(cur)
    else:
        bound = max((lo for _, lo, _ in shows), default=None)
        out, cur = [], 0
        for _ in range(count):
            cur = t.below(1, cur, bound)
            out.append(cur)
    return out


def _construct_forest(g: Graph, order: DegeneracyOrder) -> Representation:
    """Single-bend paths for forests.

    A child takes a short piece of a displayed segment of its parent and turns
    onto a fresh grid-line, which then displays the child.
    """
    back = order.back_neighbors(g)
    lay = Layout()
    for v in order.order:
        if not back[v]:
            x0 = lay.beyond(0)
            x1 = lay.above(0, x0)
            y0 = lay.beyond(1)
            y1 = lay.above(1, y0)
            lay.add(v, normalize_path([(x0, y0), (x1, y0), (x1, y1)]))
            continue
        (parent,) = back[v]
        parts = [(V, p) for p in lay.free_parts(parent, V)] + [(H, p) for p in lay.free_parts(parent, H)]
        if not parts:
            raise ConstructionError(f"{parent!r} has no displayed piece left")
        orient, (line, lo, hi) = parts[0]
        along = 1 if orient == V else 0
        a = lay.above(along, lo, hi)
        b = lay.above(along, a, hi)
        if orient == V:
            x_new = lay.beyond(0)
            pts = [(line, a), (line, b), (x_new, b)]
        else:
            y_new = lay.beyond(1)
            pts = [(a, line), (b, line), (b, y_new)]
        lay.add(v, normalize_path(pts))
        if lay.neighbours_of(v) != {parent}:
            raise ConstructionError(f"forest insertion of {v!r} touched other paths")
    return lay.representation()


# -- interval export ---------------------------------------------------------


@dataclass(frozen=True)
class IntervalRepresentation:
    """Closed integer intervals of grid-edge indices on one line."""

    intervals: Mapping[str, tuple[tuple[int, int], ...]]

    def max_intervals(self) -> int:
        return max((len(iv) for iv in self.intervals.values()), default=0)

    def overlap_graph(self) -> Graph:
        events = sorted((a, b, v) for v, ivs in self.intervals.items() for a, b in ivs)
        es = set()
        active: list[tuple] = []
        for a, b, v in events:
            active = [x for x in active if x[1] >= a]
            for _, _, w in active:
                if w != v:
                    es.add(frozenset((v, w)))
            active.append((a, b, v))
        return Graph(self.intervals.keys(), es)


def to_interval_representation(rep: Representation) -> IntervalRepresentation:
    """Lay every grid-line end to end on one line; each segment becomes one interval."""
    rep = compress_coordinates(rep)
    extent: dict[tuple, list] = {}
    for p in rep.paths.values():
        for s in p.segments:
            if s.lo < s.hi:
                key = (s.orientation, s.line)
                lo, hi = extent.get(key, (s.lo, s.hi))
                extent[key] = (min(lo, s.lo), max(hi, s.hi))
    offset = {}
    cur = 0
    for key in sorted(extent):
        lo, hi = extent[key]
        offset[key] = cur - lo
        cur += hi - lo + 1
    out = {}
    for v, p in rep.paths.items():
        ivs = []
        for s in p.segments:
            if s.lo < s.hi:
                o = offset[(s.orientation, s.line)]
                ivs.append((s.lo + o, s.hi + o - 1))
        out[v] = tuple(ivs)
    return IntervalRepresentation(out)
