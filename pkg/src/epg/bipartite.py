"""Representations of complete bipartite graphs K_{m,n}.

Class A gets labels ``a1..am`` and class B ``b1..bn``, the same labels as
:func:`epg.graph.gen_complete_bipartite`, so outputs can be checked against
that graph directly.
"""

from __future__ import annotations

import copy
import itertools
import random
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping

from .graph import Graph, sort_labels
from .grid import GridPath, H, V, Representation, compress_coordinates, crossing_points, make_pretzel, normalize_path
from .layout import ConstructionError


class MTooSmall(ValueError):
    pass


def _labels(m: int, n: int):
    return [f"a{i}" for i in range(1, m + 1)], [f"b{j}" for j in range(1, n + 1)]


# -- comb ----------------------------------------------------------------------


def construct_comb(m: int, n: int) -> Representation:
    """A as parallel vertical segments; every b snakes once through each of them.

    b_j owns the rows 2j-1 and 2j: its piece on every A-segment spans exactly
    these two rows and its connectors alternate between them.
    """
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    A, B = _labels(m, n)
    paths = {a: GridPath(((2 * i, 0), (2 * i, 2 * n + 1))) for i, a in enumerate(A, 1)}
    for j, b in enumerate(B, 1):
        pts = []
        for i in range(1, m + 1):
            lo, hi = (2 * j - 1, 2 * j) if i % 2 else (2 * j, 2 * j - 1)
            pts.extend([(2 * i, lo), (2 * i, hi)])
        paths[b] = normalize_path(pts)
    return Representation(paths)


def complete_bipartite_sides(g: Graph):
    """The two classes (smaller first) if ``g`` is complete bipartite with both sides non-empty, else None."""
    vs = g.vertices
    if len(vs) < 2 or not g.edges:
        return None
    comps = g.components()
    if len(comps) != 1:
        return None
    v0 = vs[0]
    side_b = set(g.neighbors(v0))
    side_a = set(vs) - side_b
    if len(side_a) * len(side_b) != len(g.edges):
        return None
    if any(not g.has_edge(a, b) for a in side_a for b in side_b):
        return None
    sa, sb = sort_labels(side_a), sort_labels(side_b)
    return (sa, sb) if len(sa) <= len(sb) else (sb, sa)


def complete_bipartite_comb(g: Graph, max_side: int | None = None) -> Representation | None:
    """Comb for a complete bipartite ``g`` whose smaller side has at most ``max_side`` vertices."""
    sides = complete_bipartite_sides(g)
    if sides is None:
        return None
    small, large = sides
    if max_side is not None and len(small) > max_side:
        return None
    rep = construct_comb(len(small), len(large))
    A, B = _labels(len(small), len(large))
    rename = dict(zip(A, small)) | dict(zip(B, large))
    return Representation({rename[v]: p for v, p in rep.items()})


# -- blown-up pretzel ----------------------------------------------------------


@dataclass(frozen=True)
class Block:
    kind: str  # "1_1", "1_2" or "2"
    quadrant: int
    bbox: tuple  # (xmin, ymin, xmax, ymax)
    points: frozenset


@dataclass(frozen=True)
class BlownUpPretzel:
    m: int
    j: int
    paths: Mapping[str, GridPath]
    blocks: tuple
    classes: Mapping[str, int]
    center: tuple  # point where the quadrant separators meet

    def quadrant(self, p) -> int:
        cx, cy = self.center
        right, top = p[0] > cx, p[1] > cy
        return {(True, True): 1, (False, True): 2, (False, False): 3, (True, False): 4}[(right, top)]


def _offset_pattern(t: int) -> int:
    # copies of one pretzel path cross each other once near every bend
    return 1 if t % 4 in (0, 3) else -1


def blowup_pretzel(m: int, j: int) -> BlownUpPretzel:
    """m paths with 2j-1 bends each: floor(m/2) parallel copies of the first
    pretzel path and ceil(m/2) of the second.

    The pretzel is scaled by m+1 and copy h moves every segment by h grid-lines
    sideways, alternating the direction so that two copies cross next to each
    bend.  Copies start and end on common lines.
    """
    if m < 1 or j < 1:
        raise ValueError("need m, j >= 1")
    f, c = m // 2, m - m // 2
    scale = m + 1
    p1, p2 = make_pretzel(j)
    labels, _ = _labels(m, 0)
    paths, classes = {}, {}
    k = 0
    for cls, base, count, sgn in ((1, p1, f, 1), (2, p2, c, -1)):
        pts = [(x * scale, y * scale) for x, y in base.corners]
        for h in range(count):
            lines = []
            for t, (p, q) in enumerate(zip(pts, pts[1:])):
                off = h * _offset_pattern(t) * sgn
                lines.append((H, p[1] + off) if p[1] == q[1] else (V, p[0] + off))
            corners = [(pts[0][0], lines[0][1]) if lines[0][0] == H else (lines[0][1], pts[0][1])]
            for (o1, l1), (_, l2) in zip(lines, lines[1:]):
                corners.append((l2, l1) if o1 == H else (l1, l2))
            o, l = lines[-1]
            corners.append((pts[-1][0], l) if o == H else (l, pts[-1][1]))
            label = labels[k]
            k += 1
            paths[label] = normalize_path(corners)
            classes[label] = cls
    # the pretzel is symmetric under a half-turn about this point
    center = (Fraction((2 * j + 2) * scale, 2), Fraction(-scale, 2))
    bp = BlownUpPretzel(m, j, paths, (), classes, center)
    return BlownUpPretzel(m, j, paths, _catalog_blocks(bp), classes, center)


def _catalog_blocks(bp: BlownUpPretzel) -> tuple:
    """Group crossing points by the pair of pretzel segments they come from."""
    seg_index = {}
    for v, p in bp.paths.items():
        for t, s in enumerate(p.segments):
            seg_index[(v, t)] = s
    groups = defaultdict(set)
    for u, w in itertools.combinations(bp.paths, 2):
        pu, pw = bp.paths[u], bp.paths[w]
        for pt in crossing_points(pu, pw):
            tu = [t for t, s in enumerate(pu.segments) if s.contains_point(pt)]
            tw = [t for t, s in enumerate(pw.segments) if s.contains_point(pt)]
            key_u = (bp.classes[u], min(tu))
            key_w = (bp.classes[w], min(tw))
            groups[tuple(sorted((key_u, key_w)))].add(pt)
    blocks = []
    for (ku, kw), pts in sorted(groups.items()):
        kind = "2" if ku[0] != kw[0] else f"1_{ku[0]}"
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        mid = ((min(xs) + max(xs)) / 2, (min(ys) + max(ys)) / 2)
        blocks.append(Block(kind, bp.quadrant(mid), (min(xs), min(ys), max(xs), max(ys)), frozenset(pts)))
    return tuple(blocks)


def total_A_crossings(m: int) -> int:
    """Pairwise crossings among the m paths of the blown-up pretzel with 2m-3 bends."""
    f, c = m // 2, m - m // 2
    return f * c * m * (m - 1) + (comb(c, 2) + comb(f, 2)) * (m * (m - 1) - 1)


# -- staircases: m-1 bends --------------------------------------------------------


def kmm3_size(m: int) -> int:
    """Size of class B in the (m-1)-bend construction."""
    if m % 2:
        return (m**3 - 4 * m * m + 3 * m) // 4
    return (m**3 - 2 * m * m - 4 * m + 16) // 4


def _unit_owner(paths: Mapping[str, GridPath]) -> dict:
    owner = defaultdict(set)
    for v, p in paths.items():
        for s in p.segments:
            for t in range(s.lo, s.hi):
                owner[(s.orientation, s.line, t)].add(v)
    return owner


def _staircases(m: int, paths: Mapping[str, GridPath]):
    """Every unit-step staircase whose m unit segments lie on m distinct A-paths.

    Yields (unit edges, corners).
    """
    owner = _unit_owner(paths)
    xs = [x for p in paths.values() for x, _ in p.corners]
    ys = [y for p in paths.values() for _, y in p.corners]
    seen = set()
    for x0 in range(min(xs) - 1, max(xs) + 2):
        for y0 in range(min(ys) - 1, max(ys) + 2):
            for dx, dy in ((1, 1), (-1, 1), (-1, -1), (1, -1)):
                for first in (H, V):
                    x, y, o = x0, y0, first
                    pts, units, hit = [(x, y)], [], set()
                    for _ in range(m):
                        if o == H:
                            key = (H, y, min(x, x + dx))
                            x += dx
                        else:
                            key = (V, x, min(y, y + dy))
                            y += dy
                        w = owner.get(key, ())
                        if len(w) != 1 or next(iter(w)) in hit:
                            break
                        hit |= w
                        units.append(key)
                        pts.append((x, y))
                        o = V if o == H else H
                    else:
                        key = frozenset(units)
                        if key not in seen:
                            seen.add(key)
                            yield key, pts


def construct_kmm3(m: int, n: int | None = None) -> Representation:
    """K_{m,n} with m-1 bends: A is the blown-up pretzel with 2*floor(m/2)-1 bends.

    Each b is a staircase of m unit segments, one on every A-path.  Staircases
    are packed greedily, most constrained first, so that no two share a
    grid-edge.  ``n`` defaults to :func:`kmm3_size`.
    """
    if m < 3:
        raise MTooSmall(f"m = {m} < 3")
    if n is None:
        n = kmm3_size(m)
    bp = blowup_pretzel(m, m // 2)
    a_paths = compress_coordinates(Representation(dict(bp.paths)))
    # compression keeps the order of lines, so blocks become unit grids
    cands = list(_staircases(m, dict(a_paths.items())))
    conflicts = {i: 0 for i in range(len(cands))}
    by_unit = defaultdict(list)
    for i, (units, _) in enumerate(cands):
        for u in units:
            by_unit[u].append(i)
    for ids in by_unit.values():
        for i in ids:
            conflicts[i] += len(ids) - 1
    used: set = set()
    chosen = []
    for i in sorted(conflicts, key=lambda i: (conflicts[i], cands[i][1])):
        units, pts = cands[i]
        if units & used:
            continue
        used |= units
        chosen.append(pts)
        if len(chosen) == n:
            break
    if len(chosen) < n:
        raise ConstructionError(f"only {len(chosen)} staircases fit for m = {m}")
    A, B = _labels(m, n)
    paths = dict(a_paths.items())
    for b, pts in zip(B, chosen):
        paths[b] = normalize_path(pts)
    return Representation(paths)


# -- seeds and snakes: 2m-3 bends ---------------------------------------------------


def m4_size(m: int) -> int:
    """floor(m^4 - 2m^3 + 5/2 m^2 - 2m - 4)."""
    return (2 * m**4 - 4 * m**3 + 5 * m * m - 4 * m - 8) // 2


class _BandOrder:
    """Left-to-right order of paths whose pieces share a unit band.

    A band is the open strip between two consecutive integer lines.  Each path
    using the band gets one private value in it; pieces anchored at the lower
    edge must end below every piece they would otherwise cover, and so on.
    These requirements form a DAG per band; values follow its topological
    order.
    """

    def __init__(self):
        self.succ = defaultdict(lambda: defaultdict(set))

    def _reaches(self, band, s, t) -> bool:
        g = self.succ[band]
        seen, stack = {s}, [s]
        while stack:
            u = stack.pop()
            if u == t:
                return True
            for w in g.get(u, ()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return False

    def try_add(self, edges) -> bool:
        """Add (band, before, after) edges; roll back and return False on a cycle."""
        added = []
        for band, a, b in edges:
            if a == b or self._reaches(band, b, a):
                for band2, a2, b2 in added:
                    self.succ[band2][a2].discard(b2)
                return False
            if b not in self.succ[band][a]:
                self.succ[band][a].add(b)
                added.append((band, a, b))
        return True

    def values(self, members: Mapping) -> dict:
        out = {}
        for band, ps in members.items():
            g = self.succ[band]
            ps = sorted(ps)
            indeg = dict.fromkeys(ps, 0)
            for p in ps:
                for q in g.get(p, ()):
                    if q in indeg:
                        indeg[q] += 1
            ready = [p for p in ps if indeg[p] == 0]
            order = []
            while ready:
                p = ready.pop(0)
                order.append(p)
                for q in sorted(g.get(p, ())):
                    if q in indeg:
                        indeg[q] -= 1
                        if indeg[q] == 0:
                            ready.append(q)
            if len(order) != len(ps):
                raise ConstructionError("cyclic band order")
            for i, p in enumerate(order, 1):
                out[(band, p)] = band[1] + Fraction(i, len(ps) + 1)
        return out


@dataclass
class _Seed:
    """A single-bend path at ``corner`` meeting A-paths ``a`` (vertically) and ``b``."""

    a: str
    b: str
    corner: tuple
    vband: int  # lower edge of the band holding the vertical end
    hband: int
    vdir: int  # +1 when the vertical end lies above the corner
    hdir: int
    vpieces: list = None
    hpieces: list = None


class _SeedPlanner:
    def __init__(self, a_paths: Mapping[str, GridPath]):
        self.A = dict(a_paths)
        self.names = sort_labels(self.A)
        self.order = _BandOrder()
        self.arms = defaultdict(list)  # (orient, line, band) -> [(seed, from_below)]
        self.pieces = defaultdict(list)  # (orient, line, band) -> [seed]
        self.outside = defaultdict(list)  # (orient, line) -> [(lo, hi)] off A-segments
        self.seeds: list[_Seed] = []
        self.segs = {o: [(v, s) for v in self.names for s in self.A[v].segments if s.orientation == o] for o in (V, H)}
        self.line_segments = defaultdict(list)
        for o in (V, H):
            for v, s in self.segs[o]:
                self.line_segments[(o, s.line)].append(s)

    # ordering rules for one grid-line inside one band
    def _arm_edges(self, key, sid, below):
        band = (key[0], key[2])
        out = []
        for other, ob in self.arms.get(key, ()):
            if ob and not below:
                out.append((band, other, sid))
            elif below and not ob:
                out.append((band, sid, other))
            elif ob == below:
                return None  # two arms entering the same band from the same side overlap
        for other in self.pieces.get(key, ()):
            out.append((band, sid, other) if below else (band, other, sid))
        return out

    def _piece_edges(self, key, sid):
        band = (key[0], key[2])
        return [(band, o, sid) if below else (band, sid, o) for o, below in self.arms.get(key, ())]

    def register(self, seed: _Seed, outside=()) -> int | None:
        """Reserve the two arms of a seed; None if they clash."""
        sid = len(self.seeds)
        x, y = seed.corner
        edges = []
        for key, below in (((V, x, seed.vband), seed.vdir > 0), ((H, y, seed.hband), seed.hdir > 0)):
            e = self._arm_edges(key, sid, below)
            if e is None:
                return None
            edges += e
        for o, line, lo, hi in outside:
            if any(a < hi and b > lo for a, b in self.outside[(o, line)]):
                return None
            if any(s.lo < hi and s.hi > lo for s in self.line_segments[(o, line)]):
                return None
        if not self.order.try_add(edges):
            return None
        self.arms[(V, x, seed.vband)].append((sid, seed.vdir > 0))
        self.arms[(H, y, seed.hband)].append((sid, seed.hdir > 0))
        for o, line, lo, hi in outside:
            self.outside[(o, line)].append((lo, hi))
        self.seeds.append(seed)
        return sid

    def snapshot(self):
        return copy.deepcopy((self.order.succ, self.arms, self.pieces, self.outside, self.seeds))

    def restore(self, saved):
        self.order.succ, self.arms, self.pieces, self.outside, self.seeds = saved

    def _options(self, seed: _Seed, c: str):
        x, y = seed.corner
        opts = []
        for s in self.A[c].segments:
            if s.orientation == V and s.lo <= seed.vband and seed.vband + 1 <= s.hi and s.line != x:
                opts.append((V, s.line))
            elif s.orientation == H and s.lo <= seed.hband and seed.hband + 1 <= s.hi and s.line != y:
                opts.append((H, s.line))

        def busy(o):
            band = seed.vband if o[0] == V else seed.hband
            return len(self.arms.get((o[0], o[1], band), ()))

        return sorted(opts, key=lambda o: (busy(o), o[0], abs(o[1] - (x if o[0] == V else y))))

    def route(self, sid: int, limit: int = 5000) -> bool:
        """Choose one piece on every other A-path; False if no consistent choice exists."""
        seed = self.seeds[sid]
        others = [c for c in self.names if c not in (seed.a, seed.b)]
        opts = [self._options(seed, c) for c in others]
        if any(not o for o in opts):
            return False
        x, y = seed.corner

        def cost(combo):
            return sum(len(self.arms.get((o, line, seed.vband if o == V else seed.hband), ())) for o, line in combo)

        combos = sorted(itertools.islice(itertools.product(*opts), limit), key=cost)
        for combo in combos:
            vl = [line for o, line in combo if o == V]
            hl = [line for o, line in combo if o == H]
            if len(set(vl)) < len(vl) or len(set(hl)) < len(hl):
                continue
            ov, oh = _visit_order(x, vl), _visit_order(y, hl)
            if ov is None or oh is None:
                continue
            edges = []
            for o, line in combo:
                edges += self._piece_edges((o, line, seed.vband if o == V else seed.hband), sid)
            if self.order.try_add(edges):
                for o, line in combo:
                    self.pieces[(o, line, seed.vband if o == V else seed.hband)].append(sid)
                seed.vpieces, seed.hpieces = ov, oh
                return True
        return False

    def paths(self) -> list[GridPath]:
        members = defaultdict(list)
        for sid, s in enumerate(self.seeds):
            members[(V, s.vband)].append(sid)
            members[(H, s.hband)].append(sid)
        val = self.order.values(members)
        out = []
        for sid, s in enumerate(self.seeds):
            x, y = s.corner
            r = val[((V, s.vband), sid)]
            q = val[((H, s.hband), sid)]
            er = Fraction(s.vdir, 4 * (len(members[(V, s.vband)]) + 1))
            eq = Fraction(s.hdir, 4 * (len(members[(H, s.hband)]) + 1))
            vpart, hpart = [], []
            for i, u in enumerate(s.vpieces):
                vpart += [(u, r), (u, r + er)] if i % 2 == 0 else [(u, r + er), (u, r)]
            for i, u in enumerate(s.hpieces):
                hpart += [(q, u), (q + eq, u)] if i % 2 == 0 else [(q + eq, u), (q, u)]
            pts = list(reversed(hpart)) + [(q, y), (x, y), (x, r)] + vpart
            out.append(normalize_path(pts))
        return out


def _visit_order(start, targets):
    """Order of targets so that connectors, alternating between two private
    lines, never overlap on the same line."""
    near_first = sorted(targets, key=lambda u: (abs(u - start), u))
    for perm in itertools.permutations(near_first):
        used = ([], [])
        prev = start
        for i, u in enumerate(perm):
            lo, hi = sorted((prev, u))
            if any(a < hi and b > lo for a, b in used[i % 2]):
                break
            used[i % 2].append((lo, hi))
            prev = u
        else:
            return list(perm)
    return None


def _crossing_seeds(A):
    out = []
    for (a, sv), (b, sh) in itertools.product(
        [(v, s) for v in A for s in A[v].segments if s.orientation == V],
        [(v, s) for v in A for s in A[v].segments if s.orientation == H],
    ):
        if a != b and sv.lo < sh.line < sv.hi and sh.lo < sv.line < sh.hi:
            x, y = sv.line, sh.line
            out.append(_Seed(a, b, (x, y), y, x, 1, 1))
            out.append(_Seed(a, b, (x, y), y - 1, x - 1, -1, -1))
    return out


def _extra_seeds(A):
    """Single-bend seeds where the lines of two segments meet off a segment.

    An arm that starts outside its segment runs along the empty part of the
    line and enters the segment's end band.
    """
    for (a, sv), (b, sh) in itertools.product(
        [(v, s) for v in sort_labels(A) for s in A[v].segments if s.orientation == V],
        [(v, s) for v in sort_labels(A) for s in A[v].segments if s.orientation == H],
    ):
        if a == b:
            continue
        x, y = sv.line, sh.line
        in_v = sv.lo < y < sv.hi
        in_h = sh.lo < x < sh.hi
        if in_v and in_h:
            continue
        v_choices = _arm_choices(y, sv)
        h_choices = _arm_choices(x, sh)
        for (vband, vdir, vout), (hband, hdir, hout) in itertools.product(v_choices, h_choices):
            outside = []
            if vout:
                outside.append((V, x) + vout)
            if hout:
                outside.append((H, y) + hout)
            yield _Seed(a, b, (x, y), vband, hband, vdir, hdir), outside


def _arm_choices(at, seg):
    """(band, direction, off-segment stretch) for an arm from ``at`` into ``seg``."""
    if seg.lo < at < seg.hi:
        return [(at, 1, None), (at - 1, -1, None)]
    if at >= seg.hi:
        return [(seg.hi - 1, -1, (seg.hi, at))] if at > seg.hi else []
    return [(seg.lo, 1, (at, seg.lo))] if at < seg.lo else []


def construct_m4(m: int, n: int | None = None, restarts: int = 16) -> Representation:
    """K_{m,n} with 2m-3 bends from the blown-up pretzel with 2m-3 bends.

    Every b starts as a single-bend path through two A-paths, either at one of
    their crossings (two paths on opposite sides) or where the lines of their
    segments meet beyond both segment ends.  Both ends are then extended by
    snakes whose unit pieces lie on the remaining A-paths.  All pieces sharing
    a unit band are ordered by a DAG so that no two b-paths share a grid-edge.
    ``n`` defaults to :func:`m4_size`.
    """
    if m < 3:
        raise MTooSmall(f"m = {m} < 3")
    if n is None:
        n = m4_size(m)
    A = dict(blowup_pretzel(m, m - 1).paths)
    best = 0
    for attempt in range(restarts):
        rng = random.Random(attempt)
        planner = _SeedPlanner(A)
        seeds = _crossing_seeds(A)
        for s in seeds:
            if planner.register(s) is None:
                raise ConstructionError("crossing arms clash")
        ids = list(range(len(seeds)))
        tie = {i: rng.random() if attempt else 0 for i in ids}
        ids.sort(key=lambda i: (_freedom(planner, planner.seeds[i]), tie[i]))
        if not all(planner.route(i) for i in ids):
            continue
        need = n - len(planner.seeds)
        if need <= 0 or _add_extras(planner, list(_extra_seeds(A)), need):
            break
        best = max(best, len(planner.seeds))
    else:
        raise ConstructionError(f"placed {best} of {n} paths for m = {m}")
    bpaths = planner.paths()[:n]
    _, B = _labels(m, n)
    rep = Representation(A | dict(zip(B, bpaths)))
    return compress_coordinates(rep)


def _add_extras(planner: _SeedPlanner, cands, need: int, tries: int = 200) -> bool:
    """Pick ``need`` pairwise compatible extra seeds and route them all."""
    ok = [(seed, out) for seed, out in cands if _fits(planner, seed)]
    clash = {i: set() for i in range(len(ok))}
    for i, j in itertools.combinations(range(len(ok)), 2):
        if _extras_clash(ok[i], ok[j]):
            clash[i].add(j)
            clash[j].add(i)
    for chosen in itertools.islice(_independent_sets(clash, need), tries):
        saved = planner.snapshot()
        placed = 0
        for i in chosen:
            seed, out = ok[i]
            sid = planner.register(seed, out)
            if sid is None or not planner.route(sid):
                break
            placed += 1
        if placed == need:
            return True
        planner.restore(saved)
    return False


def _fits(planner: _SeedPlanner, seed: _Seed) -> bool:
    x, y = seed.corner
    return all(
        planner._arm_edges(key, -1, below) is not None
        for key, below in (((V, x, seed.vband), seed.vdir > 0), ((H, y, seed.hband), seed.hdir > 0))
    )


def _extras_clash(p, q) -> bool:
    (s, so), (t, to) = p, q
    for o1, l1, lo1, hi1 in so:
        for o2, l2, lo2, hi2 in to:
            if (o1, l1) == (o2, l2) and lo1 < hi2 and lo2 < hi1:
                return True
    if s.corner[0] == t.corner[0] and s.vband == t.vband and s.vdir == t.vdir:
        return True
    return s.corner[1] == t.corner[1] and s.hband == t.hband and s.hdir == t.hdir


def _independent_sets(adj: Mapping[int, set], size: int):
    """Independent sets of the given size, lowest indices first."""
    order = sorted(adj)

    def grow(start, chosen, banned):
        if len(chosen) == size:
            yield list(chosen)
            return
        free = [v for v in order[start:] if v not in banned]
        if len(chosen) + len(free) < size:
            return
        for k, v in enumerate(free):
            chosen.append(v)
            yield from grow(order.index(v) + 1, chosen, banned | adj[v] | {v})
            chosen.pop()

    yield from grow(0, [], frozenset())


def _freedom(planner: _SeedPlanner, seed: _Seed) -> int:
    n = 1
    for c in planner.names:
        if c not in (seed.a, seed.b):
            n *= len(planner._options(seed, c))
    return n
