"""Insertion along a k-tree with at most 2k-2 bends per path (k >= 3).

The origin splits the plane into sides.  A vertex is *displayed vertically*
when some vertical piece of its path, used by no other path, crosses the
x-axis; *displayed horizontally* likewise for a horizontal piece crossing the
y-axis.  Every k-clique of the k-tree must keep one of two states:

A: every member is displayed vertically, all but at most one horizontally, and
   there are vertical displays on both sides of the origin;
B: for an adjacent pair (w1, w2), everybody but w2 is displayed vertically,
   everybody but w1 horizontally, and the grid-line of a vertical display of
   w1 also carries a piece used by exactly w1 and w2.

(each also with the roles of horizontal and vertical exchanged).  New paths
are built in a normalised frame, one of the eight symmetries of the square,
and every candidate is accepted only after the states are re-checked on the
actual geometry.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from .graph import BuildSequence, Graph, degeneracy_order
from .grid import H, V, Representation, normalize_path
from .layout import SYMMETRIES, ConstructionError, Layout, apply, inverse, sign
from .verify import verify_representation


class WidthTooSmall(ValueError):
    pass


class DelegationFailed(RuntimeError):
    """No width-2 strategy reached two bends for this graph."""


def construct_treewidth(g: Graph, seq: BuildSequence, check: bool = True) -> Representation:
    k = seq.k
    if k < 1:
        raise WidthTooSmall(f"width {k} < 1")
    seq.validate(g)
    if k == 1:
        from .construct import construct_degeneracy

        return construct_degeneracy(g)
    if k == 2:
        return _width_two(g, seq)
    return _insert_all(g, seq, 2 * k - 2, check)


# -- state predicates ----------------------------------------------------------


class _Displays:
    """Cached axis displays of every placed vertex in one layout."""

    def __init__(self, lay: Layout):
        self.lay = lay
        self._v: dict = {}
        self._h: dict = {}

    def vert(self, w):
        if w not in self._v:
            self._v[w] = self.lay.axis_displays(w, V)
        return self._v[w]

    def horiz(self, w):
        if w not in self._h:
            self._h[w] = self.lay.axis_displays(w, H)
        return self._h[w]


def clique_state(lay: Layout, g: Graph, clique, disp: _Displays | None = None):
    """('A' or 'B', orientation, witnesses) for the first state that holds, else None."""
    disp = disp or _Displays(lay)
    W = list(clique)
    for orient in (V, H):
        first, second = (disp.vert, disp.horiz) if orient == V else (disp.horiz, disp.vert)
        if all(first(w) for w in W):
            missing = [w for w in W if not second(w)]
            sides = {sign(line) for w in W for line, _, _ in first(w)}
            if len(missing) <= 1 and sides >= {1, -1}:
                return ("A", orient, tuple(missing))
        for w1, w2 in itertools.permutations(W, 2):
            if not g.has_edge(w1, w2):
                continue
            if all(second(w) for w in W if w != w1) and all(first(w) for w in W if w != w2):
                for line, _, _ in first(w1):
                    if lay.exact_parts(orient, line, frozenset((w1, w2))):
                        return ("B", orient, (w1, w2))
    return None


# -- path builders in the normalised frame --------------------------------------


def _snake(t: Layout, shows, lanes_needed: int):
    """Pieces inside the given vertical displays, above y = 0, left to right.

    Returns corners and the lane values (nearest the axis first); with three
    lanes the last piece ends on the outermost one.
    """
    bound = min((hi for _, _, hi in shows), default=None)
    lanes, cur = [], 0
    for _ in range(lanes_needed):
        cur = t.above(1, cur, bound)
        lanes.append(cur)
    pts = []
    m = len(shows)
    if lanes_needed == 2:
        lo, hi = lanes
        for i, (x, _, _) in enumerate(shows):
            pts.extend([(x, lo), (x, hi)] if i % 2 == 0 else [(x, hi), (x, lo)])
    else:
        near, far, end = lanes
        for i, (x, _, _) in enumerate(shows):
            back = m - 1 - i
            if back == 0:
                pts.extend([(x, near), (x, end)])
            elif back % 2:
                pts.extend([(x, far), (x, near)])
            else:
                pts.extend([(x, near), (x, far)])
    return pts, lanes


def _display_choices(disp: _Displays, ws) -> Iterator[list]:
    opts = []
    for w in ws:
        ds = disp.vert(w)
        if not ds:
            return
        opts.append(ds)
    for combo in itertools.islice(itertools.product(*opts), 8):
        yield sorted(combo, key=lambda s: s[0])


def _a_like(t: Layout, disp: _Displays, nbrs, extension: int):
    """Snake over the neighbours' vertical displays plus 0, 2 or 4 axis-crossing segments."""
    for shows in _display_choices(disp, nbrs):
        if extension == 0:
            pts, _ = _snake(t, shows, 2)
            yield pts
            continue
        pts, lanes = _snake(t, shows, 3)
        end = lanes[2]
        if not pts:
            pts = [(t.near_zero(0, -1), end)]
        x_last = pts[-1][0]
        x_new = t.near_zero(0, -sign(x_last))
        y_f = t.near_zero(1, -1)
        pts = pts + [(x_new, end), (x_new, y_f)]
        if extension == 4:
            x_back = t.near_zero(0, sign(x_last))
            pts += [(x_back, y_f), (x_back, t.near_zero(1, 1))]
        yield pts


def _b_like(t: Layout, disp: _Displays, nbrs, w1, w2):
    """Snake above the axis, then down across it into the piece shared by w1 and w2."""
    rest = [w for w in nbrs if w not in (w1, w2)]
    for x1, _, _ in disp.vert(w1):
        for lo_s, hi_s in t.exact_parts(V, x1, frozenset((w1, w2))):
            if hi_s > 0:
                continue
            for shows in _display_choices(disp, rest):
                for x_side, start_side in itertools.product((1, -1), (1, -1) if not rest else (0,)):
                    pts, lanes = _snake(t, shows, 3)
                    end = lanes[2]
                    if not pts:
                        pts = [(t.near_zero(0, start_side), end)]
                    x_v = t.near_zero(0, x_side)
                    y_f = t.above(1, lo_s, hi_s)
                    y_g = t.above(1, y_f, hi_s)
                    yield pts + [(x_v, end), (x_v, y_f), (x1, y_f), (x1, y_g)]


# -- insertion ----------------------------------------------------------------


def _candidates(lay: Layout, v: str, nbrs: list[str], k: int):
    frames = [(m, lay.transformed(m)) for m in SYMMETRIES]
    disps = {m: _Displays(t) for m, t in frames}
    tiers = []
    if len(nbrs) == k:
        tiers.append(lambda t, d: _a_like(t, d, nbrs, 0))
    pairs = [(a, b) for a, b in itertools.permutations(nbrs, 2)]
    tiers.append(lambda t, d: (p for a, b in pairs for p in _b_like(t, d, nbrs, a, b)))
    tiers.append(lambda t, d: _a_like(t, d, nbrs, 2))
    tiers.append(lambda t, d: _a_like(t, d, nbrs, 4))
    for tier in tiers:
        for m, t in frames:
            back = inverse(m)
            for pts in tier(t, disps[m]):
                try:
                    p = normalize_path(pts)
                except ValueError:
                    continue
                yield p.map(lambda q: apply(back, q))


def _insert(lay: Layout, g: Graph, v: str, nbrs, k: int, budget: int, accept) -> Layout:
    for p in _candidates(lay, v, list(nbrs), k):
        if p.bends > budget:
            continue
        trial = Layout(lay.paths)
        trial.add(v, p)
        if trial.neighbours_of(v) != set(nbrs):
            continue
        if accept(trial):
            return trial
    raise ConstructionError(f"no admissible path for {v!r} (neighbours {sorted(nbrs)})")


def _insert_all(g: Graph, seq: BuildSequence, budget: int, check: bool) -> Representation:
    k = seq.k
    lay = Layout()
    base = list(seq.base)
    first = base[:k]
    for i, v in enumerate(first):
        nbrs = [w for w in first[:i] if g.has_edge(v, w)]

        def accept(trial, v=v, last=(i == k - 1)):
            d = _Displays(trial)
            if not (d.vert(v) and d.horiz(v)):
                return False
            return not last or clique_state(trial, g, first, d) is not None

        lay = _insert(lay, g, v, nbrs, k, budget, accept)
    cliques = [tuple(first)]
    attachments = [(base[k], tuple(first))] + [(v, tuple(att)) for v, att in seq.steps]
    for v, att in attachments:
        nbrs = [w for w in att if g.has_edge(v, w)]
        fresh = [tuple(w for w in att if w != x) + (v,) for x in att]
        watched = cliques + fresh if check else fresh

        def accept(trial, watched=watched):
            d = _Displays(trial)
            return all(clique_state(trial, g, c, d) is not None for c in watched)

        lay = _insert(lay, g, v, nbrs, k, budget, accept)
        cliques.extend(fresh)
    return lay.representation(drop=seq.padding)


# -- width two -----------------------------------------------------------------


def _width_two(g: Graph, seq: BuildSequence) -> Representation:
    """Try the strategies that are known to stay within two bends."""
    from .construct import (
        construct_degeneracy,
        construct_edge_coloring,
        construct_from_global_cover,
        construct_from_local_cover,
    )
    from .graph import clique_cover_global, clique_cover_local

    def complete_bipartite():
        from .bipartite import complete_bipartite_comb

        return complete_bipartite_comb(g, max_side=2)

    attempts = [
        lambda: construct_degeneracy(g) if degeneracy_order(g).d <= 1 else None,
        lambda: construct_from_global_cover(g, clique_cover_global(g)),
        lambda: construct_from_local_cover(g, clique_cover_local(g)),
        lambda: construct_edge_coloring(g),
        complete_bipartite,
        lambda: _insert_all(g, seq, 2, check=True),
    ]
    for attempt in attempts:
        try:
            rep = attempt()
        except ConstructionError:
            continue
        if rep is not None and verify_representation(rep, g, 2).ok:
            return rep
    raise DelegationFailed("none of the width-2 strategies reached two bends")
