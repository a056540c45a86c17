"""Small exact oracles: interval-graph recognition and bend-number search.

Both are exponential and meant for graphs with a handful of vertices. They
share no code with the constructions, so they can be used to cross-check them.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .graph import Graph
from .grid import GridPath, Representation, normalize_path
from .verify import verify_representation


class TooLarge(ValueError):
    pass


# -- interval graphs ---------------------------------------------------------------


def is_interval_graph(g: Graph, max_cliques: int = 12) -> bool:
    """True iff the maximal cliques of ``g`` admit a consecutive ordering.

    A graph is an interval graph exactly when its maximal cliques can be put
    in a row so that the cliques holding any one vertex are contiguous. The
    row is found by backtracking, so the clique count is capped.
    """
    cliques = g.maximal_cliques()
    if len(cliques) > max_cliques:
        raise TooLarge(f"{len(cliques)} maximal cliques exceed the cap of {max_cliques}")
    used = [False] * len(cliques)

    def extend(last, closed, placed):
        if placed == len(cliques):
            return True
        for i, c in enumerate(cliques):
            if used[i] or c & closed:
                continue
            used[i] = True
            ok = extend(c, closed | (last - c), placed + 1)
            used[i] = False
            if ok:
                return True
        return False

    return extend(frozenset(), frozenset(), 0)


# -- exhaustive search -------------------------------------------------------------


@dataclass(frozen=True)
class SearchBudget:
    """Caps for :func:`exact_bend_number`.

    ``grid_width`` of None means the normalisation bound 2(k+1)|V| + 2 for
    each component and each k. ``node_limit`` counts placements tried,
    ``candidate_limit`` bounds the path catalogue at any one window size.
    """

    max_k: int = 2
    grid_width: int | None = None
    node_limit: int = 2_000_000
    time_limit: float | None = 60.0
    candidate_limit: int = 200_000

    def width(self, k: int, n: int) -> int:
        if self.grid_width is not None:
            return self.grid_width
        return 2 * (k + 1) * n + 2


@dataclass(frozen=True)
class Exact:
    k: int
    representation: Representation = field(compare=False, repr=False)


@dataclass(frozen=True)
class LowerBoundOnly:
    """b(G) >= k is proven; no representation with k bends was settled."""

    k: int
    upper: int | None = None


@dataclass(frozen=True)
class Exhausted:
    reason: str = ""


class _Capped(Exception):
    pass


def _unit_edges(corners) -> frozenset | None:
    """Unit grid-edges of an integer path, or None if it reuses an edge."""
    out = []
    for (x0, y0), (x1, y1) in zip(corners, corners[1:]):
        if y0 == y1:
            step = 1 if x1 > x0 else -1
            out.extend(("h", min(x, x + step), y0) for x in range(x0, x1, step))
        else:
            step = 1 if y1 > y0 else -1
            out.extend(("v", x0, min(y, y + step)) for y in range(y0, y1, step))
    s = frozenset(out)
    return s if len(s) == len(out) else None


_DIRS = ((1, 0), (-1, 0), (0, 1), (0, -1))


def _catalogue(k: int, w: int, one_line: bool, limit: int):
    """All paths with at most k bends inside the w x w window, keyed by edge set.

    With ``one_line`` only horizontal segments on row 0 are produced; a
    connected graph drawn without bends must sit on a single grid-line.
    """
    seen: dict[frozenset, tuple] = {}
    if one_line:
        for a in range(w):
            for b in range(a + 1, w):
                seen[_unit_edges(((a, 0), (b, 0)))] = ((a, 0), (b, 0))
        return list(seen.items())

    def grow(corners, d):
        x, y = corners[-1]
        dx, dy = d
        for length in range(1, w):
            nx, ny = x + dx * length, y + dy * length
            if not (0 <= nx < w and 0 <= ny < w):
                break
            path = corners + ((nx, ny),)
            edges = _unit_edges(path)
            if edges is None:
                continue
            key = edges
            if key not in seen or path < seen[key]:
                if key not in seen and len(seen) >= limit:
                    raise _Capped(f"more than {limit} candidate paths at width {w}")
                seen[key] = path
            if len(path) - 2 < k:
                for nd in ((dy, dx), (-dy, -dx)):
                    grow(path, nd)

    for x in range(w):
        for y in range(w):
            for d in _DIRS:
                grow(((x, y),), d)
    return sorted(seen.items(), key=lambda kv: kv[1])


def _images(edges: frozenset, w: int):
    """Edge sets of the 8 symmetric images of a path in the w x w window."""
    top = w - 1

    def pts(e):
        kind, x, y = e
        return ((x, y), (x + 1, y)) if kind == "h" else ((x, y), (x, y + 1))

    maps = [
        lambda x, y: (x, y), lambda x, y: (top - x, y), lambda x, y: (x, top - y),
        lambda x, y: (top - x, top - y), lambda x, y: (y, x), lambda x, y: (top - y, x),
        lambda x, y: (y, top - x), lambda x, y: (top - y, top - x),
    ]
    for f in maps:
        img = []
        for e in edges:
            (a, b) = pts(e)
            (ax, ay), (bx, by) = f(*a), f(*b)
            if ay == by:
                img.append(("h", min(ax, bx), ay))
            else:
                img.append(("v", ax, min(ay, by)))
        yield frozenset(img)


class _Search:
    def __init__(self, g: Graph, budget: SearchBudget, deadline):
        self.g = g
        self.budget = budget
        self.deadline = deadline
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget.node_limit:
            raise _Capped("node limit reached")
        if self.deadline is not None and self.nodes % 512 == 0 and time.monotonic() > self.deadline:
            raise _Capped("time limit reached")

    def place(self, comp: list[str], k: int, w: int):
        """A k-bend drawing of the connected vertex set ``comp`` in a w-window, or None.

        Forward checking: every unplaced vertex keeps the list of candidates
        still consistent with what is placed, and the vertex with the fewest
        left goes next.
        """
        g = self.g
        cat = _catalogue(k, w, k == 0, self.budget.candidate_limit)
        index = {}
        masks = []
        for edges, _ in cat:
            m = 0
            for e in edges:
                m |= 1 << index.setdefault(e, len(index))
            masks.append(m)
        everything = list(range(len(cat)))
        start = max(comp, key=lambda v: (g.degree(v), -comp.index(v)))
        if k == 0:
            first = everything
        else:
            first = [i for i, (edges, _) in enumerate(cat) if edges == min(_images(edges, w), key=sorted)]
        domains = {v: everything for v in comp}
        domains[start] = first
        chosen: dict[str, int] = {}

        def rec(domains):
            if len(chosen) == len(comp):
                return True
            v = min((u for u in comp if u not in chosen),
                    key=lambda u: (len(domains[u]), -g.degree(u), comp.index(u)))
            for i in domains[v]:
                self.tick()
                mi = masks[i]
                nxt = {}
                dead = False
                for u in comp:
                    if u in chosen or u == v:
                        continue
                    if g.has_edge(u, v):
                        d = [j for j in domains[u] if masks[j] & mi]
                    else:
                        d = [j for j in domains[u] if not masks[j] & mi]
                    if not d:
                        dead = True
                        break
                    nxt[u] = d
                if dead:
                    continue
                chosen[v] = i
                if rec(nxt):
                    return True
                del chosen[v]
            return False

        if rec(domains):
            return {v: cat[i][1] for v, i in chosen.items()}
        return None


def _one_line(g: Graph, comp: list[str]):
    """A drawing of a connected vertex set on one grid-line, or None.

    The line is swept one unit edge at a time. A state is the pair (finished,
    active); the active set must be a clique, a vertex may only start while
    none of its neighbours has finished, and may only finish once all of its
    neighbours have started. Failed states are remembered, so the search
    visits each of the at most 3^n states once.
    """
    verts = frozenset(comp)
    nbr = {v: g.neighbors(v) & verts for v in comp}
    failed: set = set()
    steps: list[frozenset] = []

    def subsets(xs):
        xs = sorted(xs, key=comp.index)
        for r in range(len(xs) + 1):
            yield from (frozenset(c) for c in itertools.combinations(xs, r))

    def rec(done, active):
        if done | active == verts and not active:
            return True
        if (done, active) in failed:
            return False
        waiting = verts - done - active
        for leave in subsets(active):
            if any(nbr[v] & waiting for v in leave):
                continue
            gone = done | leave
            stay = active - leave
            for enter in subsets(w for w in waiting if not nbr[w] & gone):
                if not leave and not enter:
                    continue
                nxt = stay | enter
                if not nxt and gone != verts:
                    continue
                if not g.is_clique(nxt):
                    continue
                steps.append(nxt)
                if rec(gone, nxt):
                    return True
                steps.pop()
        failed.add((done, active))
        return False

    if not rec(frozenset(), frozenset()):
        return None
    start, end = {}, {}
    for t, act in enumerate(steps[:-1]):  # the last step empties the line
        for v in act:
            start.setdefault(v, t)
            end[v] = t + 1
    return {v: ((start[v], 0), (end[v], 0)) for v in comp}


def _bend_level(search: _Search, comp, k, budget):
    """A drawing, None when refuted, or raises _Capped."""
    if k == 0:
        return _one_line(search.g, comp)
    full = budget.width(k, len(comp))
    for w in range(2, full + 1):
        drawing = search.place(comp, k, w)
        if drawing is not None:
            return drawing
    return None


def exact_bend_number(g: Graph, budget: SearchBudget | None = None):
    """Smallest k for which ``g`` has a k-bend representation, by exhaustive search.

    Components are handled separately and placed side by side. Returns
    :class:`Exact` when a k-bend drawing is found and every smaller k was
    refuted on the full normalised window, :class:`LowerBoundOnly` when some
    levels were refuted but the caps stopped the next one, and
    :class:`Exhausted` when nothing was settled.
    """
    budget = budget or SearchBudget()
    deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit
    search = _Search(g, budget, deadline)
    comps = [sorted(c, key=g.vertices.index) for c in g.components()]
    drawings = []
    lower = 0
    for comp in comps:
        if len(comp) == 1:
            drawings.append({comp[0]: ((0, 0), (1, 0))})
            continue
        k = lower
        while True:
            if k > budget.max_k:
                return LowerBoundOnly(k)
            try:
                drawing = _bend_level(search, comp, k, budget)
            except _Capped as exc:
                if k == 0:
                    return Exhausted(str(exc))
                return LowerBoundOnly(k)
            if drawing is not None:
                drawings.append(drawing)
                lower = k
                break
            k += 1
    paths: dict[str, GridPath] = {}
    shift = 0
    for d in drawings:
        for v, corners in d.items():
            paths[v] = normalize_path([(x + shift, y) for x, y in corners])
        shift += max(x for cs in d.values() for x, _ in cs) + 2
    rep = Representation({v: paths[v] for v in g.vertices})
    report = verify_representation(rep, g, lower)
    assert report.ok, report.summary()
    return Exact(lower, rep)
