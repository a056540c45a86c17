"""Graphs, generators and the combinatorial preprocessing the constructors consume."""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, Mapping, Sequence

Edge = FrozenSet[str]


def edge(u: str, v: str) -> Edge:
    return frozenset((u, v))


def _natural_key(label: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", label)]


def sort_labels(labels: Iterable[str]) -> list[str]:
    return sorted(labels, key=_natural_key)


class GraphError(ValueError):
    pass


class Graph:
    """Finite simple undirected graph on string labels.  Immutable."""

    __slots__ = ("_vertices", "_adj", "_edges")

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[Iterable[str]] = ()):
        verts: Dict[str, None] = {}
        for v in vertices:
            verts[str(v)] = None
        adj: Dict[str, set] = {v: set() for v in verts}
        es = set()
        for e in edges:
            u, v = tuple(e)
            u, v = str(u), str(v)
            if u == v:
                raise GraphError(f"loop at {u!r}")
            for w in (u, v):
                if w not in adj:
                    verts[w] = None
                    adj[w] = set()
            adj[u].add(v)
            adj[v].add(u)
            es.add(edge(u, v))
        self._vertices = tuple(verts)
        self._adj = {v: frozenset(n) for v, n in adj.items()}
        self._edges = frozenset(es)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> FrozenSet[Edge]:
        return self._edges

    def neighbors(self, v: str) -> FrozenSet[str]:
        return self._adj[v]

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def has_edge(self, u: str, v: str) -> bool:
        return v in self._adj.get(u, ())

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator[str]:
        return iter(self._vertices)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and set(self._vertices) == set(other._vertices)
            and self._edges == other._edges
        )

    def __hash__(self):
        return hash((frozenset(self._vertices), self._edges))

    def __repr__(self) -> str:
        return f"Graph(|V|={len(self._vertices)}, |E|={len(self._edges)})"

    @property
    def max_degree(self) -> int:
        return max((len(n) for n in self._adj.values()), default=0)

    def sorted_edges(self) -> list[tuple[str, str]]:
        out = [tuple(sort_labels(e)) for e in self._edges]
        return sorted(out, key=lambda e: (_natural_key(e[0]), _natural_key(e[1])))

    def subgraph(self, keep: Iterable[str]) -> "Graph":
        keep = [v for v in self._vertices if v in set(keep)]
        ks = set(keep)
        return Graph(keep, (e for e in self._edges if e <= ks))

    def edge_subgraph(self, edges: Iterable[Iterable[str]]) -> "Graph":
        return Graph(self._vertices, edges)

    def is_clique(self, vs: Iterable[str]) -> bool:
        vs = list(vs)
        return all(self.has_edge(a, b) for a, b in itertools.combinations(vs, 2))

    def relabel(self, mapping: Mapping[str, str]) -> "Graph":
        return Graph(
            (mapping.get(v, v) for v in self._vertices),
            ((mapping.get(a, a), mapping.get(b, b)) for a, b in (tuple(e) for e in self._edges)),
        )

    def union(self, other: "Graph") -> "Graph":
        return Graph(
            list(self._vertices) + [v for v in other._vertices if v not in self._adj],
            list(self._edges) + list(other._edges),
        )

    def maximal_cliques(self) -> list[FrozenSet[str]]:
        """Bron-Kerbosch with pivoting; deterministic order."""
        out: list[FrozenSet[str]] = []
        order = {v: i for i, v in enumerate(self._vertices)}

        def expand(r, p, x):
            if not p and not x:
                out.append(frozenset(r))
                return
            pivot = max(p | x, key=lambda u: (len(self._adj[u] & p), -order[u]))
            for v in sorted(p - self._adj[pivot], key=order.__getitem__):
                expand(r | {v}, p & self._adj[v], x & self._adj[v])
                p = p - {v}
                x = x | {v}

        expand(set(), set(self._vertices), set())
        return out

    def components(self) -> list[list[str]]:
        seen: set = set()
        comps = []
        for s in self._vertices:
            if s in seen:
                continue
            stack, comp = [s], []
            seen.add(s)
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self._adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(comp)
        return comps


# -- text format -------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Edge list: ``u v`` per line, ``v label`` for isolated vertices, ``#`` comments."""
    verts: list[str] = []
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 2 and parts[0] == "v":
            verts.append(parts[1])
        elif len(parts) == 2:
            edges.append((parts[0], parts[1]))
            verts.extend(parts)
        else:
            raise GraphError(f"line {lineno}: expected two labels, got {raw!r}")
    return Graph(verts, edges)


def format_graph(g: Graph) -> str:
    lines = []
    touched = set()
    for u, v in g.sorted_edges():
        lines.append(f"{u} {v}")
        touched.update((u, v))
    for v in g.vertices:
        if v not in touched:
            lines.append(f"v {v}")
    return "\n".join(lines) + ("\n" if lines else "")


# -- generators --------------------------------------------------------------


def gen_complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    a = [f"a{i}" for i in range(1, m + 1)]
    b = [f"b{i}" for i in range(1, n + 1)]
    return Graph(a + b, ((x, y) for x in a for y in b))


def gen_complete(n: int, prefix: str = "k") -> Graph:
    vs = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph(vs, itertools.combinations(vs, 2))


def gen_path(n: int, prefix: str = "p") -> Graph:
    vs = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph(vs, zip(vs, vs[1:]))


def gen_cycle(n: int, prefix: str = "c") -> Graph:
    vs = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph(vs, list(zip(vs, vs[1:])) + [(vs[-1], vs[0])])


def gen_octahedron() -> Graph:
    """K_{2,2,2} on a, A, b, B, c, C with non-edges aA, bB, cC."""
    vs = ["a", "A", "b", "B", "c", "C"]
    non = {edge("a", "A"), edge("b", "B"), edge("c", "C")}
    return Graph(vs, (e for e in map(frozenset, itertools.combinations(vs, 2)) if e not in non))


def trigrid_label(x: int, y: int) -> str:
    return f"t{x}_{y}"


def trigrid_coords(label: str) -> tuple[int, int]:
    m = re.fullmatch(r"t(-?\d+)_(-?\d+)", label)
    if not m:
        raise GraphError(f"{label!r} is not a triangular-grid label")
    return int(m.group(1)), int(m.group(2))


def gen_triangular_grid(rows: int, cols: int, mask: Iterable[str] | None = None) -> Graph:
    """Patch of ``rows`` strips of ``cols`` triangles each.

    Lattice point (x, y) is adjacent to (x+1, y), (x, y+1) and (x-1, y+1).  In
    strip y the triangles alternate up, down, up, ... starting at x = 0.
    ``mask`` restricts to an induced subgraph on the given labels.
    """
    if rows < 1 or cols < 1:
        raise ValueError("rows and cols must be positive")
    pts: set[tuple[int, int]] = set()
    for y in range(rows):
        for t in range(cols):
            x = t // 2
            if t % 2 == 0:
                pts.update({(x, y), (x + 1, y), (x, y + 1)})
            else:
                pts.update({(x + 1, y), (x, y + 1), (x + 1, y + 1)})
    if mask is not None:
        keep = set(mask)
        pts = {p for p in pts if trigrid_label(*p) in keep}
    order = sorted(pts, key=lambda p: (p[1], p[0]))
    es = []
    for x, y in order:
        for dx, dy in ((1, 0), (0, 1), (-1, 1)):
            q = (x + dx, y + dy)
            if q in pts:
                es.append((trigrid_label(x, y), trigrid_label(*q)))
    return Graph([trigrid_label(*p) for p in order], es)


def line_graph(g: Graph) -> Graph:
    """Vertices are ``u~v`` for each edge uv of ``g``."""
    name = {e: "~".join(sort_labels(e)) for e in g.edges}
    es = []
    for v in g.vertices:
        inc = sorted((name[e] for e in g.edges if v in e), key=_natural_key)
        es.extend(itertools.combinations(inc, 2))
    return Graph(sort_labels(name.values()), es)


def gen_random_graph(n: int, p: float, rng: random.Random, prefix: str = "v") -> Graph:
    vs = [f"{prefix}{i}" for i in range(n)]
    return Graph(vs, (e for e in itertools.combinations(vs, 2) if rng.random() < p))


def gen_random_tree(n: int, rng: random.Random, prefix: str = "v") -> Graph:
    vs = [f"{prefix}{i}" for i in range(n)]
    return Graph(vs, ((vs[i], vs[rng.randrange(i)]) for i in range(1, n)))


# -- degeneracy --------------------------------------------------------------


@dataclass(frozen=True)
class DegeneracyOrder:
    order: tuple[str, ...]
    d: int

    def back_neighbors(self, g: Graph) -> dict[str, list[str]]:
        pos = {v: i for i, v in enumerate(self.order)}
        return {v: [w for w in self.order[: pos[v]] if g.has_edge(v, w)] for v in self.order}

    def validate(self, g: Graph) -> None:
        if sorted(self.order) != sorted(g.vertices):
            raise GraphError("order is not a permutation of the vertices")
        worst = max((len(b) for b in self.back_neighbors(g).values()), default=0)
        if worst > self.d:
            raise GraphError(f"a vertex has {worst} > d={self.d} earlier neighbours")


def degeneracy_order(g: Graph) -> DegeneracyOrder:
    """Peel minimum-degree vertices; the reversed peeling order has back-degree <= dg(G)."""
    deg = {v: g.degree(v) for v in g.vertices}
    alive = set(g.vertices)
    removed = []
    d = 0
    rank = {v: i for i, v in enumerate(g.vertices)}
    while alive:
        v = min(alive, key=lambda u: (deg[u], rank[u]))
        d = max(d, deg[v])
        removed.append(v)
        alive.remove(v)
        for w in g.neighbors(v):
            if w in alive:
                deg[w] -= 1
    return DegeneracyOrder(tuple(reversed(removed)), d)


# -- edge colouring ----------------------------------------------------------


@dataclass(frozen=True)
class EdgeColoring:
    color: Mapping[Edge, int]

    @property
    def num_colors(self) -> int:
        return len(set(self.color.values()))

    def is_proper(self, g: Graph) -> bool:
        if set(self.color) != set(g.edges):
            return False
        for v in g.vertices:
            cs = [self.color[edge(v, w)] for w in g.neighbors(v)]
            if len(cs) != len(set(cs)):
                return False
        return True

    def classes(self) -> list[list[Edge]]:
        by: dict[int, list[Edge]] = {}
        for e, c in self.color.items():
            by.setdefault(c, []).append(e)
        return [by[c] for c in sorted(by)]


def edge_coloring(g: Graph) -> EdgeColoring:
    """Misra-Gries fan recolouring: a proper colouring with at most Delta+1 colours."""
    palette = range(g.max_degree + 1)
    color: dict[Edge, int] = {}
    at: dict[str, dict[int, str]] = {v: {} for v in g.vertices}  # vertex -> colour -> neighbour

    def free(v):
        return next(c for c in palette if c not in at[v])

    def is_free(v, c):
        return c not in at[v]

    def set_color(u, v, c):
        old = color.get(edge(u, v))
        if old is not None:
            del at[u][old]
            del at[v][old]
        color[edge(u, v)] = c
        at[u][c] = v
        at[v][c] = u

    def unset(u, v):
        old = color.pop(edge(u, v), None)
        if old is not None:
            del at[u][old]
            del at[v][old]

    for u, v in g.sorted_edges():
        # maximal fan of u starting at v
        fan = [v]
        in_fan = {v}
        grown = True
        while grown:
            grown = False
            last = fan[-1]
            for w in sort_labels(g.neighbors(u)):
                if w in in_fan:
                    continue
                c = color.get(edge(u, w))
                if c is not None and is_free(last, c):
                    fan.append(w)
                    in_fan.add(w)
                    grown = True
                    break
        c = free(u)
        d = free(fan[-1])
        # invert the cd-path starting at u
        if not is_free(u, d):
            path = [u]
            cur, want = u, d
            while want in at[cur]:
                nxt = at[cur][want]
                path.append(nxt)
                cur = nxt
                want = c if want == d else d
            pairs = list(zip(path, path[1:]))
            olds = [color[edge(a, b)] for a, b in pairs]
            for a, b in pairs:
                unset(a, b)
            for (a, b), old in zip(pairs, olds):
                set_color(a, b, c if old == d else d)
        # shortest fan prefix ending at a vertex where d is free
        k = next(i for i, w in enumerate(fan) if is_free(w, d) and _is_fan(fan[: i + 1], u, color, at))
        prefix = fan[: k + 1]
        for a, b in zip(prefix, prefix[1:]):
            cb = color[edge(u, b)]
            unset(u, b)
            if edge(u, a) in color:
                unset(u, a)
            set_color(u, a, cb)
        if edge(u, prefix[-1]) in color:
            unset(u, prefix[-1])
        set_color(u, prefix[-1], d)
    return EdgeColoring(dict(color))


def _is_fan(fan, u, color, at) -> bool:
    if edge(u, fan[0]) in color:
        return False
    for a, b in zip(fan, fan[1:]):
        c = color.get(edge(u, b))
        if c is None or c in at[a]:
            return False
    return True


# -- clique covers -----------------------------------------------------------


class InvalidCover(GraphError):
    pass


@dataclass(frozen=True)
class CliqueCover:
    """Families of pairwise vertex-disjoint cliques covering every edge."""

    families: tuple[tuple[FrozenSet[str], ...], ...]

    @classmethod
    def of(cls, families: Iterable[Iterable[Iterable[str]]]) -> "CliqueCover":
        return cls(tuple(tuple(frozenset(c) for c in fam) for fam in families))

    @property
    def global_number(self) -> int:
        return len(self.families)

    def cliques(self) -> list[FrozenSet[str]]:
        return [c for fam in self.families for c in fam]

    def membership(self, v: str) -> int:
        return sum(1 for fam in self.families if any(v in c for c in fam))

    def local_number(self, g: Graph) -> int:
        return max((self.membership(v) for v in g.vertices), default=0)

    def validate(self, g: Graph) -> None:
        covered = set()
        for i, fam in enumerate(self.families):
            seen: set = set()
            for c in fam:
                if not c:
                    raise InvalidCover(f"family {i} has an empty clique")
                if not set(c) <= set(g.vertices):
                    raise InvalidCover(f"clique {sorted(c)} uses unknown vertices")
                if seen & c:
                    raise InvalidCover(f"family {i}: cliques share {sorted(seen & c)}")
                if not g.is_clique(c):
                    raise InvalidCover(f"{sort_labels(c)} is not a clique")
                seen |= c
                covered.update(frozenset(p) for p in itertools.combinations(c, 2))
        missing = g.edges - covered
        if missing:
            raise InvalidCover(f"{len(missing)} edges uncovered, e.g. {sort_labels(next(iter(missing)))}")

    def is_valid(self, g: Graph) -> bool:
        try:
            self.validate(g)
        except InvalidCover:
            return False
        return True

    def extended(self, g: Graph) -> "CliqueCover":
        """Every family padded with 1-cliques so that it covers all vertices."""
        fams = []
        for fam in self.families:
            used = set().union(*fam) if fam else set()
            fams.append(tuple(fam) + tuple(frozenset([v]) for v in g.vertices if v not in used))
        return CliqueCover(tuple(fams))


def cover_from_coloring(col: EdgeColoring) -> CliqueCover:
    return CliqueCover(tuple(tuple(cls) for cls in col.classes()))


EXACT_COVER_LIMIT = 10


def triangular_grid_cover(g: Graph) -> CliqueCover:
    """Three families: upward triangles grouped by (x - y) mod 3.

    Every lattice edge lies in exactly one upward triangle and two upward
    triangles of the same class never share a corner, so truncating the
    triangles to the vertex set keeps each family vertex-disjoint.
    """
    pts = {trigrid_coords(v): v for v in g.vertices}
    fams: list[list[FrozenSet[str]]] = [[], [], []]
    anchors = set()
    for x, y in pts:
        anchors.update({(x, y), (x - 1, y), (x, y - 1)})
    for ax, ay in sorted(anchors, key=lambda p: (p[1], p[0])):
        tri = [(ax, ay), (ax + 1, ay), (ax, ay + 1)]
        members = frozenset(pts[p] for p in tri if p in pts)
        if len(members) >= 2:
            fams[(ax - ay) % 3].append(members)
    return CliqueCover(tuple(tuple(f) for f in fams if f))


def clique_cover_global(g: Graph, hint: str | None = None, node_limit: int = 2_000_000) -> CliqueCover:
    """Few families of vertex-disjoint cliques covering all edges.

    ``hint="trigrid"`` uses the triangular-lattice three-family cover.  Graphs
    with at most ten vertices get an exact minimum; larger ones a greedy cover.
    """
    if hint == "trigrid":
        cover = triangular_grid_cover(g)
        cover.validate(g)
        return cover
    if hint is not None:
        raise ValueError(f"unknown hint {hint!r}")
    if not g.edges:
        return CliqueCover(())
    if len(g) <= EXACT_COVER_LIMIT:
        cover = _exact_global_cover(g, node_limit)
        if cover is not None:
            return cover
    return _greedy_global_cover(g)


def _exact_global_cover(g: Graph, node_limit: int) -> CliqueCover | None:
    edges = sorted((tuple(sort_labels(e)) for e in g.edges), key=lambda e: (_natural_key(e[0]), _natural_key(e[1])))
    nodes = 0

    def solve(k):
        # each family: dict vertex -> frozenset block
        fams = [dict() for _ in range(k)]

        def covered(u, v):
            return any(f.get(u) is not None and v in f[u] for f in fams)

        def rec(i):
            nonlocal nodes
            nodes += 1
            if nodes > node_limit:
                raise _Budget
            while i < len(edges) and covered(*edges[i]):
                i += 1
            if i == len(edges):
                return True
            u, v = edges[i]
            tried_empty = False
            for f in fams:
                if not f:
                    if tried_empty:
                        continue
                    tried_empty = True
                bu = f.get(u, frozenset([u]))
                bv = f.get(v, frozenset([v]))
                merged = bu | bv
                if not g.is_clique(merged):
                    continue
                saved = {w: f.get(w) for w in merged}
                for w in merged:
                    f[w] = merged
                if rec(i + 1):
                    return True
                for w, old in saved.items():
                    if old is None:
                        del f[w]
                    else:
                        f[w] = old
            return False

        if rec(0):
            out = []
            for f in fams:
                blocks = {id(b): b for b in f.values()}
                out.append(tuple(sorted(blocks.values(), key=lambda b: sort_labels(b))))
            return CliqueCover(tuple(fam for fam in out if fam))
        return None

    try:
        for k in range(1, g.max_degree + 2):
            res = solve(k)
            if res is not None:
                return res
    except _Budget:
        return None
    return None


class _Budget(Exception):
    pass


def _greedy_global_cover(g: Graph) -> CliqueCover:
    uncovered = set(g.edges)
    families = []
    while uncovered:
        used: set = set()
        fam = []
        for e in sorted(uncovered, key=lambda e: sort_labels(e)):
            if e not in uncovered or e & used:
                continue
            clique = set(e)
            cands = [w for w in sort_labels(g.vertices) if w not in used and w not in clique]
            # grow by vertices adding the most uncovered edges
            while True:
                best, gain = None, -1
                for w in cands:
                    if w in clique or not all(g.has_edge(w, c) for c in clique):
                        continue
                    gw = sum(1 for c in clique if edge(w, c) in uncovered)
                    if gw > gain:
                        best, gain = w, gw
                if best is None or gain == 0:
                    break
                clique.add(best)
            fam.append(frozenset(clique))
            used |= clique
            uncovered -= {frozenset(p) for p in itertools.combinations(clique, 2)}
        families.append(tuple(fam))
    return CliqueCover(tuple(families))


def clique_cover_local(g: Graph, node_limit: int = 200_000) -> CliqueCover:
    """Cover by cliques keeping the per-vertex membership small.

    Iterative deepening on the membership bound; each uncovered edge is
    covered by a maximal clique through it, trimmed to vertices that still have
    budget.  Falls back to greedy when the node budget runs out.
    """
    if not g.edges:
        return CliqueCover(())
    maxcl = g.maximal_cliques()
    through: dict[Edge, list[FrozenSet[str]]] = {}
    for c in sorted(maxcl, key=lambda c: (-len(c), sort_labels(c))):
        for p in itertools.combinations(sorted(c), 2):
            through.setdefault(frozenset(p), []).append(c)
    edges = sorted(g.edges, key=lambda e: sort_labels(e))
    nodes = 0

    def attempt(bound):
        load = {v: 0 for v in g.vertices}
        chosen: list[FrozenSet[str]] = []
        cov: dict[Edge, int] = {e: 0 for e in edges}

        def rec():
            nonlocal nodes
            nodes += 1
            if nodes > node_limit:
                raise _Budget
            e = next((e for e in edges if cov[e] == 0), None)
            if e is None:
                return True
            u, v = tuple(e)
            if load[u] >= bound or load[v] >= bound:
                return False
            seen = set()
            for m in through[e]:
                c = {u, v}
                for w in sort_labels(m - c):
                    if load[w] < bound and any(cov[edge(w, x)] == 0 for x in c):
                        c.add(w)
                c = frozenset(c)
                if c in seen:
                    continue
                seen.add(c)
                pairs = [frozenset(p) for p in itertools.combinations(c, 2)]
                for w in c:
                    load[w] += 1
                for p in pairs:
                    cov[p] += 1
                chosen.append(c)
                if rec():
                    return True
                chosen.pop()
                for w in c:
                    load[w] -= 1
                for p in pairs:
                    cov[p] -= 1
            return False

        return list(chosen) if rec() else None

    cliques = None
    try:
        for bound in range(1, g.max_degree + 1):
            cliques = attempt(bound)
            if cliques is not None:
                break
    except _Budget:
        cliques = None
    if cliques is None:
        cliques = [c for fam in _greedy_global_cover(g).families for c in fam]
    return _pack_families(cliques)


def _pack_families(cliques: Sequence[FrozenSet[str]]) -> CliqueCover:
    fams: list[list[FrozenSet[str]]] = []
    used: list[set] = []
    for c in cliques:
        for fam, u in zip(fams, used):
            if not (u & c):
                fam.append(c)
                u |= c
                break
        else:
            fams.append([c])
            used.append(set(c))
    return CliqueCover(tuple(tuple(f) for f in fams))


# -- k-trees -----------------------------------------------------------------


class WidthExceeded(GraphError):
    pass


class InvalidSequence(GraphError):
    pass


@dataclass(frozen=True)
class BuildSequence:
    """A k-tree: a (k+1)-clique ``base`` plus vertices attached to k-cliques.

    ``padding`` lists artificial vertices that are not in the graph (only used
    when the graph has fewer than k+1 vertices).
    """

    k: int
    base: tuple[str, ...]
    steps: tuple[tuple[str, tuple[str, ...]], ...]
    padding: tuple[str, ...] = field(default=())

    @property
    def order(self) -> list[str]:
        return list(self.base) + [v for v, _ in self.steps]

    def ktree(self) -> Graph:
        es = list(itertools.combinations(self.base, 2))
        for v, att in self.steps:
            es.extend((v, w) for w in att)
        return Graph(self.order, es)

    def validate(self, g: Graph) -> None:
        k = self.k
        if k < 0:
            raise InvalidSequence("negative width")
        if len(self.base) != k + 1 or len(set(self.base)) != k + 1:
            raise InvalidSequence(f"base must be {k + 1} distinct vertices")
        order = self.order
        if len(set(order)) != len(order):
            raise InvalidSequence("a vertex appears twice")
        real = set(order) - set(self.padding)
        if real != set(g.vertices):
            raise InvalidSequence("sequence does not cover exactly the graph's vertices")
        built = set(self.base)
        cliques = {frozenset(c) for c in itertools.combinations(self.base, k)}
        for v, att in self.steps:
            a = frozenset(att)
            if len(a) != k or a not in cliques:
                raise InvalidSequence(f"{v} attached to {sort_labels(att)}, not a k-clique of the k-tree")
            for w in att:
                cliques.add((a - {w}) | {v})
            built.add(v)
        kt = self.ktree()
        for e in g.edges:
            u, w = tuple(e)
            if not kt.has_edge(u, w):
                raise InvalidSequence(f"edge {u}-{w} is not in the k-tree")


def ktree_sequence(g: Graph, k: int, user_seq: BuildSequence | None = None) -> BuildSequence:
    """A k-tree containing ``g``: validate ``user_seq`` or run min-degree elimination."""
    if user_seq is not None:
        if user_seq.k != k:
            raise InvalidSequence(f"sequence has width {user_seq.k}, expected {k}")
        user_seq.validate(g)
        return user_seq
    if k < 0:
        raise InvalidSequence("negative width")
    verts = list(g.vertices)
    padding: list[str] = []
    while len(verts) + len(padding) < k + 1:
        padding.append(f"_pad{len(padding)}")
    adj = {v: set(g.neighbors(v)) for v in verts}
    for p in padding:
        adj[p] = set()
    rank = {v: i for i, v in enumerate(verts + padding)}
    alive = set(adj)
    elim = []
    while alive:
        v = min(alive, key=lambda u: (len(adj[u] & alive), -rank[u]))
        nb = adj[v] & alive
        if len(nb) > k:
            raise WidthExceeded(f"min-degree elimination needs width > {k}")
        for a, b in itertools.combinations(nb, 2):
            adj[a].add(b)
            adj[b].add(a)
        elim.append(v)
        alive.remove(v)
    build = list(reversed(elim))
    pos = {v: i for i, v in enumerate(build)}
    base = tuple(build[: k + 1])
    maxcliques = [frozenset(base)]
    steps = []
    for v in build[k + 1 :]:
        earlier = {w for w in adj[v] if pos[w] < pos[v]}
        host = next(c for c in maxcliques if earlier <= c)
        rest = sorted(host - earlier, key=pos.__getitem__)
        att = sorted(earlier, key=pos.__getitem__) + rest[: k - len(earlier)]
        att = tuple(sorted(att, key=pos.__getitem__))
        steps.append((v, att))
        maxcliques.append(frozenset(att) | {v})
    seq = BuildSequence(k, base, tuple(steps), tuple(padding))
    seq.validate(g)
    return seq


def gen_random_ktree(k: int, n: int, rng: random.Random, prefix: str = "v") -> tuple[Graph, BuildSequence]:
    if n < k + 1:
        raise ValueError("a k-tree needs at least k+1 vertices")
    vs = [f"{prefix}{i}" for i in range(n)]
    base = tuple(vs[: k + 1])
    cliques = [tuple(c) for c in itertools.combinations(base, k)]
    steps = []
    for v in vs[k + 1 :]:
        att = rng.choice(cliques)
        steps.append((v, att))
        for w in att:
            cliques.append(tuple(x for x in att if x != w) + (v,))
    seq = BuildSequence(k, base, tuple(steps))
    return seq.ktree(), seq
