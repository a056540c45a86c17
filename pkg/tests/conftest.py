import itertools
import time
from contextlib import contextmanager

import networkx as nx
import pytest
from hypothesis import strategies as st

from epg.graph import Graph
from epg.grid import GridPath


def _int(x):
    if int(x) != x:
        raise ValueError(f"{x} is not an integer; compress first")
    return int(x)


def unit_edges(path):
    """Unit grid-edges of an integer path, enumerated step by step."""
    out = set()
    corners = [(_int(x), _int(y)) for x, y in path.corners]
    for (x0, y0), (x1, y1) in zip(corners, corners[1:]):
        if y0 == y1:
            for x in range(min(x0, x1), max(x0, x1)):
                out.add(("h", x, y0))
        else:
            for y in range(min(y0, y1), max(y0, y1)):
                out.add(("v", x0, y))
    return out


def brute_intersection_graph(rep):
    """Intersection graph from explicit unit-edge sets; independent of epg.verify.

    Coordinates are first replaced by their rank, so fractional layouts work.
    """
    xs = sorted({c[0] for p in rep.paths.values() for c in p.corners})
    ys = sorted({c[1] for p in rep.paths.values() for c in p.corners})
    rx = {x: i for i, x in enumerate(xs)}
    ry = {y: i for i, y in enumerate(ys)}
    edges = {v: unit_edges(GridPath(tuple((rx[x], ry[y]) for x, y in p.corners))) for v, p in rep.items()}
    es = [(u, v) for u, v in itertools.combinations(rep.vertices, 2) if edges[u] & edges[v]]
    return Graph(rep.vertices, es)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(tuple(e) for e in g.edges)
    return h


@pytest.fixture
def nxify():
    return to_nx


@st.composite
def alternating_paths(draw, segments=None, lo=0, hi=12):
    nseg = segments if segments is not None else draw(st.integers(1, 5))
    x = draw(st.integers(lo, hi))
    y = draw(st.integers(lo, hi))
    horizontal = draw(st.booleans())
    pts = [(x, y)]
    for _ in range(nseg):
        if horizontal:
            x = draw(st.integers(lo, hi).filter(lambda v, x=x: v != x))
        else:
            y = draw(st.integers(lo, hi).filter(lambda v, y=y: v != y))
        pts.append((x, y))
        horizontal = not horizontal
    return GridPath(tuple(pts))


@st.composite
def small_graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    vs = [f"v{i}" for i in range(n)]
    pairs = list(itertools.combinations(vs, 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(vs, [p for p, k in zip(pairs, keep) if k])


# -- acceptance bookkeeping ------------------------------------------------------------

ACCEPTANCE: dict[int, tuple[str, bool, float, float]] = {}


@contextmanager
def criterion(number, title, limit):
    """Time the block, record pass/fail, and fail the test if it ran over."""
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        ACCEPTANCE[number] = (title, ok and elapsed < limit, elapsed, limit)
    assert elapsed < limit, f"criterion {number} took {elapsed:.2f}s, limit {limit}s"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok, elapsed, limit = ACCEPTANCE[number]
        mark = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{mark}  {number:2d}. {title}  ({elapsed:.2f}s, limit {limit:g}s)")
