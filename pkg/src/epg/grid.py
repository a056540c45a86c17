"""Grid paths, segments, edge-intersections and crossings.

Paths are stored by their corner sequence (start, bends, end).  Edge sets are
never materialised; all predicates work on maximal segments, so coordinates
may be arbitrarily sparse (or exact fractions while a constructor is still
refining the grid) without any cost.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence, Tuple, Union

Number = Union[int, Fraction]
Point = Tuple[Number, Number]

H = "H"
V = "V"


class GridError(ValueError):
    pass


class NonRectilinear(GridError):
    pass


class EmptyPath(GridError):
    pass


class NotMutuallyVisible(GridError):
    pass


@dataclass(frozen=True, order=True)
class Segment:
    """Maximal straight piece of a path.

    ``line`` is the fixed coordinate (y for horizontal, x for vertical) and
    ``lo``/``hi`` the extent along the line.
    """

    orientation: str
    line: Number
    lo: Number
    hi: Number

    def __post_init__(self):
        if self.orientation not in (H, V):
            raise ValueError(f"bad orientation {self.orientation!r}")
        if self.lo > self.hi:
            raise ValueError("segment with lo > hi")

    @property
    def length(self) -> Number:
        return self.hi - self.lo

    def contains_point(self, p: Point) -> bool:
        x, y = p
        if self.orientation == H:
            return y == self.line and self.lo <= x <= self.hi
        return x == self.line and self.lo <= y <= self.hi

    def overlaps(self, other: "Segment") -> bool:
        """True iff both lie on one grid-line and share a piece of positive length."""
        return (
            self.orientation == other.orientation
            and self.line == other.line
            and max(self.lo, other.lo) < min(self.hi, other.hi)
        )

    def within(self, other: "Segment") -> bool:
        return (
            self.orientation == other.orientation
            and self.line == other.line
            and other.lo <= self.lo
            and self.hi <= other.hi
        )

    def sees(self, other: "Segment") -> bool:
        """Parallel subsegments see each other if one transversal line meets both."""
        return self.orientation == other.orientation and max(self.lo, other.lo) <= min(
            self.hi, other.hi
        )


@dataclass(frozen=True)
class Subsegment(Segment):
    owner: str = ""


class PathKind(enum.Enum):
    STAIRCASE = "staircase"
    SNAKE = "snake"
    OTHER = "other"


def _direction(a: Point, b: Point) -> Tuple[int, int]:
    dx = (b[0] > a[0]) - (b[0] < a[0])
    dy = (b[1] > a[1]) - (b[1] < a[1])
    return dx, dy


@dataclass(frozen=True)
class GridPath:
    corners: Tuple[Point, ...]

    def __post_init__(self):
        if not self.corners:
            raise EmptyPath("a grid path needs at least one point")

    @cached_property
    def segments(self) -> Tuple[Segment, ...]:
        segs = []
        for a, b in zip(self.corners, self.corners[1:]):
            if a[1] == b[1]:
                segs.append(Segment(H, a[1], min(a[0], b[0]), max(a[0], b[0])))
            else:
                segs.append(Segment(V, a[0], min(a[1], b[1]), max(a[1], b[1])))
        return tuple(segs)

    @property
    def bends(self) -> int:
        return max(len(self.corners) - 2, 0)

    @property
    def start(self) -> Point:
        return self.corners[0]

    @property
    def end(self) -> Point:
        return self.corners[-1]

    def turns(self) -> list[str]:
        """Turn letters ``L``/``R`` at each bend, in travel order."""
        out = []
        c = self.corners
        for a, b, d in zip(c, c[1:], c[2:]):
            u = _direction(a, b)
            w = _direction(b, d)
            cross = u[0] * w[1] - u[1] * w[0]
            out.append("L" if cross > 0 else "R")
        return out

    def kind(self) -> PathKind:
        t = self.turns()
        if all(x != y for x, y in zip(t, t[1:])):
            return PathKind.STAIRCASE
        if len(t) % 2 == 0 and _is_snake_pattern(t):
            return PathKind.SNAKE
        return PathKind.OTHER

    def map(self, fn) -> "GridPath":
        return GridPath(tuple(fn(p) for p in self.corners))

    def translate(self, dx: Number, dy: Number) -> "GridPath":
        return self.map(lambda p: (p[0] + dx, p[1] + dy))

    def rotate90(self, times: int = 1) -> "GridPath":
        """Counterclockwise rotation about the origin."""
        times %= 4

        def rot(p):
            x, y = p
            for _ in range(times):
                x, y = -y, x
            return (x, y)

        return self.map(rot)

    def reflect_x(self) -> "GridPath":
        """Mirror across the vertical axis (x -> -x)."""
        return self.map(lambda p: (-p[0], p[1]))

    def __iter__(self) -> Iterator[Point]:
        return iter(self.corners)

    def __len__(self) -> int:
        return len(self.corners)


def _is_snake_pattern(t: Sequence[str]) -> bool:
    pairs = [t[i : i + 2] for i in range(0, len(t), 2)]
    if any(p[0] != p[1] for p in pairs):
        return False
    return all(a[0] != b[0] for a, b in zip(pairs, pairs[1:]))


def normalize_path(corners: Iterable[Sequence[Number]]) -> GridPath:
    """Canonical path: drop zero-length steps and merge collinear runs."""
    pts = [(p[0], p[1]) for p in corners]
    if not pts:
        raise EmptyPath("a grid path needs at least one point")
    for a, b in zip(pts, pts[1:]):
        if a[0] != b[0] and a[1] != b[1]:
            raise NonRectilinear(f"step {a} -> {b} is not axis-parallel")
    dedup = [pts[0]]
    for p in pts[1:]:
        if p != dedup[-1]:
            dedup.append(p)
    out = [dedup[0]]
    for p in dedup[1:]:
        if len(out) >= 2:
            a, b = out[-2], out[-1]
            d1 = _direction(a, b)
            d2 = _direction(b, p)
            if d1 == d2:
                out[-1] = p
                continue
            if d1 == (-d2[0], -d2[1]):
                raise NonRectilinear(f"path reverses onto itself at {b}")
        out.append(p)
    return GridPath(tuple(out))


def bends(p: GridPath) -> int:
    return p.bends


def edge_intersects(p: GridPath, q: GridPath) -> bool:
    """True iff the paths share at least one grid-edge (points do not count)."""
    for s in p.segments:
        for t in q.segments:
            if s.overlaps(t):
                return True
    return False


def crossing_points(p: GridPath, q: GridPath) -> set[Point]:
    """Shared points where a horizontal piece of one meets a vertical piece of the other.

    Incidences at bends and at segment ends count; parallel overlaps do not.
    """
    pts: set[Point] = set()
    for s in p.segments:
        for t in q.segments:
            if s.orientation == t.orientation:
                continue
            h, v = (s, t) if s.orientation == H else (t, s)
            if h.lo <= v.line <= h.hi and v.lo <= h.line <= v.hi:
                pts.add((v.line, h.line))
    return pts


def crossings(p: GridPath, q: GridPath) -> int:
    return len(crossing_points(p, q))


def connect_snake(
    subsegments: Sequence[Segment],
    lanes: Tuple[Number, Number] | None = None,
    reverse: bool = False,
) -> GridPath:
    """Snake with one segment inside each of the parallel ``subsegments``.

    The subsegments are visited in order of their line coordinate (reversed if
    ``reverse``); connectors alternate between the two transversal ``lanes``.
    Without explicit lanes the two ends of the common visible range are used.
    The result has exactly ``2 * len(subsegments) - 2`` bends.
    """
    if not subsegments:
        raise ValueError("nothing to connect")
    orient = subsegments[0].orientation
    if any(s.orientation != orient for s in subsegments):
        raise ValueError("subsegments must be parallel")
    lo = max(s.lo for s in subsegments)
    hi = min(s.hi for s in subsegments)
    if lo >= hi:
        raise NotMutuallyVisible("no two common transversal lines")
    if lanes is None:
        lanes = (lo, hi)
    a, b = lanes
    if a == b or not all(lo <= c <= hi for c in lanes):
        raise NotMutuallyVisible(f"lanes {lanes} do not cross every subsegment")
    lines = sorted(s.line for s in subsegments)
    if len(set(lines)) != len(lines):
        raise ValueError("two subsegments on one grid-line")
    if reverse:
        lines.reverse()
    pts = []
    cur, nxt = a, b
    for line in lines:
        pts.append((line, cur) if orient == V else (cur, line))
        pts.append((line, nxt) if orient == V else (nxt, line))
        cur, nxt = nxt, cur
    return normalize_path(pts)


def make_pretzel(j: int) -> Tuple[GridPath, GridPath]:
    """Two (2j-1)-bend paths crossing in j(j+1) points."""
    if j < 1:
        raise ValueError("j must be positive")
    x, y = 0, 0
    pts = [(x, y)]
    for i in range(1, j + 1):
        x += (2 * j + 3 - 2 * i) * (1 if i % 2 else -1)
        pts.append((x, y))
        y += 2 * i * (-1 if i % 2 else 1)
        pts.append((x, y))
    p1 = GridPath(tuple(pts))
    p2 = p1.rotate90(2).translate(2 * j + 2, -1)
    return p1, p2


# -- representations ---------------------------------------------------------


@dataclass(frozen=True)
class Representation:
    """Vertex label -> grid path."""

    paths: Mapping[str, GridPath] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "paths", dict(self.paths))

    def __getitem__(self, v: str) -> GridPath:
        return self.paths[v]

    def __iter__(self):
        return iter(self.paths)

    def __len__(self) -> int:
        return len(self.paths)

    def __contains__(self, v) -> bool:
        return v in self.paths

    def __eq__(self, other) -> bool:
        return isinstance(other, Representation) and self.paths == other.paths

    def __hash__(self):
        return hash(tuple(sorted((k, v.corners) for k, v in self.paths.items())))

    def items(self):
        return self.paths.items()

    @property
    def vertices(self) -> list[str]:
        return list(self.paths)

    @property
    def max_bends(self) -> int:
        return max((p.bends for p in self.paths.values()), default=0)

    def map(self, fn) -> "Representation":
        return Representation({v: p.map(fn) for v, p in self.paths.items()})

    def restrict(self, vertices: Iterable[str]) -> "Representation":
        return Representation({v: self.paths[v] for v in vertices})


def compress_coordinates(rep: Representation) -> Representation:
    """Order-preserving relabelling of x and y values onto 0, 1, 2, ..."""
    xs = sorted({p[0] for path in rep.paths.values() for p in path.corners})
    ys = sorted({p[1] for path in rep.paths.values() for p in path.corners})
    xmap = {x: i for i, x in enumerate(xs)}
    ymap = {y: i for i, y in enumerate(ys)}
    return Representation(
        {
            v: GridPath(tuple((xmap[x], ymap[y]) for x, y in path.corners))
            for v, path in rep.paths.items()
        }
    )
