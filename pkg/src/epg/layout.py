"""Mutable working area for the insertion constructors.

Coordinates are exact fractions so that a fresh grid-line can always be put
between two existing ones; callers compress to integers when done.  Which
pieces of a path are *displayed* (covered by no other path) is always computed
from the geometry, never tracked separately, so invariant checks look at the
real state.
"""

from __future__ import annotations

import bisect
from collections import defaultdict
from fractions import Fraction
from typing import Iterable

from .grid import GridPath, Representation, compress_coordinates, normalize_path

# symmetries of the square as (a, b, c, d): (x, y) -> (a x + b y, c x + d y)
SYMMETRIES = (
    (1, 0, 0, 1),
    (-1, 0, 0, 1),
    (1, 0, 0, -1),
    (-1, 0, 0, -1),
    (0, 1, 1, 0),
    (0, -1, 1, 0),
    (0, 1, -1, 0),
    (0, -1, -1, 0),
)


def apply(m, p):
    a, b, c, d = m
    return (a * p[0] + b * p[1], c * p[0] + d * p[1])


def inverse(m):
    a, b, c, d = m
    return (a, c, b, d)  # orthogonal: inverse is the transpose


class ConstructionError(RuntimeError):
    """No insertion satisfied the invariants; indicates a bug, never bad input."""


def sign(x) -> int:
    return (x > 0) - (x < 0)


class Layout:
    def __init__(self, paths: dict | None = None):
        self.paths: dict[str, GridPath] = {}
        self._used = {0: [Fraction(0)], 1: [Fraction(0)]}
        self._index: dict | None = None
        for v, p in (paths or {}).items():
            self.add(v, p)

    # -- bookkeeping -----------------------------------------------------

    def add(self, v: str, path: GridPath) -> None:
        self.paths[v] = path
        for x, y in path.corners:
            self.reserve(0, x)
            self.reserve(1, y)
        self._index = None

    def reserve(self, axis: int, value) -> None:
        used = self._used[axis]
        i = bisect.bisect_left(used, value)
        if i == len(used) or used[i] != value:
            used.insert(i, Fraction(value))

    def transformed(self, m) -> "Layout":
        return Layout({v: p.map(lambda q: apply(m, q)) for v, p in self.paths.items()})

    def representation(self, drop: Iterable[str] = ()) -> Representation:
        drop = set(drop)
        return compress_coordinates(
            Representation({v: p for v, p in self.paths.items() if v not in drop})
        )

    def _lines(self) -> dict:
        if self._index is None:
            idx: dict = defaultdict(list)
            for v, p in self.paths.items():
                for s in p.segments:
                    if s.lo < s.hi:
                        idx[(s.orientation, s.line)].append((s.lo, s.hi, v))
            self._index = idx
        return self._index

    # -- fresh coordinates -----------------------------------------------

    def above(self, axis: int, lo, hi=None) -> Fraction:
        """Unused value just above ``lo`` (and below ``hi``); reserved at once."""
        used = self._used[axis]
        i = bisect.bisect_right(used, lo)
        nxt = used[i] if i < len(used) else Fraction(lo) + 2
        if hi is not None:
            nxt = min(nxt, hi)
        val = (Fraction(lo) + Fraction(nxt)) / 2
        self.reserve(axis, val)
        return val

    def below(self, axis: int, hi, lo=None) -> Fraction:
        used = self._used[axis]
        i = bisect.bisect_left(used, hi)
        prv = used[i - 1] if i > 0 else Fraction(hi) - 2
        if lo is not None:
            prv = max(prv, lo)
        val = (Fraction(hi) + Fraction(prv)) / 2
        self.reserve(axis, val)
        return val

    def beyond(self, axis: int, side: int = 1) -> Fraction:
        """Unused value past every value in use on the given side."""
        used = self._used[axis]
        return self.above(axis, used[-1]) if side > 0 else self.below(axis, used[0])

    def near_zero(self, axis: int, side: int) -> Fraction:
        return self.above(axis, 0) if side > 0 else self.below(axis, 0)

    # -- displays --------------------------------------------------------

    def free_parts(self, v: str, orientation: str) -> list[tuple]:
        """Maximal pieces of ``v``'s segments of one orientation that no other path uses."""
        out = []
        idx = self._lines()
        for s in self.paths[v].segments:
            if s.orientation != orientation or s.lo >= s.hi:
                continue
            others = sorted(
                (lo, hi) for lo, hi, w in idx[(s.orientation, s.line)] if w != v and lo < s.hi and hi > s.lo
            )
            cur = s.lo
            for lo, hi in others:
                if lo > cur:
                    out.append((s.line, cur, min(lo, s.hi)))
                cur = max(cur, hi)
                if cur >= s.hi:
                    break
            if cur < s.hi:
                out.append((s.line, cur, s.hi))
        return [p for p in out if p[1] < p[2]]

    def axis_displays(self, v: str, orientation: str) -> list[tuple]:
        """Displayed pieces crossing the perpendicular axis in an interior point.

        Vertical pieces are tested against the x-axis (y = 0), horizontal
        ones against the y-axis (x = 0).
        """
        return [p for p in self.free_parts(v, orientation) if p[1] < 0 < p[2]]

    def exact_parts(self, orientation: str, line, owners: frozenset) -> list[tuple]:
        """Maximal pieces of a grid-line covered by exactly the given paths."""
        items = self._lines().get((orientation, line), [])
        cuts = sorted({c for lo, hi, _ in items for c in (lo, hi)})
        out: list[list] = []
        for a, b in zip(cuts, cuts[1:]):
            cover = {w for lo, hi, w in items if lo <= a and b <= hi}
            if cover == owners:
                if out and out[-1][1] == a:
                    out[-1][1] = b
                else:
                    out.append([a, b])
        return [(lo, hi) for lo, hi in out]

    def neighbours_of(self, v: str) -> set[str]:
        idx = self._lines()
        out = set()
        for s in self.paths[v].segments:
            if s.lo >= s.hi:
                continue
            for lo, hi, w in idx[(s.orientation, s.line)]:
                if w != v and lo < s.hi and hi > s.lo:
                    out.add(w)
        return out


def path(points) -> GridPath:
    return normalize_path(points)
