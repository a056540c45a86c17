"""Lower and upper bounds on the bend-number of K_{m,n}.

Everything here is exact integer arithmetic. Square-root comparisons of the
form ``A >= B + sqrt(C)`` are decided as ``A - B >= 0 and (A - B)**2 >= C``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bipartite import kmm3_size, m4_size


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _lbl1_holds(m: int, n: int, k: int) -> bool:
    slack = (k + 1) * (m + n) - m * n
    return slack >= 0 and slack * slack >= 2 * k * (m + n)


def lbl1_min_k(m: int, n: int) -> int:
    """Smallest k passing the line-counting inequality.

    >>> lbl1_min_k(4, 4)
    2
    """
    k = 0
    while not _lbl1_holds(m, n, k):
        k += 1
    # once it holds for some k >= 1 it holds for every larger k
    assert k == 0 or all(_lbl1_holds(m, n, k + d) for d in range(1, 4))
    return k


def max_crossings_bound(k: int) -> int:
    """Most crossing points two k-bend paths can have (even k uses k + 1)."""
    if k % 2 == 0:
        k += 1
    j = (k + 1) // 2
    return j * (j + 1)


def _lbl2_holds(m: int, n: int, k: int) -> bool:
    rhs = m * (m - 1) * _ceil_div(k + 1, 2) * _ceil_div(k + 3, 2) + 2 * (k + 1) * m
    return n * (2 * m - k - 2) <= rhs


def lbl2_min_k(m: int, n: int) -> int:
    """Smallest k passing the crossing-counting inequality.

    The left side is non-positive from k = 2m - 2 on, so the scan stops there.
    """
    k = 0
    while not _lbl2_holds(m, n, k):
        k += 1
    return k


def c_inequality_check(m: int, n: int, k: int, c: int) -> bool:
    """Whether n(2m - k - 2) <= 2c + 2(k + 1)m, with c the crossings among class A."""
    if c < 0:
        raise ValueError("crossing count must be non-negative")
    return n * (2 * m - k - 2) <= 2 * c + 2 * (k + 1) * m


def reference_interval_track(m: int, n: int) -> tuple[int, int]:
    """Interval number and track number of K_{m,n}."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    return _ceil_div(m * n + 1, m + n), _ceil_div(m * n, m + n - 1)


def k2_ladder(n: int) -> int:
    """Known bend-number of K_{2,n}."""
    if n <= 1:
        return 0
    return 1 if n <= 4 else 2


# Bend-numbers of K_{3,n} by range of n. The 11 and 61 thresholds are
# quoted facts; 40..60 is open between 3 and 4.
K3_LADDER = ((2, 1), (10, 2), (39, 3))
K3_OPEN = range(40, 61)


def k3_ladder_lower(n: int) -> int:
    for top, k in K3_LADDER:
        if n <= top:
            return k
    return 3 if n in K3_OPEN else 4


@dataclass(frozen=True)
class BoundResult:
    """A bend-number interval plus the sources that produced each end.

    ``lower_from`` and ``upper_from`` hold every source consulted, as
    (tag, value) pairs, not only the ones that attain the bound.
    """

    lower: int
    upper: int
    lower_from: tuple[tuple[str, int], ...] = ()
    upper_from: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        if self.lower > self.upper:
            raise AssertionError(f"lower bound {self.lower} exceeds upper bound {self.upper}")

    @property
    def witnesses(self) -> list[tuple[str, int]]:
        return list(self.lower_from) + list(self.upper_from)

    def attaining(self) -> tuple[list[str], list[str]]:
        """Tags that reach the lower and the upper bound."""
        return ([t for t, v in self.lower_from if v == self.lower],
                [t for t, v in self.upper_from if v == self.upper])


def _point(tag: str, n: int, size: int) -> str:
    return tag if n == size else f"deletion from {tag}"


def kmn_bend_bounds(m: int, n: int) -> BoundResult:
    """Best known interval for the bend-number of K_{m,n}, with m <= n."""
    if m < 1 or n < m:
        raise ValueError("need 1 <= m <= n")
    lows: list[tuple[str, int]] = [("trivial", 0 if m == 1 else 1)]
    ups: list[tuple[str, int]] = [("comb", 2 * m - 2)]
    if m >= 3:
        lows.append(("LBL1", lbl1_min_k(m, n)))
    lows.append(("LBL2", lbl2_min_k(m, n)))
    if m == 2:
        lows.append(("K2-ladder", k2_ladder(n)))
        ups.append(("K2-ladder", k2_ladder(n)))
    if m == 3:
        lows.append(("K3-ladder", k3_ladder_lower(n)))
        if n <= 10:
            ups.append(("K3-ladder" if n == 10 else "deletion from K3-ladder", 2))
    if m >= 3 and n <= kmm3_size(m):
        ups.append((_point("kmm3", n, kmm3_size(m)), m - 1))
    if m >= 3 and n <= m4_size(m):
        ups.append((_point("m4", n, m4_size(m)), 2 * m - 3))
    return BoundResult(max(v for _, v in lows), min(v for _, v in ups), tuple(lows), tuple(ups))
