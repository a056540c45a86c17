import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from epg.bounds import (
    BoundResult,
    c_inequality_check,
    k2_ladder,
    kmn_bend_bounds,
    lbl1_min_k,
    lbl2_min_k,
    max_crossings_bound,
    reference_interval_track,
)
from epg.grid import crossings, make_pretzel


def lbl1_oracle(m, n):
    """Smallest k with (k+1)(m+n) - mn >= ceil(sqrt(2k(m+n)))."""
    k = 0
    while True:
        c = 2 * k * (m + n)
        root = 0 if c == 0 else math.isqrt(c - 1) + 1
        if (k + 1) * (m + n) - m * n >= root:
            return k
        k += 1


def lbl2_oracle(m, n):
    k = 0
    while True:
        denom = 2 * m - k - 2
        rhs = m * (m - 1) * math.ceil(Fraction(k + 1, 2)) * math.ceil(Fraction(k + 3, 2)) + 2 * (k + 1) * m
        if denom <= 0 or Fraction(rhs, denom) >= n:
            return k
        k += 1


@given(st.integers(1, 40), st.integers(1, 400))
def test_lbl1_matches_oracle(m, n):
    assert lbl1_min_k(m, n) == lbl1_oracle(m, n)


@given(st.integers(1, 40), st.integers(1, 400))
def test_lbl2_matches_oracle(m, n):
    assert lbl2_min_k(m, n) == lbl2_oracle(m, n)


@given(st.integers(2, 30), st.integers(2, 300))
def test_lower_bounds_monotone_in_n(m, n):
    assert lbl1_min_k(m, n) <= lbl1_min_k(m, n + 1)
    assert lbl2_min_k(m, n) <= lbl2_min_k(m, n + 1)


@pytest.mark.parametrize("m", range(3, 21))
def test_lbl1_square_case(m):
    assert lbl1_min_k(m, m) == (m + 1) // 2


@pytest.mark.parametrize("m", range(3, 9))
def test_lbl1_at_square_of_m_minus_one(m):
    assert lbl1_min_k(m, (m - 1) ** 2) == m - 1


@pytest.mark.parametrize("m", [3, 4, 5])
def test_lbl2_reaches_comb(m):
    n = m**4 - 2 * m**3 + 5 * m * m - 4 * m + 1
    assert lbl2_min_k(m, n) == 2 * m - 2


def test_lbl2_k3_threshold():
    assert lbl2_min_k(3, 61) == 4
    assert lbl2_min_k(3, 60) == 3


@pytest.mark.parametrize("j", range(1, 7))
def test_max_crossings_bound_matches_pretzel(j):
    p, q = make_pretzel(j)
    assert max_crossings_bound(2 * j - 1) == crossings(p, q) == j * (j + 1)
    assert max_crossings_bound(2 * j) == (j + 1) * (j + 2)


@pytest.mark.parametrize(
    "m, n, expected",
    [(2, 4, (1, 1)), (3, 10, (2, 2)), (3, 39, (3, 3)), (3, 40, (3, 4)), (3, 61, (4, 4)), (4, 156, (5, 5)), (4, 157, (5, 6))],
)
def test_known_intervals(m, n, expected):
    res = kmn_bend_bounds(m, n)
    assert (res.lower, res.upper) == expected


@pytest.mark.parametrize("n", range(2, 30))
def test_k2_ladder(n):
    res = kmn_bend_bounds(2, n)
    assert res.lower == res.upper == k2_ladder(n)
    assert k2_ladder(n) == (2 if n >= 5 else 1)


def test_witness_tags():
    res = kmn_bend_bounds(3, 40)
    lo, up = res.attaining()
    assert "K3-ladder" in lo
    assert "deletion from m4" not in up and "comb" in up
    assert kmn_bend_bounds(3, 39).attaining()[1] == ["m4"]
    assert "deletion from m4" in kmn_bend_bounds(4, 100).attaining()[1]
    assert res.witnesses == list(res.lower_from) + list(res.upper_from)


def test_lower_never_exceeds_upper():
    for m in range(1, 9):
        for n in range(m, 201):
            res = kmn_bend_bounds(m, n)
            assert res.lower <= res.upper


def test_bound_result_rejects_inverted_interval():
    with pytest.raises(AssertionError):
        BoundResult(3, 2)
    with pytest.raises(ValueError):
        kmn_bend_bounds(4, 3)


def test_c_inequality():
    assert c_inequality_check(3, 10, 2, 1)
    assert not c_inequality_check(3, 10, 2, 0)
    assert not c_inequality_check(3, 100, 1, 5)
    with pytest.raises(ValueError):
        c_inequality_check(3, 3, 1, -1)


def test_interval_and_track_numbers():
    assert reference_interval_track(1, 5) == (1, 1)
    assert reference_interval_track(3, 3) == (2, 2)
    assert reference_interval_track(4, 20) == (4, 4)
