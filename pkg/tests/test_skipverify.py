from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from floorfull.errors import NotFoundWithinBound, SkipViolation
from floorfull.floorseq import FloorPower, Squares, s_alpha
from floorfull.rationals import RatInterval, interval, rat_floor
from floorfull.skipverify import (
    counterexample_scan,
    gamma_exception_search,
    interval_extrema_of_floor,
    symbolic_condition_check,
    verify_skip_all_alpha,
)

POW32 = FloorPower(Fraction(3, 2))


# --- interval extrema -------------------------------------------------------

def test_extrema_examples():
    # 200/17 ~ 11.76 and 225/17 ~ 13.23
    assert interval_extrema_of_floor(interval("8/17", "9/17"), 25) == (11, 13)
    # 304/17 ~ 17.88 and 342/17 ~ 20.12
    assert interval_extrema_of_floor(interval("8/17", "9/17"), 38) == (17, 20)
    # hi * s = 5 lands on an integer, which the half-open window excludes
    assert interval_extrema_of_floor(interval(0, 1), 5) == (0, 4)


def test_extrema_rejects_empty_window_and_bad_s():
    with pytest.raises(ValueError):
        interval_extrema_of_floor(interval(1, 1), 5)
    with pytest.raises(ValueError):
        interval_extrema_of_floor(interval(0, 1), 0)


@given(
    lo=st.fractions(min_value=0, max_value=3),
    width=st.fractions(min_value=Fraction(1, 1000), max_value=2),
    s=st.integers(1, 400),
)
def test_extrema_attained_by_explicit_rationals(lo, width, s):
    window = RatInterval(lo, lo + width)
    minimum, maximum = interval_extrema_of_floor(window, s)
    assert minimum <= maximum
    # the minimum happens at the left endpoint
    assert rat_floor(window.lo * s) == minimum
    # the maximum happens at max(lo, t/s) for the top floor value t
    attaining = max(window.lo, Fraction(maximum, s))
    assert attaining in window
    assert rat_floor(attaining * s) == maximum


@given(
    lo=st.fractions(min_value=0, max_value=3),
    width=st.fractions(min_value=Fraction(1, 1000), max_value=2),
    s=st.integers(1, 60),
)
def test_extrema_bound_every_sample(lo, width, s):
    window = RatInterval(lo, lo + width)
    minimum, maximum = interval_extrema_of_floor(window, s)
    for i in range(8):
        sample = window.lo + window.width * Fraction(i, 8)
        assert minimum <= rat_floor(sample * s) <= maximum


# --- the skip verifier ------------------------------------------------------

def test_skip_verify_baseline_passes():
    report = verify_skip_all_alpha(Fraction(3, 2), 3, 300)
    assert report.overall
    assert len(report.rows) + len(report.skipped) == 300
    assert all(row.passed for row in report.rows)


def test_skip_verify_row_seven_matches_known_bounds():
    report = verify_skip_all_alpha(Fraction(3, 2), 3, 300)
    row = {r.k: r for r in report.rows}[7]
    assert row.interval == interval("8/17", "9/17")
    assert row.max_floor_next == 13 <= 14
    assert row.min_floor_next2 == 17 >= 17


def test_skip_verify_row_six():
    report = verify_skip_all_alpha(Fraction(3, 2), 3, 300)
    row = {r.k: r for r in report.rows}[6]
    assert row.interval == interval("8/11", "9/11")
    assert (row.max_floor_next, row.min_floor_next2) == (13, 18)


def test_skip_verify_skips_small_indices():
    report = verify_skip_all_alpha(Fraction(3, 2), 3, 50)
    assert report.skipped == (1, 2, 3, 4, 5)  # floor((3/2)^k) <= 8 up to k = 5


def test_skip_verify_j1_violates():
    with pytest.raises(SkipViolation) as exc:
        verify_skip_all_alpha(Fraction(3, 2), 1, 50)
    assert exc.value.k == 3
    assert exc.value.report is not None
    assert not exc.value.report.overall


def test_skip_verify_validates_args():
    with pytest.raises(ValueError):
        verify_skip_all_alpha(Fraction(3, 2), 0, 50)
    with pytest.raises(ValueError):
        verify_skip_all_alpha(Fraction(3, 2), 3, 2)


def test_skip_report_json_rows():
    payload = verify_skip_all_alpha(Fraction(3, 2), 3, 20).to_json_dict()
    assert payload["gamma"] == "3/2"
    assert payload["overall"] is True
    assert payload["rows"][0]["k"] == 6
    assert payload["rows"][0]["interval"]["closed_open"] is True


# --- symbolic conditions ----------------------------------------------------

def test_symbolic_baseline_values():
    check = symbolic_condition_check(Fraction(3, 2), 3)
    assert check.ok
    assert check.growth_lhs == 15 and check.growth_rhs == 16
    assert check.gap_lhs == 2 and check.gap_rhs == 2


def test_symbolic_j2_fails_gap():
    check = symbolic_condition_check(Fraction(3, 2), 2)
    assert not check.ok
    assert check.gap_lhs == 1  # 4 * (9/4 - 2)


def test_symbolic_eight_fifths():
    check = symbolic_condition_check(Fraction(8, 5), 3)
    assert check.ok
    assert check.growth_lhs == 16 and check.gap_lhs == Fraction(112, 25)


def test_symbolic_domain():
    with pytest.raises(ValueError):
        symbolic_condition_check(Fraction(7, 5), 3)
    with pytest.raises(ValueError):
        symbolic_condition_check(Fraction(2), 3)
    with pytest.raises(ValueError):
        symbolic_condition_check(Fraction(3, 2), 0)


GAMMA_GRID = [
    Fraction(3, 2),
    Fraction(8, 5),
    Fraction(5, 3),
    Fraction(7, 4),
    Fraction(9, 5),
    Fraction(15, 8),
    Fraction(19, 10),
]


def test_symbolic_monotone_in_j():
    for gamma in GAMMA_GRID:
        j = gamma_exception_search(gamma, 20)
        for extra in range(1, 5):
            assert symbolic_condition_check(gamma, j + extra).ok, (gamma, j + extra)


def test_symbolic_implies_bounded_scan():
    for gamma in GAMMA_GRID:
        j = gamma_exception_search(gamma, 20)
        report = verify_skip_all_alpha(gamma, j, 60)
        assert report.overall, (gamma, j)


# --- gamma exception search -------------------------------------------------

def test_gamma_search_values():
    # each frozen value re-derived here: smallest j passing both conditions
    expected = {
        Fraction(3, 2): 3,
        Fraction(8, 5): 3,
        Fraction(17, 10): 4,
        Fraction(9, 5): 5,
        Fraction(19, 10): 6,
    }
    for gamma, j in expected.items():
        assert gamma_exception_search(gamma, 20) == j
        assert symbolic_condition_check(gamma, j).ok
        if j > 1:
            assert not symbolic_condition_check(gamma, j - 1).ok


def test_gamma_search_eight_fifths_rejects_j2_on_growth():
    check = symbolic_condition_check(Fraction(8, 5), 2)
    assert not check.growth_ok  # (4 + 2) * 8/5 = 48/5 > 8


def test_gamma_search_bound_exhaustion():
    with pytest.raises(NotFoundWithinBound):
        gamma_exception_search(Fraction(19, 10), 2)


# --- counterexample scan ----------------------------------------------------

def test_scan_eight_sixteen_empty():
    assert counterexample_scan(POW32, 8, 16, 100) == []


def test_scan_squares_positive_control():
    hits = counterexample_scan(Squares(), 1, 2, 50)
    assert hits
    target = Fraction(1, 20)
    assert any(target in window for window in hits)
    assert rat_floor(Fraction(25, 20)) == 1 and rat_floor(Fraction(49, 20)) == 2


def test_scan_hits_confirmed_by_direct_evaluation():
    hits = counterexample_scan(POW32, 8, 11, 100)
    for window in hits:
        for alpha in (window.lo, window.midpoint):
            image = set(s_alpha(POW32, alpha, 100))
            assert {8, 11} <= image, (window, alpha)


def test_scan_agrees_with_dense_alpha_grid():
    # independent route: sample every alpha = i/200 and evaluate directly
    n_max = 60
    hits = counterexample_scan(POW32, 8, 11, n_max)
    for i in range(1, 200):
        alpha = Fraction(i, 200)
        image = set(s_alpha(POW32, alpha, n_max))
        covered = any(alpha in window for window in hits)
        assert covered == ({8, 11} <= image), alpha


def test_scan_rejects_equal_targets():
    with pytest.raises(ValueError):
        counterexample_scan(POW32, 8, 8, 50)
