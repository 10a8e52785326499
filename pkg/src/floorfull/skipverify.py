"""Verification that floor-scaled power sequences skip a power of two.

For s_n = floor(gamma^n) with gamma in [3/2, 2) and a suitable exponent j,
no single alpha in (0, 1) puts both 2^j and 2^(j+1) into the image
{floor(alpha * s_n)}.  Two independent routes certify this:

* Interval decomposition (verify_skip_all_alpha).  If 2^j is hit at index
  k, then alpha lies in I_k = [2^j/s_k, (2^j+1)/s_k).  Over that half-open
  interval the exact extrema of floor(alpha*s_{k+1}) and floor(alpha*s_{k+2})
  are computable from the endpoints alone; showing max <= 2^(j+1)-1 at
  k+1 and min >= 2^(j+1)+1 at k+2 pins 2^(j+1) between two achieved
  values it can never equal, because the image is nondecreasing in n.
  This covers every real alpha whose witness index is <= the scanned
  bound - no sampling, no tolerance.

* A k-free symbolic condition (symbolic_condition_check).  Bounding
  floor(gamma^n) between gamma^n - 1 and gamma^n and using alpha < 1
  collapses the per-k inequalities into two exact rational conditions,
  (2^j + 2) * gamma <= 2^(j+1)  and  2^j * (gamma^2 - 2) >= 2,
  which are slightly conservative but independent of k: when they hold,
  the skip happens at every witness index simultaneously.

counterexample_scan is the brute-force oracle for the same statement: it
intersects the preimage intervals of the two targets directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotFoundWithinBound, SkipViolation
from .floorseq import (
    DEFAULT_SEQ_CAP,
    FloorPower,
    SeqSpec,
    generate_terms,
    member_alpha_set,
    preimage_interval,
)
from .rationals import UNIT, RatInterval, rat_floor

DEFAULT_K_MAX = 300
DEFAULT_J_MAX = 20

GAMMA_LOW = Fraction(3, 2)
GAMMA_HIGH = Fraction(2)


def interval_extrema_of_floor(window: RatInterval, s: int) -> tuple[int, int]:
    """Exact (min, max) of floor(alpha * s) over alpha in [lo, hi).

    floor(alpha * s) is a nondecreasing step function of alpha, so the
    minimum sits at lo and the maximum just below hi; when hi * s is an
    integer the supremum itself is excluded.  Both extremes are attained
    by explicit rationals in the window.

    >>> interval_extrema_of_floor(RatInterval(Fraction(8, 17), Fraction(9, 17)), 25)
    (11, 13)
    """
    if window.is_empty:
        raise ValueError(f"window {window} is empty")
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    lo_scaled = window.lo * s
    hi_scaled = window.hi * s
    minimum = rat_floor(lo_scaled)
    if hi_scaled.denominator == 1:
        maximum = int(hi_scaled) - 1
    else:
        maximum = rat_floor(hi_scaled)
    return minimum, maximum


@dataclass(frozen=True)
class SkipRow:
    """One witness index k and the floor extrema over its alpha-interval."""

    k: int
    interval: RatInterval
    max_floor_next: int    # max of floor(alpha * s_{k+1}) over the interval
    min_floor_next2: int   # min of floor(alpha * s_{k+2}) over the interval
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "interval": self.interval.to_json_dict(),
            "max_floor_next": self.max_floor_next,
            "min_floor_next2": self.min_floor_next2,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class SkipReport:
    gamma: Fraction
    j: int
    k_max: int
    rows: tuple[SkipRow, ...]
    skipped: tuple[int, ...]   # k whose clipped alpha-interval was empty
    overall: bool

    def to_json_dict(self) -> dict:
        return {
            "gamma": f"{self.gamma.numerator}/{self.gamma.denominator}",
            "j": self.j,
            "k_max": self.k_max,
            "rows": [row.to_json_dict() for row in self.rows],
            "skipped": list(self.skipped),
            "overall": self.overall,
        }


def verify_skip_all_alpha(
    gamma: Fraction, j: int, k_max: int = DEFAULT_K_MAX, *, cap: int = DEFAULT_SEQ_CAP
) -> SkipReport:
    """Certify 2^(j+1) misses the image whenever 2^j is hit at index <= k_max.

    For each k with a nonempty alpha-window I_k = [2^j/s_k, (2^j+1)/s_k)
    inside (0, 1), the row passes when the exact floor extrema satisfy
    max at k+1 <= 2^(j+1) - 1 and min at k+2 >= 2^(j+1) + 1.  Raises
    SkipViolation (carrying the full report) if any row fails.
    """
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    if k_max < 3:
        raise ValueError(f"k_max must be >= 3, got {k_max}")
    terms = generate_terms(FloorPower(gamma), k_max + 2, cap=cap)
    target = 2 ** j
    ceiling = 2 ** (j + 1) - 1   # largest value allowed at index k+1
    floor_min = 2 ** (j + 1) + 1  # smallest value allowed at index k+2

    rows = []
    skipped = []
    overall = True
    first_failure = None
    for k in range(1, k_max + 1):
        s_k = terms[k - 1]
        window = preimage_interval(target, s_k).intersect(UNIT)
        if window.is_empty:
            skipped.append(k)
            continue
        _, max_next = interval_extrema_of_floor(window, terms[k])
        min_next2, _ = interval_extrema_of_floor(window, terms[k + 1])
        passed = max_next <= ceiling and min_next2 >= floor_min
        rows.append(
            SkipRow(
                k=k,
                interval=window,
                max_floor_next=max_next,
                min_floor_next2=min_next2,
                passed=passed,
            )
        )
        if not passed:
            overall = False
            if first_failure is None:
                first_failure = (k, max_next, min_next2)
    report = SkipReport(
        gamma=gamma,
        j=j,
        k_max=k_max,
        rows=tuple(rows),
        skipped=tuple(skipped),
        overall=overall,
    )
    if not overall:
        k, max_next, min_next2 = first_failure
        raise SkipViolation(
            f"skip argument fails at k={k}: max_next={max_next} (allowed <= {ceiling}), "
            f"min_next2={min_next2} (required >= {floor_min})",
            k=k,
            report=report,
        )
    return report


@dataclass(frozen=True)
class SymbolicCheck:
    """The two k-free inequalities with their exact evaluated sides."""

    gamma: Fraction
    j: int
    growth_lhs: Fraction   # (2^j + 2) * gamma
    growth_rhs: int        # 2^(j+1)
    gap_lhs: Fraction      # 2^j * (gamma^2 - 2)
    gap_rhs: int           # 2
    growth_ok: bool
    gap_ok: bool

    @property
    def ok(self) -> bool:
        return self.growth_ok and self.gap_ok

    def __bool__(self) -> bool:
        return self.ok

    def to_json_dict(self) -> dict:
        return {
            "gamma": f"{self.gamma.numerator}/{self.gamma.denominator}",
            "j": self.j,
            "growth": {
                "lhs": f"{self.growth_lhs.numerator}/{self.growth_lhs.denominator}",
                "rhs": str(self.growth_rhs),
                "ok": self.growth_ok,
            },
            "gap": {
                "lhs": f"{self.gap_lhs.numerator}/{self.gap_lhs.denominator}",
                "rhs": str(self.gap_rhs),
                "ok": self.gap_ok,
            },
            "ok": self.ok,
        }


def symbolic_condition_check(gamma: Fraction, j: int) -> SymbolicCheck:
    """Evaluate the k-free sufficient conditions exactly.

    True means the skip argument holds for EVERY witness index at once:
    (2^j + 2) * gamma <= 2^(j+1) and 2^j * (gamma^2 - 2) >= 2.

    >>> bool(symbolic_condition_check(Fraction(3, 2), 3))
    True
    """
    if not (GAMMA_LOW <= gamma < GAMMA_HIGH):
        raise ValueError(f"gamma must lie in [3/2, 2), got {gamma}")
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    growth_lhs = (2 ** j + 2) * gamma
    growth_rhs = 2 ** (j + 1)
    gap_lhs = 2 ** j * (gamma * gamma - 2)
    gap_rhs = 2
    return SymbolicCheck(
        gamma=gamma,
        j=j,
        growth_lhs=growth_lhs,
        growth_rhs=growth_rhs,
        gap_lhs=gap_lhs,
        gap_rhs=gap_rhs,
        growth_ok=growth_lhs <= growth_rhs,
        gap_ok=gap_lhs >= gap_rhs,
    )


def gamma_exception_search(gamma: Fraction, j_max: int = DEFAULT_J_MAX) -> int:
    """Smallest j <= j_max passing both symbolic conditions.

    Some j always works for gamma in [3/2, 2): 2^(j+1)/(2^j + 2) climbs to
    2 > gamma and 2^j * (gamma^2 - 2) grows without bound (gamma^2 > 2).
    The returned j is the smallest passing these derived sufficient
    conditions, one concrete instantiation of "a suitable exponent".
    """
    for j in range(1, j_max + 1):
        if symbolic_condition_check(gamma, j).ok:
            return j
    # threshold estimate: both conditions hold once 2^j >= max(2g/(2-g), 2/(g^2-2))
    need = max(2 * gamma / (2 - gamma), 2 / (gamma * gamma - 2))
    estimate = max(need.numerator // need.denominator, 1).bit_length()
    raise NotFoundWithinBound(
        f"no j <= {j_max} passes the symbolic conditions for gamma={gamma}; "
        f"roughly j >= {estimate} should suffice",
        bound=j_max,
    )


def counterexample_scan(
    spec: SeqSpec,
    t1: int,
    t2: int,
    n_max: int = DEFAULT_K_MAX,
    *,
    cap: int = DEFAULT_SEQ_CAP,
) -> list[RatInterval]:
    """Brute-force oracle: alpha-intervals in (0,1) hitting both t1 and t2.

    Every nonempty pairwise intersection of the two targets' preimage
    intervals (witness indices <= n_max) is returned; an empty list means
    no alpha in (0, 1) puts both targets into the image within the bound.
    """
    if t1 == t2:
        raise ValueError("targets must differ")
    first = member_alpha_set(spec, t1, n_max, UNIT, cap=cap)
    second = member_alpha_set(spec, t2, n_max, UNIT, cap=cap)
    hits = []
    for a in first:
        for b in second:
            both = a.intersect(b)
            if not both.is_empty:
                hits.append(both)
    return hits
