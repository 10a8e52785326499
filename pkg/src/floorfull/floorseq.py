"""Strictly increasing integer sequences and their floor-scaled images.

A sequence spec describes s_1 < s_2 < ... (floors of powers of a rational
gamma > 1, the squares, or an explicit list).  The floor-scaled image under
alpha > 0 is the sequence floor(alpha * s_n); because each s_n is a
positive integer and the s_n increase, the image is nondecreasing in n, a
fact the skip-argument verifier relies on.

The alpha values sending s to a target t form exactly the half-open
interval [t/s, (t+1)/s); all scanning over "every real alpha" reduces to
exact endpoint arithmetic on those preimage intervals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .rationals import RatInterval, rat_floor

DEFAULT_SEQ_CAP = 10_000


@dataclass(frozen=True)
class FloorPower:
    """Terms floor(gamma^n) for n = 1, 2, 3, ... with rational gamma > 1."""

    gamma: Fraction

    def __post_init__(self):
        if self.gamma <= 1:
            raise ValueError(f"gamma must exceed 1, got {self.gamma}")


@dataclass(frozen=True)
class Squares:
    """Terms n^2 for n = 1, 2, 3, ..."""


@dataclass(frozen=True)
class Explicit:
    """A finite, strictly increasing list of positive integers."""

    terms: tuple[int, ...]

    def __post_init__(self):
        previous = 0
        for t in self.terms:
            if t <= previous:
                raise ValueError(
                    f"explicit terms must be strictly increasing positive, got {self.terms}"
                )
            previous = t


SeqSpec = Union[FloorPower, Squares, Explicit]


def generate_terms(spec: SeqSpec, n_max: int, *, cap: int = DEFAULT_SEQ_CAP) -> list[int]:
    """First n_max terms [s_1, ..., s_n_max]; strict increase is enforced.

    >>> generate_terms(FloorPower(Fraction(3, 2)), 10)
    [1, 2, 3, 5, 7, 11, 17, 25, 38, 57]
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if n_max > cap:
        raise ValueError(f"n_max {n_max} exceeds sequence cap {cap}")
    if isinstance(spec, FloorPower):
        power = Fraction(1)
        terms = []
        for _ in range(n_max):
            power *= spec.gamma
            terms.append(rat_floor(power))
    elif isinstance(spec, Squares):
        terms = [n * n for n in range(1, n_max + 1)]
    elif isinstance(spec, Explicit):
        if n_max > len(spec.terms):
            raise ValueError(
                f"explicit spec has {len(spec.terms)} terms, {n_max} requested"
            )
        terms = list(spec.terms[:n_max])
    else:
        raise TypeError(f"unknown sequence spec {spec!r}")
    for a, b in zip(terms, terms[1:]):
        if b <= a:
            raise ValueError(f"sequence is not strictly increasing at {a} -> {b}")
    if terms[0] < 1:
        raise ValueError(f"terms must be positive, first is {terms[0]}")
    return terms


def s_alpha(spec: SeqSpec, alpha: Fraction, n_max: int, *, cap: int = DEFAULT_SEQ_CAP) -> list[int]:
    """The floor-scaled image [floor(alpha*s_1), ..., floor(alpha*s_n_max)].

    >>> s_alpha(FloorPower(Fraction(3, 2)), Fraction(1, 2), 7)
    [0, 1, 1, 2, 3, 5, 8]
    """
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return [rat_floor(alpha * s) for s in generate_terms(spec, n_max, cap=cap)]


def preimage_interval(t: int, s: int) -> RatInterval:
    """All alpha with floor(alpha*s) = t: the interval [t/s, (t+1)/s).

    >>> preimage_interval(8, 17)
    RatInterval(lo=Fraction(8, 17), hi=Fraction(9, 17))
    """
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    return RatInterval(Fraction(t, s), Fraction(t + 1, s))


def member_alpha_set(
    spec: SeqSpec,
    t: int,
    n_max: int,
    window: RatInterval,
    *,
    cap: int = DEFAULT_SEQ_CAP,
) -> list[RatInterval]:
    """Intervals of alpha in `window` with t in the floor-scaled image.

    One clipped preimage interval per index n <= n_max whose clip is
    nonempty, in n order; together they are exactly the alpha in `window`
    for which some index <= n_max witnesses t.
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if window.lo < 0:
        raise ValueError(f"window must sit inside [0, inf), got {window}")
    intervals = []
    for s in generate_terms(spec, n_max, cap=cap):
        clipped = preimage_interval(t, s).intersect(window)
        if not clipped.is_empty:
            intervals.append(clipped)
    return intervals


@dataclass(frozen=True)
class RatioReport:
    """Where the growth condition s_n < s_{n+1} <= 2*s_n fails."""

    n_checked: int
    violations: tuple[int, ...]   # indices n (1-based) where the condition fails
    holds_from: int               # all checked n >= holds_from satisfy it

    def to_json_dict(self) -> dict:
        return {
            "n_checked": self.n_checked,
            "violations": list(self.violations),
            "holds_from": self.holds_from,
        }


def ratio_condition_check(spec: SeqSpec, n_max: int, *, cap: int = DEFAULT_SEQ_CAP) -> RatioReport:
    """Check s_n < s_{n+1} <= 2*s_n for n = 1, ..., n_max - 1."""
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    terms = generate_terms(spec, n_max, cap=cap)
    violations = tuple(
        n
        for n, (a, b) in enumerate(zip(terms, terms[1:]), start=1)
        if not (a < b <= 2 * a)
    )
    holds_from = violations[-1] + 1 if violations else 1
    return RatioReport(n_checked=n_max - 1, violations=violations, holds_from=holds_from)
