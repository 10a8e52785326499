"""Subset-sum representation sets, completeness checks, and the squares witness.

The representation set of a multiset A of nonnegative integers is every
value obtainable as a sum of distinct term occurrences (each occurrence
usable at most once; equal values in A count separately), with 0 always a
member (the empty sum).  Membership up to a bound N is computed by a
shifted-OR bitset DP: one arbitrary-precision integer serves as the
bitmap, and each occurrence a contributes `bits |= bits << a`.

The squares witness shows that for the squares sequence the power targets
2^0..2^m are all simultaneously reachable: with alpha = 1/(4*(2^m + 1)),
each i <= m has an integer n_i with floor(alpha * n_i^2) = 2^i.  All the
square-root inequalities involved are verified by cross-multiplied integer
comparisons, keeping the check float-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import WitnessFailure

BITMAP_CAP_DEFAULT = 100_000_000  # bits


@dataclass(frozen=True)
class PSetBitmap:
    """Characteristic bitmap of a representation set over [0, bound]."""

    bound: int
    bits: int

    def __post_init__(self):
        if self.bound < 1:
            raise ValueError(f"bound must be >= 1, got {self.bound}")
        if self.bits & 1 == 0:
            raise ValueError("0 must always be representable (empty sum)")
        if self.bits >> (self.bound + 1):
            raise ValueError(f"bits set beyond bound {self.bound}")

    def __contains__(self, value: int) -> bool:
        return 0 <= value <= self.bound and (self.bits >> value) & 1 == 1

    def members(self) -> list[int]:
        return [i for i in range(self.bound + 1) if (self.bits >> i) & 1]

    def count(self) -> int:
        return self.bits.bit_count()

    def runs(self) -> list[tuple[int, int]]:
        """Maximal runs of consecutive members as (start, length) pairs."""
        out = []
        i = 0
        bits = self.bits
        while i <= self.bound:
            if (bits >> i) & 1:
                start = i
                while i <= self.bound and (bits >> i) & 1:
                    i += 1
                out.append((start, i - start))
            else:
                i += 1
        return out

    def to_rle_json_dict(self) -> dict:
        return {"bound": self.bound, "runs": [[s, n] for s, n in self.runs()]}

    @classmethod
    def from_rle_json_dict(cls, payload: dict) -> "PSetBitmap":
        bits = 0
        for start, length in payload["runs"]:
            bits |= ((1 << length) - 1) << start
        return cls(bound=int(payload["bound"]), bits=bits)

    def to_bit_bytes(self) -> bytes:
        """Raw export: 8-byte little-endian bit count, then the bitmap bits."""
        n_bits = self.bound + 1
        body = self.bits.to_bytes((n_bits + 7) // 8, "little")
        return n_bits.to_bytes(8, "little") + body

    @classmethod
    def from_bit_bytes(cls, blob: bytes) -> "PSetBitmap":
        n_bits = int.from_bytes(blob[:8], "little")
        bits = int.from_bytes(blob[8:], "little")
        return cls(bound=n_bits - 1, bits=bits)


def compute_pset(
    terms: Iterable[int], bound: int, *, cap: int = BITMAP_CAP_DEFAULT
) -> PSetBitmap:
    """Exact membership bitmap of the representation set on [0, bound].

    Multiset semantics: each occurrence in `terms` is usable at most once,
    and repeated values are distinct occurrences.

    >>> compute_pset([2, 3], 10).members()
    [0, 2, 3, 5]
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    if bound + 1 > cap:
        raise ValueError(f"bound {bound} exceeds bitmap cap {cap} bits")
    mask = (1 << (bound + 1)) - 1
    bits = 1
    for a in terms:
        if a < 0:
            raise ValueError(f"terms must be nonnegative, got {a}")
        bits = (bits | (bits << a)) & mask
    return PSetBitmap(bound=bound, bits=bits)


def complete_up_to(
    terms: Iterable[int], bound: int, *, cap: int = BITMAP_CAP_DEFAULT
) -> int | None:
    """Smallest T with [T, bound] fully representable, or None.

    None means `bound` itself is missing, so no tail of [0, bound] is
    covered.  A bounded-scale heuristic only: it cannot prove that all
    sufficiently large integers are representable.
    """
    bitmap = compute_pset(terms, bound, cap=cap)
    if bound not in bitmap:
        return None
    missing = ~bitmap.bits & ((1 << (bound + 1)) - 1)
    if missing == 0:
        return 0
    return missing.bit_length()  # one past the highest missing value


def brown_criterion(terms: list[int]) -> bool:
    """Sufficient completeness test: a_1 = 1, a_{n+1} <= 1 + sum of prefix.

    Requires `terms` sorted ascending (duplicates allowed).  When true for
    a finite list, every integer in [0, sum(terms)] is representable.

    >>> brown_criterion([1, 2, 4, 8])
    True
    >>> brown_criterion([1, 3])
    False
    """
    if not terms:
        return False
    if any(a > b for a, b in zip(terms, terms[1:])):
        raise ValueError("terms must be sorted ascending")
    if terms[0] < 1:
        raise ValueError("terms must be positive")
    if terms[0] != 1:
        return False
    prefix = 0
    for a in terms:
        if a > prefix + 1:
            return False
        prefix += a
    return True


def squares_witness_alpha(m: int) -> Fraction:
    """The scaling alpha = 1/(4*(2^m + 1)) used by the squares witness.

    >>> squares_witness_alpha(2)
    Fraction(1, 20)
    """
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    return Fraction(1, 4 * (2 ** m + 1))


@dataclass(frozen=True)
class SquaresWitnessLine:
    """One target 2^i: the found n_i and the integer inequalities checked."""

    i: int
    target: int            # 2^i
    n_i: int
    lower: int             # inv_alpha * 2^i       (need n_i^2 >= lower)
    upper: int             # inv_alpha * (2^i + 1) (need n_i^2 <  upper)
    gap_rhs: int           # 2^(i+1) + 2 + isqrt(4 * 2^i * (2^i + 1))
    gap_ok: bool           # inv_alpha >= gap_rhs (window wider than 1)

    def to_json_dict(self) -> dict:
        return {
            "i": self.i,
            "target": self.target,
            "n_i": self.n_i,
            "lower": self.lower,
            "upper": self.upper,
            "gap_rhs": self.gap_rhs,
            "gap_ok": self.gap_ok,
        }


@dataclass(frozen=True)
class SquaresWitnessReport:
    m: int
    alpha: Fraction
    inv_alpha: int
    lines: tuple[SquaresWitnessLine, ...]
    all_passed: bool

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "alpha": f"{self.alpha.numerator}/{self.alpha.denominator}",
            "inv_alpha": self.inv_alpha,
            "lines": [line.to_json_dict() for line in self.lines],
            "all_passed": self.all_passed,
        }


def verify_squares_witness(m: int) -> SquaresWitnessReport:
    """Check {2^i : 0 <= i <= m} all land in the scaled squares image.

    With inv_alpha = 4*(2^m + 1) (an integer, so every comparison below is
    integer-exact): floor(alpha * n^2) = 2^i iff
    inv_alpha * 2^i <= n^2 < inv_alpha * (2^i + 1), so n_i is the smallest
    integer at least sqrt(inv_alpha * 2^i), found with math.isqrt.  The
    window is guaranteed wider than 1 by the gap inequality
    inv_alpha >= 2^(i+1) + 2 + isqrt(4 * 2^i * (2^i + 1)), also checked.
    Raises WitnessFailure if any target is missed (none ever is).
    """
    alpha = squares_witness_alpha(m)
    inv_alpha = 4 * (2 ** m + 1)
    lines = []
    for i in range(m + 1):
        target = 2 ** i
        lower = inv_alpha * target
        upper = inv_alpha * (target + 1)
        n_i = math.isqrt(lower)
        if n_i * n_i < lower:
            n_i += 1
        if n_i * n_i >= upper:
            raise WitnessFailure(
                f"no integer square in [{lower}, {upper}) for target 2^{i}", i=i
            )
        gap_rhs = 2 ** (i + 1) + 2 + math.isqrt(4 * target * (target + 1))
        gap_ok = inv_alpha >= gap_rhs
        if not gap_ok:
            raise WitnessFailure(
                f"gap inequality fails at i={i}: {inv_alpha} < {gap_rhs}", i=i
            )
        lines.append(
            SquaresWitnessLine(
                i=i,
                target=target,
                n_i=n_i,
                lower=lower,
                upper=upper,
                gap_rhs=gap_rhs,
                gap_ok=gap_ok,
            )
        )
    return SquaresWitnessReport(
        m=m, alpha=alpha, inv_alpha=inv_alpha, lines=tuple(lines), all_passed=True
    )
