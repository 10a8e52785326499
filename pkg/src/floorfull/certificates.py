"""Certificates that ell^m + k is never r-full, for all exponents m >= 1.

For any r, ell >= 2 there is an explicit shift k making ell^m + k not
r-full for every m, and the witness data splits into three cases:

  Case I    ell = 2.  Take k = 10: 2^1 + 10 = 12 = 2^2 * 3 fails via the
            prime 3, and for m >= 2 the value is 2 mod 4, so 2 divides it
            exactly once.
  Case II   some prime p has p^2 | ell.  Take k = p: ell^m + p is p mod
            p^2, so p divides it exactly once.
  Case III  ell is square-free with an odd prime factor q.  Pick s >= 2
            with q_star = ell*s - 1 prime (a bounded search; primes in the
            progression -1 mod ell are infinite).  Take k = ell*(q_star - 1),
            so ell^m + k = ell*(ell^(m-1) + q_star - 1): at m = 1 the value
            is ell*q_star and q_star divides it exactly once; for m >= 2,
            q divides it exactly once (q^2 | ell^m + k would force
            q | ell*s - 2, i.e. q | 2, impossible for odd q).

A certificate stores (r, ell, case, k, witnesses); validity is a pure
structural check, and the verification of any finite range of m uses only
modular arithmetic with the case-prescribed witness prime, never a
factorization of ell^m + k itself.  Failure of 2-fullness is what the
witness exhibits (a prime of exponent exactly 1), and that implies failure
of r-fullness for every r >= 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .classify import factorize, is_prime, is_r_full
from .errors import NotFoundWithinBound, VerificationFailure

DEFAULT_S_MAX = 10_000
DEFAULT_MAX_M = 60
FACTOR_CROSSCHECK_BOUND = 10 ** 12

CASE_I = "I"
CASE_II = "II"
CASE_III = "III"


@dataclass(frozen=True)
class Certificate:
    """Witness data making "ell^m + k is never r-full" machine-checkable."""

    r: int
    ell: int
    case: str
    k: int
    p: Optional[int] = None       # Case II: prime with p^2 | ell
    q: Optional[int] = None       # Case III: odd prime factor of ell
    s: Optional[int] = None       # Case III: multiplier, s >= 2
    q_star: Optional[int] = None  # Case III: the prime ell*s - 1

    def witness_dict(self) -> dict:
        if self.case == CASE_II:
            return {"p": self.p}
        if self.case == CASE_III:
            return {"q": self.q, "s": self.s, "q_star": self.q_star}
        return {}

    def to_json_dict(self) -> dict:
        return {
            "r": self.r,
            "ell": self.ell,
            "case": self.case,
            "k": self.k,
            "witness": self.witness_dict(),
        }

    @classmethod
    def from_json_dict(cls, payload: dict) -> "Certificate":
        witness = payload.get("witness") or {}
        return cls(
            r=int(payload["r"]),
            ell=int(payload["ell"]),
            case=str(payload["case"]),
            k=int(payload["k"]),
            p=witness.get("p"),
            q=witness.get("q"),
            s=witness.get("s"),
            q_star=witness.get("q_star"),
        )


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    reason: Optional[str] = None  # machine-readable code for the first failed check

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class WitnessLine:
    """One verified exponent: w | ell^m + k but w^2 does not divide it."""

    m: int
    witness: int
    divides: bool
    square_free_at_witness: bool   # w^2 does not divide ell^m + k
    cross_checked: bool            # full factorization also confirmed not r-full

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "witness": self.witness,
            "divides": self.divides,
            "square_free_at_witness": self.square_free_at_witness,
            "cross_checked": self.cross_checked,
        }


@dataclass(frozen=True)
class NonRFullReport:
    certificate: Certificate
    max_m: int
    lines: tuple[WitnessLine, ...]
    all_passed: bool

    def to_json_dict(self) -> dict:
        return {
            "certificate": self.certificate.to_json_dict(),
            "max_m": self.max_m,
            "lines": [line.to_json_dict() for line in self.lines],
            "all_passed": self.all_passed,
        }


def dirichlet_search(ell: int, s_max: int = DEFAULT_S_MAX) -> tuple[int, int]:
    """Smallest s in [2, s_max] with ell*s - 1 prime, plus that prime.

    Such s always exists for large enough s_max: gcd(-1, ell) = 1, so the
    progression ell*s - 1 contains infinitely many primes.

    >>> dirichlet_search(3)
    (2, 5)
    """
    if ell < 2:
        raise ValueError(f"ell must be >= 2, got {ell}")
    if s_max < 2:
        raise ValueError(f"s_max must be >= 2, got {s_max}")
    for s in range(2, s_max + 1):
        candidate = ell * s - 1
        if is_prime(candidate):
            return s, candidate
    raise NotFoundWithinBound(
        f"no s <= {s_max} with {ell}*s - 1 prime; retry with a larger bound",
        bound=s_max,
    )


def _smallest_square_divisor_prime(ell: int) -> Optional[int]:
    for p, e in factorize(ell).factors:
        if e >= 2:
            return p
    return None


def construct_certificate(r: int, ell: int, s_max: int = DEFAULT_S_MAX) -> Certificate:
    """Deterministic certificate for (r, ell): same inputs, same output.

    Case selection: ell = 2 first (square-free but with no odd prime
    factor), then non-square-free ell, else square-free ell >= 3, which
    necessarily has an odd prime factor.
    """
    if r < 2 or ell < 2:
        raise ValueError(f"r and ell must both be >= 2, got r={r}, ell={ell}")
    if ell == 2:
        return Certificate(r=r, ell=ell, case=CASE_I, k=10)
    p = _smallest_square_divisor_prime(ell)
    if p is not None:
        return Certificate(r=r, ell=ell, case=CASE_II, k=p, p=p)
    q = min(prime for prime, _ in factorize(ell).factors if prime % 2 == 1)
    s, q_star = dirichlet_search(ell, s_max)
    return Certificate(
        r=r, ell=ell, case=CASE_III, k=ell * (q_star - 1), q=q, s=s, q_star=q_star
    )


def validate_certificate(cert: Certificate) -> ValidationResult:
    """Structural validity check; reports the first failed invariant.

    A valid structure is exactly what makes ell^m + k never r-full, so no
    numerical sweep is needed for the conclusion (verify_non_rfull
    confirms finite ranges independently anyway).
    """
    def fail(reason: str) -> ValidationResult:
        return ValidationResult(False, reason)

    if cert.r < 2:
        return fail("r_below_2")
    if cert.ell < 2:
        return fail("ell_below_2")
    if cert.k < 1:
        return fail("k_not_positive")

    if cert.case == CASE_I:
        if cert.ell != 2:
            return fail("case1_requires_ell_2")
        if cert.k != 10:
            return fail("case1_requires_k_10")
        return ValidationResult(True)

    if cert.case == CASE_II:
        if cert.p is None:
            return fail("missing_p")
        if not is_prime(cert.p):
            return fail("p_not_prime")
        if cert.ell % (cert.p * cert.p) != 0:
            return fail("p_squared_does_not_divide_ell")
        if cert.k != cert.p:
            return fail("k_must_equal_p")
        return ValidationResult(True)

    if cert.case == CASE_III:
        if cert.q is None or cert.s is None or cert.q_star is None:
            return fail("missing_case3_witness")
        if cert.q % 2 == 0:
            return fail("q_must_be_odd")
        if not is_prime(cert.q):
            return fail("q_not_prime")
        if cert.ell % cert.q != 0:
            return fail("q_does_not_divide_ell")
        if factorize(cert.ell).max_exponent >= 2:
            return fail("ell_not_squarefree")
        if cert.s < 2:
            return fail("s_below_2")
        if cert.q_star != cert.ell * cert.s - 1:
            return fail("q_star_mismatch")
        if not is_prime(cert.q_star):
            return fail("q_star_not_prime")
        if cert.k != cert.ell * (cert.q_star - 1):
            return fail("k_formula_mismatch")
        if (cert.q_star - 1) % cert.q == 0:
            # would force q | ell*s - 2, i.e. q | 2: impossible for odd q
            return fail("q_divides_q_star_minus_1")
        return ValidationResult(True)

    return fail("unknown_case")


def _witness_prime(cert: Certificate, m: int) -> int:
    if cert.case == CASE_I:
        return 3 if m == 1 else 2
    if cert.case == CASE_II:
        return cert.p
    return cert.q_star if m == 1 else cert.q


def verify_non_rfull(cert: Certificate, max_m: int = DEFAULT_MAX_M) -> NonRFullReport:
    """Confirm ell^m + k is not r-full for every m in [1, max_m].

    Each m is settled by the cheap witness argument alone: the
    case-prescribed prime w divides ell^m + k exactly once, checked via
    pow(ell, m, w^2).  Values up to 10^12 get an additional full
    factorization cross-check.  Raises VerificationFailure on the first
    failing m (which a valid certificate never produces).
    """
    validation = validate_certificate(cert)
    if not validation:
        raise ValueError(f"certificate is structurally invalid: {validation.reason}")
    if max_m < 1:
        raise ValueError(f"max_m must be >= 1, got {max_m}")

    lines = []
    for m in range(1, max_m + 1):
        w = _witness_prime(cert, m)
        w2 = w * w
        residue = (pow(cert.ell, m, w2) + cert.k) % w2
        divides = residue % w == 0
        square_free_at_witness = residue != 0
        if not (divides and square_free_at_witness):
            raise VerificationFailure(
                f"witness {w} does not divide ell^{m} + k exactly once", m=m
            )
        value = cert.ell ** m + cert.k
        cross_checked = False
        if value <= FACTOR_CROSSCHECK_BOUND:
            if is_r_full(value, cert.r) or is_r_full(value, 2):
                raise VerificationFailure(
                    f"factorization says {value} is r-full, contradicting witness", m=m
                )
            cross_checked = True
        lines.append(
            WitnessLine(
                m=m,
                witness=w,
                divides=divides,
                square_free_at_witness=square_free_at_witness,
                cross_checked=cross_checked,
            )
        )
    return NonRFullReport(
        certificate=cert, max_m=max_m, lines=tuple(lines), all_passed=True
    )
