"""Primality, factorization, and r-free / r-full classification.

An integer n is r-free when no prime p has p^r | n, and r-full when every
prime dividing n divides it with exponent >= r (2-free = square-free,
2-full = square-full).  n = 1 is declared both r-free and r-full: both
definitions hold vacuously, and fixing the convention keeps enumeration
counts unambiguous.

Factorization strategy: trial division by sieve primes (default bound
10^6), a Miller-Rabin primality test that is deterministic for all inputs
below 3,317,044,064,679,887,385,961,981 (comfortably above 2^64), then a
Brent-rho splitter driven by a fixed-seed RNG for anything larger, so runs
are reproducible.
"""

from __future__ import annotations

import itertools
import math
import random
from array import array
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .rationals import rat_floor

TRIAL_DIVISION_BOUND = 1_000_000
SIEVE_CAP_DEFAULT = 100_000_000
DEFAULT_RHO_SEED = 0

# Deterministic Miller-Rabin witness set for n < 3.317e24 (> 2^64); for
# larger n the same fixed 12 bases give a probable-prime verdict with
# error probability < 4^-12, and identical answers on every run.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_BELOW = 3_317_044_064_679_887_385_961_981


def _prime_sieve(limit: int) -> bytearray:
    """Byte flags, sieve[i] == 1 iff i is prime, for 0 <= i <= limit."""
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            start = p * p
            sieve[start :: p] = bytearray(len(range(start, limit + 1, p)))
    return sieve


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    sieve = _prime_sieve(TRIAL_DIVISION_BOUND)
    return tuple(i for i, flag in enumerate(sieve) if flag)


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit, ascending."""
    if limit < 2:
        return []
    sieve = _prime_sieve(limit)
    return [i for i, flag in enumerate(sieve) if flag]


def is_prime(n: int) -> bool:
    """Primality test, deterministic for every n below 3.317e24.

    >>> is_prime(2)
    True
    >>> is_prime(1)
    False
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Sorted prime-exponent decomposition of a positive integer."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        product = 1
        last_prime = 1
        for p, e in self.factors:
            if p <= last_prime:
                raise ValueError(f"primes not strictly increasing in {self.factors}")
            if e < 1:
                raise ValueError(f"exponent {e} < 1 for prime {p}")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            last_prime = p
            product *= p ** e
        if product != self.n:
            raise ValueError(f"factors {self.factors} do not multiply to {self.n}")

    @property
    def max_exponent(self) -> int:
        return max((e for _, e in self.factors), default=0)

    @property
    def min_exponent(self) -> int:
        return min((e for _, e in self.factors), default=0)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "factors": [[p, e] for p, e in self.factors]}


def _brent_rho(n: int, rng: random.Random) -> int:
    """A nontrivial factor of composite n with no small prime factors."""
    if n % 2 == 0:
        return 2
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


# below this, finishing trial division is cheaper than a Miller-Rabin call
_PRIMALITY_SHORTCUT_MIN = 10 ** 8


@lru_cache(maxsize=8192)
def factorize(n: int, *, rho_seed: int = DEFAULT_RHO_SEED) -> Factorization:
    """Full prime factorization of n >= 1 (n = 1 gives an empty factor list).

    Results are immutable and cached; identical calls are free.

    >>> factorize(72).factors
    ((2, 3), (3, 2))
    """
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    counts: dict[int, int] = {}
    m = n
    if m >= _PRIMALITY_SHORTCUT_MIN and is_prime(m):
        counts[m] = 1
        m = 1
    exhausted_sieve = m > 1
    for p in _small_primes():
        if m == 1 or p * p > m:
            exhausted_sieve = False
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            counts[p] = e
            if m >= _PRIMALITY_SHORTCUT_MIN and is_prime(m):
                counts[m] = 1
                m = 1
                exhausted_sieve = False
                break
    if m > 1:
        if not exhausted_sieve or is_prime(m):
            # no divisor below sqrt(m), or a direct primality verdict
            counts[m] = counts.get(m, 0) + 1
        else:
            # composite with no prime factor <= 10^6: split with Brent rho
            rng = random.Random(rho_seed)
            stack = [m]
            while stack:
                c = stack.pop()
                if is_prime(c):
                    counts[c] = counts.get(c, 0) + 1
                    continue
                d = _brent_rho(c, rng)
                stack.append(d)
                stack.append(c // d)
    return Factorization(n, tuple(sorted(counts.items())))


def is_r_free(n: int, r: int) -> bool:
    """True iff no prime p has p^r | n (vacuously true for n = 1)."""
    _require_classify_args(n, r)
    return factorize(n).max_exponent < r


def is_r_full(n: int, r: int) -> bool:
    """True iff every prime dividing n does so with exponent >= r.

    >>> is_r_full(72, 2)
    True
    >>> is_r_full(12, 2)
    False
    """
    _require_classify_args(n, r)
    if n == 1:
        return True
    return factorize(n).min_exponent >= r


def _require_classify_args(n: int, r: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")


def _spf_table(limit: int) -> array:
    """Smallest-prime-factor table for 0..limit (0 and 1 map to 0)."""
    spf = array("i", [0]) * (limit + 1)
    for p in range(2, limit + 1):
        if spf[p] == 0:
            for j in range(p, limit + 1, p):
                if spf[j] == 0:
                    spf[j] = p
    return spf


def r_full_up_to(limit: int, r: int, *, cap: int = SIEVE_CAP_DEFAULT) -> list[int]:
    """All r-full integers in [1, limit], ascending.

    Classification walks a smallest-prime-factor sieve table instead of
    factorizing each element, so the whole range costs one sieve pass.
    """
    _require_classify_args(limit, r)
    if limit > cap:
        raise ValueError(f"limit {limit} exceeds sieve cap {cap}")
    spf = _spf_table(limit)
    out = [1]
    for n in range(2, limit + 1):
        m = n
        full = True
        while m > 1:
            p = spf[m]
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            if e < r:
                full = False
                break
        if full:
            out.append(n)
    return out


def squarefull_via_a2b3(limit: int, *, cap: int = SIEVE_CAP_DEFAULT) -> list[int]:
    """Square-full integers in [1, limit] via the a^2*b^3 characterization.

    Every square-full n is a^2*b^3 with b square-free, so enumerating those
    products is an independent route to the same set as r_full_up_to(limit, 2).
    """
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    if limit > cap:
        raise ValueError(f"limit {limit} exceeds sieve cap {cap}")
    found: set[int] = set()
    b = 1
    while b ** 3 <= limit:
        if all(b % (p * p) != 0 for p in range(2, math.isqrt(b) + 1)):
            cube = b ** 3
            a = 1
            while a * a * cube <= limit:
                found.add(a * a * cube)
                a += 1
        b += 1
    return sorted(found)


def r_free_integers(r: int) -> Iterator[int]:
    """The r-free integers 1, 2, 3, ... in increasing order."""
    return (n for n in itertools.count(1) if is_r_free(n, r))


def r_full_integers(r: int) -> Iterator[int]:
    """The r-full integers 1, 4, 8, ... (for r = 2) in increasing order."""
    return (n for n in itertools.count(1) if is_r_full(n, r))


def series_digits(
    terms: Iterable[int], base: int, n_terms: int, n_digits: int
) -> tuple[str, Fraction]:
    """Base-`base` digits of sum(a * base**-a) over the first n_terms of `terms`.

    Returns the first n_digits digits after the radix point of the exact
    partial sum, plus the partial sum itself as a rational.  Digits are
    extracted by repeated multiply-by-base on the exact fractional part,
    so there are no rounding decisions; bases above 10 render as
    comma-separated decimal digit values.

    The consumed prefix must be strictly increasing positive integers.
    """
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if n_terms < 1 or n_digits < 1:
        raise ValueError("n_terms and n_digits must be positive")
    taken = list(itertools.islice(terms, n_terms))
    if len(taken) < n_terms:
        raise ValueError(f"sequence yielded only {len(taken)} of {n_terms} terms")
    previous = 0
    for a in taken:
        if a <= previous:
            raise ValueError(f"terms must be strictly increasing positive, got {taken}")
        previous = a
    top = taken[-1]
    numerator = sum(a * base ** (top - a) for a in taken)
    partial_sum = Fraction(numerator, base ** top)

    frac = partial_sum - rat_floor(partial_sum)
    digits = []
    for _ in range(n_digits):
        frac *= base
        d = rat_floor(frac)
        digits.append(d)
        frac -= d
    sep = "" if base <= 10 else ","
    return sep.join(str(d) for d in digits), partial_sum
