#!/usr/bin/env python3
"""Digit expansions of sum(a * ell^-a) over classified integer sequences.

Feeding the square-free or square-full integers a_1 < a_2 < ... into the
series sum(a_n * ell^(-a_n)) and reading off base-ell digits of the exact
partial sum is a quick way to eyeball digit patterns.  Everything is
computed as one exact rational; digits come from repeated multiply-by-ell.
"""

import itertools

from floorfull import r_free_integers, r_full_integers, series_digits

print("square-free integers, base 2, 20 terms:")
terms = list(itertools.islice(r_free_integers(2), 20))
print("   a_n:", terms)
digits, partial = series_digits(iter(terms), 2, 20, 60)
print("   partial sum:", partial)
print("   binary digits:", digits)
print()

print("square-full integers, base 2, 12 terms:")
terms = list(itertools.islice(r_full_integers(2), 12))
print("   a_n:", terms)
digits, partial = series_digits(iter(terms), 2, 12, 60)
print("   binary digits:", digits)
print()

print("cube-free integers, base 3, 15 terms:")
digits, partial = series_digits(r_free_integers(3), 3, 15, 40)
print("   ternary digits:", digits)
print()

print("a sum that collapses to an integer: terms (1, 2) in base 2 give 1/2 + 2/4 = 1")
digits, partial = series_digits([1, 2], 2, 2, 8)
print(f"   partial sum = {partial}, fractional digits = {digits}")
