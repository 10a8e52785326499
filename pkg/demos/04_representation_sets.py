#!/usr/bin/env python3
"""Representation sets via the shifted-OR bitset trick.

The set of sums of distinct term occurrences lives in a single big
integer: bit i says whether i is representable.  Each occurrence a folds
in with one shift and one OR, so even multisets with thousands of
occurrences stay cheap.
"""

from floorfull import brown_criterion, complete_up_to, compute_pset

print("binary weights {1, 2, 4, 8} cover everything up to 15:")
print("  ", compute_pset([1, 2, 4, 8], 15).members())
print()

print("the multiset {2, 2} is not the set {2}: occurrences count separately:")
print("   {2, 3} ->", compute_pset([2, 3], 10).members())
print("   {2, 2} ->", compute_pset([2, 2], 10).members())
print()

print("coverage thresholds (smallest T with [T, bound] fully representable):")
for terms, bound in ([(1, 2, 4, 8, 16), 31], [(2, 3), 10], [(1, 5, 6, 7), 19]):
    print(f"   {list(terms)} up to {bound}: {complete_up_to(list(terms), bound)}")
print()

fib = [1, 2, 3, 5, 8, 13, 21, 34]
print(f"greedy growth test on {fib}:")
print(f"   each term at most 1 + sum of predecessors: {brown_criterion(fib)}")
total = sum(fib)
covered = compute_pset(fib, total).members() == list(range(total + 1))
print(f"   and indeed all of [0, {total}] is representable: {covered}")
print()

powers = [1, 2, 4, 8, 32]
print(f"breaking the growth condition, {powers}:")
print(f"   criterion: {brown_criterion(powers)}")
gaps = sorted(set(range(sum(powers) + 1)) - set(compute_pset(powers, sum(powers)).members()))
print(f"   unreachable values: {gaps}")
