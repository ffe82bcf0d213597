"""Counting coevents with the brute-force oracle.

A coevent over n histories is any map from the 2^n events to Z2 fixing
the empty event to 0, so there are 2^(2^n - 1) of them... almost: the
polynomial picture allows a constant term too, giving 2^(2^n) maps in
total.  The oracle enumerates them all (n <= 4) and classifies each by
the definitional pairwise checks, which is exactly what the fast
structural predicates must reproduce.
"""

from coevents import SampleSpace
from coevents import oracle

for n in (1, 2, 3, 4):
    space = SampleSpace('abcd'[:n])
    n_events = 1 << n
    total = mult = linear = unital = homs = 0
    for phi in oracle.enumerate_coevents(space):
        table = oracle.table_of(phi)
        total += 1
        if oracle.pairwise_multiplicative(table, n_events) and table:
            mult += 1
        if oracle.pairwise_linear(table, n_events):
            linear += 1
        if phi.is_unital():
            unital += 1
        if phi.is_homomorphism():
            homs += 1
    print(f'n={n}: {total:6} coevents | {mult:3} multiplicative (nonzero)'
          f' | {linear:3} linear | {unital:6} unital | {homs} homomorphisms')

print()
print('the nonzero multiplicative coevents are exactly the monomials F*')
print('(2^n of them, counting the constant 1), and the homomorphisms are')
print('the n classical coevents gamma* - one per history.')
