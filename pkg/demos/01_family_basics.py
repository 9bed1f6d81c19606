"""Tour of the set-family container: building, measuring, closing.

Run:  python3 demos/01_family_basics.py
"""

from fractions import Fraction

import ucc

# A family is a sorted tuple of bitmasks over a universe of n elements.
# Element i is bit i-1, so {1,3} on n=4 is the mask 0b0101.
fam = ucc.SetFamily.from_sets(4, [{1}, {1, 2}, {1, 3}, {1, 2, 3}])
print("family:")
print(ucc.format_family(fam))

print("union closed?", ucc.is_union_closed(fam))

# closure_fraction counts ordered pairs (A, B) with A | B back in the
# family; 1.0 means union closed, anything less measures the defect.
print("ordered closure fraction:", ucc.closure_fraction(fam))

# Drop a union and watch the fraction dip.
broken = ucc.SetFamily.from_sets(4, [{1}, {2}, {1, 3}])
print("\nbroken family ordered fraction:", ucc.closure_fraction(broken))
print("unordered variant:", ucc.closure_fraction_unordered(broken))

# union_closure completes any family to the smallest union-closed one
# containing it.
closed = ucc.union_closure(broken)
print("closure has", closed.size, "sets:")
print(ucc.format_family(closed))

# Element frequencies: how often each ground element appears.  The
# conjecture behind this library says some element reaches 1/2 in any
# finite union-closed family; the theorem we check certifies the
# weaker constant psi everywhere.
prof = ucc.element_frequencies(closed)
print("frequencies:", [str(f) for f in prof.freq])
print("max:", prof.max_freq, "at element", prof.argmax + 1)
assert prof.max_freq >= Fraction(1, 2)

rep = ucc.check_theorem(closed)
print("\ntheorem threshold psi =", ucc.PSI)
print("applicable:", rep.applicable, "satisfied:", rep.satisfied)
