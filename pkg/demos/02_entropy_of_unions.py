"""Entropy of the union of two independent uniform draws.

Draw A and B independently and uniformly from a family F and look at
U = A | B.  Three facts get checked numerically here:

  * the chain rule bounds H(U) by H(A) + H(B),
  * H(U) >= p/(2 phi) (H(A) + H(B)) with p the smallest marginal
    absence probability (this holds for any family at all),
  * when F is nearly union closed, H(U) <= log2 |F| plus a defect
    term, which pinches the maximum frequency away from zero.

Run:  python3 demos/02_entropy_of_unions.py
"""

import math

import ucc

fam = ucc.SetFamily.from_masks(3, range(8))  # the full powerset of [3]
dist = ucc.union_distribution(fam)
print("union supports", len(dist.counts), "masks over",
      dist.pair_count, "ordered pairs")

h_union = ucc.shannon_entropy(dist)
print("H(U) =", h_union, "bits")
# Each bit of U is independently present with probability 3/4 here,
# so H(U) is exactly 3 h(1/4).
print("3 h(1/4) =", 3 * ucc.binary_entropy(0.25))

chain = ucc.chain_rule_check(fam)
print("\nchain rule: H(U) <= H(A) + H(B)")
print("  lhs", chain.lhs_bits, "rhs", chain.rhs_bits,
      "margin", chain.margin_bits)

lower = ucc.check_lower_bound(fam)
print("lower bound: H(U) >= p/(2 phi) (H(A) + H(B))")
print("  p =", lower.inputs["p_min_zero"], " margin", lower.margin_bits)

upper = ucc.check_upper_bound(fam)
print("upper bound (needs closure defect < 1/2):")
print("  applicable", upper.applicable, " margin", upper.margin_bits)

# The same machinery on a family that is far from union closed: the
# upper bound steps aside instead of failing.
loose = ucc.SetFamily.from_sets(2, [{1}, {2}])
print("\nclosure fraction of {{1}, {2}}:", ucc.closure_fraction(loose))
upper = ucc.check_upper_bound(loose)
print("upper bound applicable:", upper.applicable,
      "(defect", upper.inputs["epsilon"], "reaches 1/2)")

# A defect below 1/2 can still drive the certified threshold negative,
# in which case the theorem holds vacuously.
vacuous = ucc.SetFamily.from_sets(3, [set(), {1}, {2}])
rep = ucc.check_theorem(vacuous)
print("vacuous case: applicable", rep.applicable,
      "satisfied", rep.satisfied)
print("  bound psi - delta =", rep.psi_minus_delta,
      " max freq =", float(rep.max_freq))
assert rep.satisfied

# Sanity: entropy is measured in bits, so the powerset union entropy
# can never exceed the universe size.
assert h_union <= 3 + 1e-12
assert math.isclose(h_union, 3 * ucc.binary_entropy(0.25), rel_tol=1e-12)
