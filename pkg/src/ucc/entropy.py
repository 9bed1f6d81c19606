"""Entropy checks for the union of two independent uniform draws.

Let A and B be independent uniform draws from a family F.  The distribution
of A | B (bitwise union) is computed exactly: counts over all |F|^2 ordered
pairs, probabilities as Fractions.  On top of it sit four checks, each
returning a small report rather than a bare bool so that callers and the
CLI can show their work:

*   ``chain_rule_check``: the coordinate chain rule reproduces H(A|B)
    exactly, and conditioning each union bit on both full prefixes instead
    of its own can only lower the sum (a data-processing step).
*   ``check_lower_bound``: H(A|B) >= p/(2 phi) (H(A) + H(B)) with
    p = min_i Pr[element i missing from a draw] = 1 - max frequency.
*   ``check_upper_bound``: H(A|B) <= 2 eps log2(1/eps) + (1 + 2 eps) log2|F|
    where eps is the ordered-pair closure deficit; proved through the
    member-indicator decomposition, which is also verified as an exact
    identity here.  Inapplicable (reported, not failed) once eps >= 1/2.
*   ``check_theorem``: some element frequency reaches psi - delta with
    delta = 2 eps (1 + log(1/eps) / log|F|); vacuous when psi - delta <= 0.

Entropies are floats in bits (compensated summation over exact integer
counts); every report carries the tolerance it was judged against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .analytic.scalars import HALF_INV_PHI, PSI, binary_entropy
from .setfamily import CapExceededError, SetFamily, closure_fraction, element_frequencies

__all__ = [
    "DEFAULT_PAIR_CAP",
    "DEFAULT_TOL",
    "UnionDistribution",
    "BoundReport",
    "TheoremReport",
    "union_distribution",
    "shannon_entropy",
    "chain_rule_check",
    "check_lower_bound",
    "check_upper_bound",
    "check_theorem",
]

#: Largest family size for which |F|^2 pair enumeration is attempted.
DEFAULT_PAIR_CAP = 4096
DEFAULT_TOL = 1e-9

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class UnionDistribution:
    """Exact distribution of A | B for A, B independent uniform on F."""

    universe_size: int
    counts: dict[int, int]
    pair_count: int

    @property
    def probs(self) -> dict[int, Fraction]:
        return {m: Fraction(c, self.pair_count) for m, c in sorted(self.counts.items())}

    @property
    def support_size(self) -> int:
        return len(self.counts)


@dataclass(frozen=True)
class BoundReport:
    """One verified inequality: lhs <= rhs or lhs >= rhs, as named.

    ``margin_bits`` is oriented so that nonnegative means satisfied;
    ``satisfied`` allows the stated tolerance.  ``inputs`` carries the
    named scalars the bound was assembled from.  ``applicable`` is false
    when the hypothesis of the bound fails (never counted as a violation).
    """

    check: str
    lhs_bits: float
    rhs_bits: float
    margin_bits: float
    satisfied: bool
    applicable: bool
    tolerance: float
    inputs: dict[str, float] = field(default_factory=dict)


@dataclass(frozen=True)
class TheoremReport:
    """Frequency bound max_freq >= psi - delta for one family."""

    family_size: int
    epsilon: Fraction
    delta: float
    psi_minus_delta: float
    max_freq: Fraction
    applicable: bool
    satisfied: bool
    tolerance: float


def _check_pair_cap(family: SetFamily, cap: int) -> None:
    if family.size > cap:
        raise CapExceededError(
            f"family size {family.size} exceeds pair-enumeration cap {cap}")


def _pair_union_counts(family: SetFamily) -> dict[int, int]:
    counts: dict[int, int] = {}
    sets = family.sets
    for i, a in enumerate(sets):
        counts[a] = counts.get(a, 0) + 1  # diagonal pair (A, A)
        for b in sets[i + 1:]:
            u = a | b
            counts[u] = counts.get(u, 0) + 2  # (A, B) and (B, A)
    return counts


def union_distribution(family: SetFamily, cap: int = DEFAULT_PAIR_CAP) -> UnionDistribution:
    """Exact union distribution; requires 1 <= |F| <= cap."""
    if family.size == 0:
        raise ValueError("union_distribution requires a nonempty family")
    _check_pair_cap(family, cap)
    return UnionDistribution(
        universe_size=family.universe_size,
        counts=_pair_union_counts(family),
        pair_count=family.size ** 2,
    )


def _entropy_from_counts(counts: Iterable[int], total: int) -> float:
    # H = log2(T) - (1/T) sum c log2 c, exact integer counts throughout
    acc = math.fsum(c * math.log2(c) for c in counts if c > 0)
    return math.log2(total) - acc / total


def shannon_entropy(dist) -> float:
    """Shannon entropy in bits of a distribution.

    Accepts a :class:`UnionDistribution`, a mapping from outcomes to
    probabilities, or a bare iterable of probabilities (Fractions or
    floats).  Probabilities must be nonnegative and sum to 1 (exactly for
    Fractions, within 1e-9 for floats).
    """
    if isinstance(dist, UnionDistribution):
        return _entropy_from_counts(dist.counts.values(), dist.pair_count)
    if isinstance(dist, Mapping):
        values = list(dist.values())
    else:
        values = list(dist)
    if not values:
        raise ValueError("empty distribution")
    exact = all(isinstance(v, (Fraction, int)) for v in values)
    for v in values:
        if v < 0:
            raise ValueError(f"negative probability {v}")
    total = sum(values) if exact else math.fsum(values)
    if exact:
        if total != 1:
            raise ValueError(f"probabilities sum to {total}, not 1")
    elif abs(total - 1.0) > 1e-9:
        raise ValueError(f"probabilities sum to {total}, not 1")
    return -math.fsum(p * math.log2(p) for p in map(float, values) if p > 0.0)


def _prefix_mask(i: int) -> int:
    return (1 << i) - 1


def _h_of_counts(part: int, whole: int) -> float:
    """Binary entropy of a part/whole split given by integer counts."""
    if part == 0 or part == whole:
        return 0.0
    return binary_entropy(part / whole)


def chain_rule_check(family: SetFamily, cap: int = DEFAULT_PAIR_CAP,
                     tol: float = DEFAULT_TOL) -> BoundReport:
    """Chain-rule identity and the data-processing step for the union draw.

    Write U = A | B for an ordered pair drawn uniformly from the family.
    lhs is H(U).  The chain sum sum_i H(U_i | U restricted below i) must
    equal lhs up to rounding; its residue is ``identity_margin_bits``.
    rhs conditions each coordinate on both source prefixes instead,
    sum_i H(U_i | A below i, B below i), which is never larger, so
    ``margin_bits`` = lhs - rhs >= 0 up to the tolerance.
    """
    if family.size == 0:
        raise ValueError("chain_rule_check requires a nonempty family")
    _check_pair_cap(family, cap)
    n = family.universe_size
    total = family.size ** 2
    union_counts = _pair_union_counts(family)

    chain_sum = 0.0
    for i in range(n):
        pmask = _prefix_mask(i)
        groups: dict[int, list[int]] = {}
        for mask, c in union_counts.items():
            cell = groups.setdefault(mask & pmask, [0, 0])
            cell[mask >> i & 1] += c
        chain_sum += math.fsum(
            (c0 + c1) / total * _h_of_counts(c1, c0 + c1)
            for c0, c1 in groups.values())

    lhs = _entropy_from_counts(union_counts.values(), total)
    identity_margin = chain_sum - lhs

    dp_sum = 0.0
    for i in range(n):
        pmask = _prefix_mask(i)
        prefix_groups: dict[int, list[int]] = {}
        for mask in family.sets:
            cell = prefix_groups.setdefault(mask & pmask, [0, 0])
            cell[0] += 1
            if not mask >> i & 1:
                cell[1] += 1  # members avoiding element i+1
        cells = list(prefix_groups.values())
        terms = []
        for na, za in cells:
            for nb, zb in cells:
                w = na * nb
                terms.append(w / total * _h_of_counts(za * zb, w))
        dp_sum += math.fsum(terms)

    margin = lhs - dp_sum
    satisfied = margin >= -tol and abs(identity_margin) <= tol
    return BoundReport(
        check="chain_rule",
        lhs_bits=lhs,
        rhs_bits=dp_sum,
        margin_bits=margin,
        satisfied=satisfied,
        applicable=True,
        tolerance=tol,
        inputs={
            "chain_sum_bits": chain_sum,
            "identity_margin_bits": identity_margin,
            "family_size": float(family.size),
            "universe_size": float(n),
        },
    )


def check_lower_bound(family: SetFamily, cap: int = DEFAULT_PAIR_CAP,
                      tol: float = DEFAULT_TOL) -> BoundReport:
    """H(A union B) >= p/(2 phi) (H(A) + H(B)) for iid uniform draws.

    p is the smallest marginal absence probability over elements, 1 minus
    the maximum element frequency.
    """
    if family.size == 0:
        raise ValueError("check_lower_bound requires a nonempty family")
    _check_pair_cap(family, cap)
    dist = union_distribution(family, cap)
    lhs = shannon_entropy(dist)
    p = element_frequencies(family).p_min_zero
    h_draw = math.log2(family.size)
    rhs = float(p) * HALF_INV_PHI * (h_draw + h_draw)
    margin = lhs - rhs
    return BoundReport(
        check="pairwise_union_lower",
        lhs_bits=lhs,
        rhs_bits=rhs,
        margin_bits=margin,
        satisfied=margin >= -tol,
        applicable=True,
        tolerance=tol,
        inputs={
            "p_min_zero": float(p),
            "half_inv_phi": HALF_INV_PHI,
            "family_size": float(family.size),
            "entropy_per_draw_bits": h_draw,
        },
    )


def check_upper_bound(family: SetFamily, cap: int = DEFAULT_PAIR_CAP,
                      tol: float = DEFAULT_TOL) -> BoundReport:
    """H(A|B) <= 2 eps log2(1/eps) + (1 + 2 eps) log2 |F| for eps < 1/2.

    Also verifies, as an exact identity, the decomposition of H(A|B)
    through the indicator I = [A|B is a member]:
    H(A|B) = H(I) + Pr[I=1] H(A|B given I=1) + Pr[I=0] H(A|B given I=0),
    and that the decomposition stays below rhs term by term.  For
    eps >= 1/2 the report is inapplicable and never counts as a failure.
    """
    if family.size == 0:
        raise ValueError("check_upper_bound requires a nonempty family")
    _check_pair_cap(family, cap)
    members = family.member_set()
    total = family.size ** 2
    union_counts = _pair_union_counts(family)
    lhs = _entropy_from_counts(union_counts.values(), total)

    in_counts = [c for m, c in union_counts.items() if m in members]
    out_counts = [c for m, c in union_counts.items() if m not in members]
    in_total = sum(in_counts)
    out_total = total - in_total
    eps = Fraction(out_total, total)  # = 1 - closure_fraction, exactly
    eps_f = float(eps)

    h_ind = binary_entropy(eps_f)
    decomposition = h_ind
    if in_total:
        decomposition += (in_total / total) * _entropy_from_counts(in_counts, in_total)
    if out_total:
        decomposition += (out_total / total) * _entropy_from_counts(out_counts, out_total)

    log_size = math.log2(family.size)
    surprise = -math.log2(eps_f) if eps_f > 0.0 else 0.0
    rhs = 2.0 * eps_f * surprise + (1.0 + 2.0 * eps_f) * log_size

    applicable = eps < _HALF
    margin = rhs - lhs
    identity_ok = abs(decomposition - lhs) <= tol
    if applicable:
        satisfied = identity_ok and margin >= -tol and rhs - decomposition >= -tol
    else:
        satisfied = True
    return BoundReport(
        check="union_upper",
        lhs_bits=lhs,
        rhs_bits=rhs,
        margin_bits=margin,
        satisfied=satisfied,
        applicable=applicable,
        tolerance=tol,
        inputs={
            "epsilon": eps_f,
            "h_epsilon_bits": h_ind,
            "decomposition_bits": decomposition,
            "family_size": float(family.size),
            "log2_family_size": log_size,
        },
    )


def check_theorem(family: SetFamily, tol: float = DEFAULT_TOL) -> TheoremReport:
    """Frequency bound: some element appears in a psi - delta share of F.

    delta = 2 eps (1 + log(1/eps) / log |F|) with eps the ordered-pair
    closure deficit (delta = 0 when eps = 0, i.e. union-closed input).
    Needs |F| >= 2.  Inapplicable when eps >= 1/2 or when psi - delta <= 0
    (vacuously true either way; satisfied is reported as true).
    """
    if family.size < 2:
        raise ValueError("check_theorem requires a family of size >= 2")
    eps = 1 - closure_fraction(family)
    prof = element_frequencies(family)
    if eps == 0:
        delta = 0.0
    else:
        eps_f = float(eps)
        delta = 2.0 * eps_f * (1.0 + (-math.log2(eps_f)) / math.log2(family.size))
    bound = PSI - delta
    applicable = eps < _HALF and bound > 0.0
    satisfied = (not applicable) or float(prof.max_freq) >= bound - tol
    return TheoremReport(
        family_size=family.size,
        epsilon=eps,
        delta=delta,
        psi_minus_delta=bound,
        max_freq=prof.max_freq,
        applicable=applicable,
        satisfied=satisfied,
        tolerance=tol,
    )
