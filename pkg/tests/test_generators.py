"""Slice examples, exhaustive enumeration, and fuzz family streams."""

import math
from fractions import Fraction

import pytest

import ucc
from ucc.generators import (
    DegenerateSpecError,
    _hyper_cdf,
    default_slice_level,
    default_threshold,
)
from ucc.rng import SplitMix64

# independent big-integer oracle values for the n=1000 default example
LOG2_F1_1000 = 993.7568655454946
LOG2_F2_1000 = 954.838661794462
RATIO_1000 = 1.925099998075646e-12
MAX_FREQ_1000 = 0.4820000000002667

# brute-force counts of union-closed families (empty-set members allowed)
ENUM_COUNTS = {1: 3, 2: 13, 3: 121, 4: 4959}


def test_default_spec_parameters():
    spec = ucc.ExampleSpec(n=1000)
    assert (spec.k, spec.m) == (482, 619)
    assert spec.k == default_slice_level(1000)
    assert spec.m == default_threshold(1000)
    spec = ucc.ExampleSpec(n=4000)
    assert (spec.k, spec.m) == (1780, 2473)
    spec = ucc.ExampleSpec(n=16000)
    assert (spec.k, spec.m) == (6746, 9889)


def test_default_spec_degenerate_at_small_n():
    # the slice level overtakes the threshold below a few hundred elements
    for n in (12, 20, 50):
        with pytest.raises(DegenerateSpecError):
            ucc.ExampleSpec(n=n)


def test_manual_spec_validation():
    with pytest.raises(DegenerateSpecError):
        ucc.ExampleSpec(n=10, k=5, m=5)  # k < m required
    with pytest.raises(DegenerateSpecError):
        ucc.ExampleSpec(n=10, k=0, m=5)
    with pytest.raises(DegenerateSpecError):
        ucc.ExampleSpec(n=10, k=3, m=11)
    with pytest.raises(ValueError):
        ucc.ExampleSpec(n=10, k=3, m=7, mode="hybrid")


def test_explicit_sizes_pinned():
    fam = ucc.slice_example(ucc.ExampleSpec(n=10, k=3, m=7, mode="explicit"))
    # C(10,3) + C(10,7)+C(10,8)+C(10,9)+C(10,10) = 120 + 176
    assert fam.size == 296
    sizes = {m.bit_count() for m in fam.sets}
    assert sizes == {3, 7, 8, 9, 10}


def test_explicit_requires_materializable_spec():
    with pytest.raises(ucc.CapExceededError):
        ucc.slice_example(ucc.ExampleSpec(n=40, k=20, m=30, mode="explicit"))
    with pytest.raises(ucc.CapExceededError, match="implicit"):
        ucc.slice_example(ucc.ExampleSpec(n=80, k=20, m=60, mode="explicit"))


def test_implicit_explicit_agree_exhaustively():
    spec_e = ucc.ExampleSpec(n=12, k=4, m=8, mode="explicit")
    spec_i = ucc.ExampleSpec(n=12, k=4, m=8)
    fam = ucc.slice_example(spec_e)
    handle = ucc.slice_example(spec_i)
    assert isinstance(handle, ucc.ImplicitSliceFamily)
    assert handle.size == fam.size
    members = set(fam.sets)
    for mask in range(1 << 12):
        assert (mask in handle) == (mask in members)


def test_implicit_explicit_agree_spot_n16():
    fam = ucc.slice_example(ucc.ExampleSpec(n=16, k=5, m=10, mode="explicit"))
    handle = ucc.ImplicitSliceFamily(ucc.ExampleSpec(n=16, k=5, m=10))
    assert handle.size == fam.size
    members = set(fam.sets)
    rng = SplitMix64(2024)
    for _ in range(5000):
        mask = rng.getrandbits(16)
        assert (mask in handle) == (mask in members)


def test_implicit_sampling_stays_inside_family():
    handle = ucc.ImplicitSliceFamily(ucc.ExampleSpec(n=30, k=9, m=20))
    rng = SplitMix64(77)
    for _ in range(300):
        mask = handle.sample(rng)
        assert mask in handle
        assert mask.bit_count() == 9 or mask.bit_count() >= 20


def test_slice_max_frequency_small_exact():
    # n=4, k=1, m=3: 4 singletons + 5 large sets, every element in 5 of 9
    frac = ucc.slice_max_frequency(ucc.ExampleSpec(n=4, k=1, m=3))
    assert frac == Fraction(5, 9)
    fam = ucc.slice_example(ucc.ExampleSpec(n=4, k=1, m=3, mode="explicit"))
    prof = ucc.element_frequencies(fam)
    assert prof.max_freq == frac


def test_slice_max_frequency_n1000():
    assert float(ucc.slice_max_frequency(ucc.ExampleSpec(n=1000))) == pytest.approx(
        MAX_FREQ_1000, abs=1e-15)


def test_example_stats_n1000_oracles():
    stats = ucc.example_stats(ucc.ExampleSpec(n=1000), samples=20_000, seed=42)
    assert stats.log2_f1 == pytest.approx(LOG2_F1_1000, abs=1e-9)
    assert stats.log2_f2 == pytest.approx(LOG2_F2_1000, abs=1e-9)
    assert stats.size_ratio == pytest.approx(RATIO_1000, rel=1e-9)
    assert stats.max_freq_exact == pytest.approx(MAX_FREQ_1000, abs=1e-15)
    # F2 is 12 orders of magnitude lighter than F1: unions of two slice
    # sets land in the family essentially always
    assert stats.closure_fraction_estimate >= 0.995
    assert stats.samples == 20_000
    assert stats.seed == 42


def test_example_stats_deterministic():
    spec = ucc.ExampleSpec(n=100, k=30, m=75)
    a = ucc.example_stats(spec, samples=5000, seed=9)
    b = ucc.example_stats(spec, samples=5000, seed=9)
    assert a == b
    c = ucc.example_stats(spec, samples=5000, seed=10)
    assert c.closure_fraction_estimate != a.closure_fraction_estimate


def test_example_stats_halfwidth_scales_with_samples():
    spec = ucc.ExampleSpec(n=100, k=30, m=75)
    small = ucc.example_stats(spec, samples=20_000, seed=5)
    large = ucc.example_stats(spec, samples=80_000, seed=5)
    assert 0.0 < small.ci_halfwidth < 1.0
    ratio = large.ci_halfwidth / small.ci_halfwidth
    assert 0.42 <= ratio <= 0.58  # 1/sqrt(4) up to estimator noise


def test_example_stats_matches_literal_brute_force():
    # exact ordered-pair closure fraction of the materialized family
    spec = ucc.ExampleSpec(n=12, k=4, m=8)
    fam = ucc.slice_example(ucc.ExampleSpec(n=12, k=4, m=8, mode="explicit"))
    members = set(fam.sets)
    good = sum((a | b) in members for a in fam.sets for b in fam.sets)
    exact = good / fam.size ** 2
    stats = ucc.example_stats(spec, samples=40_000, seed=31)
    assert abs(stats.closure_fraction_estimate - exact) <= 5 * stats.ci_halfwidth


def test_hypergeometric_cdf_against_brute_force():
    n, a, b = 10, 4, 6
    lo, cdf = _hyper_cdf(n, a, b)
    # overlap t ranges over [max(0, a+b-n), min(a, b)]
    assert lo == max(0, a + b - n)
    total = math.comb(n, b)
    acc = Fraction(0)
    exact = []
    for t in range(lo, min(a, b) + 1):
        acc += Fraction(math.comb(a, t) * math.comb(n - a, b - t), total)
        exact.append(float(acc))
    assert len(cdf) == len(exact)
    for got, want in zip(cdf, exact):
        assert got == pytest.approx(want, abs=1e-15)
    assert cdf[-1] == 1.0


def test_enumerate_counts_pinned():
    for n, want in ENUM_COUNTS.items():
        got = sum(1 for _ in ucc.enumerate_union_closed(n))
        assert got == want, f"n={n}"


def test_enumerate_against_independent_oracle():
    # frozenset reimplementation, no bit tricks shared with the library
    for n in (1, 2, 3):
        subsets = []
        for mask in range(1 << n):
            subsets.append(frozenset(i + 1 for i in range(n) if mask >> i & 1))
        brute = 0
        for pick in range(1, 1 << len(subsets)):
            fam = [s for i, s in enumerate(subsets) if pick >> i & 1]
            if all(a | b in fam for a in fam for b in fam):
                brute += 1
        assert brute == ENUM_COUNTS[n]


def test_enumerate_yields_valid_families(enumerated):
    for n, fams in enumerated.items():
        assert len(set(fams)) == len(fams)  # no duplicates
        for fam in fams:
            assert fam.universe_size == n
            assert ucc.is_union_closed(fam)


def test_enumerate_exclude_empty_relation():
    # families containing the empty set are exactly {∅} plus any
    # union-closed family avoiding it, so N_all = 2 * N_no_empty + 1
    for n in (1, 2, 3):
        n_all = sum(1 for _ in ucc.enumerate_union_closed(n))
        n_no = sum(1 for _ in ucc.enumerate_union_closed(n, include_empty_set=False))
        assert n_all == 2 * n_no + 1
        for fam in ucc.enumerate_union_closed(n, include_empty_set=False):
            assert 0 not in fam.sets


def test_enumerate_half_frequency_oracle(enumerated):
    # the full conjecture is known at tiny n: some element in half the sets
    for fams in enumerated.values():
        for fam in fams:
            if all(m == 0 for m in fam.sets):
                continue
            prof = ucc.element_frequencies(fam)
            assert prof.max_freq >= Fraction(1, 2)


def test_enumerate_bounds_universe():
    with pytest.raises(ValueError):
        list(ucc.enumerate_union_closed(0))
    with pytest.raises(ValueError):
        list(ucc.enumerate_union_closed(5))


def test_random_families_deterministic_and_sized():
    a = list(ucc.random_families(6, 10, 25, seed=123, kind="uniform"))
    b = list(ucc.random_families(6, 10, 25, seed=123, kind="uniform"))
    assert a == b
    assert len(a) == 25
    assert all(f.size == 10 for f in a)
    assert all(f.universe_size == 6 for f in a)


def test_random_families_closure_kind_is_closed():
    fams = list(ucc.random_families(6, 8, 40, seed=5, kind="closure-of-random"))
    assert all(ucc.is_union_closed(f) for f in fams)
    assert all(f.size >= 8 for f in fams)


def test_random_families_noisy_kind_perturbs():
    fams = list(ucc.random_families(6, 8, 40, seed=5, kind="noisy-uc"))
    eps = [1 - ucc.closure_fraction(f) for f in fams]
    assert any(e > 0 for e in eps)   # the noise does something
    assert all(e < Fraction(1, 2) for e in eps)  # but families stay coherent


def test_random_families_validation():
    with pytest.raises(ValueError):
        list(ucc.random_families(70, 4, 1, seed=0, kind="uniform"))
    with pytest.raises(ValueError):
        list(ucc.random_families(3, 9, 1, seed=0, kind="uniform"))  # size > 2^n
    with pytest.raises(ValueError):
        list(ucc.random_families(4, 4, 1, seed=0, kind="bogus"))
    with pytest.raises(ValueError):
        list(ucc.random_families(4, 4, 1, seed=0, kind="noisy-uc", rho=1.5))


def test_seeds_shift_streams():
    a = list(ucc.random_families(5, 6, 10, seed=1, kind="uniform"))
    b = list(ucc.random_families(5, 6, 10, seed=2, kind="uniform"))
    assert a != b
