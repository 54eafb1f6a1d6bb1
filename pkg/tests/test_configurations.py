"""Torus distances, triple classification and counting, and cycle probes."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smallworld.configurations import (
    ConfigClass,
    canonical_triple,
    classify_triple,
    closed_form_counts,
    enumerate_counts,
    estimate_triple_probability,
    scaling_exponent,
    torus_distance,
)
from smallworld.errors import InvalidParamsError, SizeLimitError, ZeroHitsError
from smallworld.graph import Params


# ---------------------------------------------------------------- distance


@pytest.mark.parametrize(
    "i,j,n,d",
    [(1, 7, 8, 2), (5, 5, 12, 0), (3, 9, 12, 6), (1, 2, 100, 1), (1, 100, 100, 1)],
)
def test_torus_distance_examples(i, j, n, d):
    assert torus_distance(i, j, n) == d


def test_torus_distance_range_check():
    with pytest.raises(InvalidParamsError):
        torus_distance(0, 3, 10)
    with pytest.raises(InvalidParamsError):
        torus_distance(1, 11, 10)


@given(
    n=st.integers(min_value=3, max_value=500),
    i=st.integers(min_value=1, max_value=500),
    j=st.integers(min_value=1, max_value=500),
)
def test_torus_distance_is_a_metric_on_the_cycle(n, i, j):
    i = (i - 1) % n + 1
    j = (j - 1) % n + 1
    d = torus_distance(i, j, n)
    assert 0 <= d <= n // 2
    assert d == torus_distance(j, i, n)
    assert (d == 0) == (i == j)
    # Rotation invariance.
    shift = 3 % n
    assert d == torus_distance((i + shift - 1) % n + 1, (j + shift - 1) % n + 1, n)


# ---------------------------------------------------------------- classify


def test_classify_examples():
    assert classify_triple(1, 2, 3, 20, 4) is ConfigClass.ALL_CLOSE
    assert classify_triple(1, 2, 4, 20, 4) is ConfigClass.ONE_FAR
    assert classify_triple(1, 2, 12, 20, 4) is ConfigClass.TWO_FAR
    assert classify_triple(1, 8, 15, 20, 4) is ConfigClass.ALL_FAR
    with pytest.raises(InvalidParamsError):
        classify_triple(1, 1, 3, 20, 4)


def test_classify_is_order_invariant():
    for perm in itertools.permutations((1, 2, 12)):
        assert classify_triple(*perm, 20, 4) is ConfigClass.TWO_FAR


# ---------------------------------------------------------------- counting


def brute_force_counts(n, k):
    half = k // 2
    tally = {cls: 0 for cls in ConfigClass}
    for triple in itertools.permutations(range(1, n + 1), 3):
        far = sum(
            torus_distance(a, b, n) > half
            for a, b in ((triple[0], triple[1]), (triple[1], triple[2]), (triple[2], triple[0]))
        )
        tally[list(ConfigClass)[far]] += 1
    return tally


@pytest.mark.parametrize("n,k", [(8, 2), (10, 4), (12, 4), (14, 6)])
def test_enumeration_matches_brute_force(n, k):
    counts = enumerate_counts(n, k)
    oracle = brute_force_counts(n, k)
    assert counts.all_close == oracle[ConfigClass.ALL_CLOSE]
    assert counts.one_far == oracle[ConfigClass.ONE_FAR]
    assert counts.two_far == oracle[ConfigClass.TWO_FAR]
    assert counts.all_far == oracle[ConfigClass.ALL_FAR]
    assert counts.total == n * (n - 1) * (n - 2)


FROZEN_COUNTS = {
    (20, 4): (120, 360, 3240, 3120),
    (30, 4): (180, 540, 8460, 15180),
    (30, 6): (540, 1080, 11340, 11400),
    (50, 6): (900, 1800, 36900, 78000),
}


@pytest.mark.parametrize("n,k", sorted(FROZEN_COUNTS))
def test_enumeration_frozen_values(n, k):
    counts = enumerate_counts(n, k)
    assert (counts.all_close, counts.one_far, counts.two_far, counts.all_far) == FROZEN_COUNTS[
        (n, k)
    ]


def test_enumeration_guards():
    with pytest.raises(SizeLimitError):
        enumerate_counts(601, 4)
    with pytest.raises(InvalidParamsError):
        enumerate_counts(5, 4)


def test_closed_forms_frozen_values():
    forms = closed_form_counts(20, 4)
    assert (forms.c1, forms.c2, forms.c3, forms.c4_bound) == (120, 120, 1080, 3000)
    assert forms.in_regime
    assert not closed_form_counts(12, 4).in_regime


@pytest.mark.parametrize("n,k", sorted(FROZEN_COUNTS))
def test_counts_track_closed_forms(n, k):
    counts = enumerate_counts(n, k)
    forms = closed_form_counts(n, k)
    assert counts.all_close == forms.c1
    # One-far and two-far exceed the base-pattern forms by a bounded factor.
    assert forms.c2 <= counts.one_far <= 6 * forms.c2
    assert forms.c3 <= counts.two_far <= 6 * forms.c3


# ---------------------------------------------------------------- canonical


@pytest.mark.parametrize("cls", list(ConfigClass))
def test_canonical_triples_classify_correctly(cls):
    for n, k in [(30, 4), (60, 6), (100, 4)]:
        triple = canonical_triple(cls, n, k)
        assert classify_triple(*triple, n, k) is cls


def test_no_all_close_triple_for_k2():
    with pytest.raises(InvalidParamsError):
        canonical_triple(ConfigClass.ALL_CLOSE, 30, 2)


# ---------------------------------------------------------------- probes


def test_all_close_probe_is_exact_at_p_extremes():
    triple = canonical_triple(ConfigClass.ALL_CLOSE, 40, 4)
    certain = estimate_triple_probability(Params(n=40, k=4, p=0.0, seed=0), triple, 200)
    assert certain.point == 1.0 and certain.stderr == 0.0
    never = estimate_triple_probability(Params(n=40, k=4, p=1.0, seed=0), triple, 200)
    assert never.point == 0.0


def test_far_triples_impossible_without_rewiring():
    triple = canonical_triple(ConfigClass.ALL_FAR, 40, 4)
    est = estimate_triple_probability(Params(n=40, k=4, p=0.0, seed=0), triple, 200)
    assert est.point == 0.0


def test_probe_validation():
    params = Params(n=40, k=4, p=0.5, seed=0)
    with pytest.raises(InvalidParamsError):
        estimate_triple_probability(params, (1, 1, 3), 200)
    with pytest.raises(InvalidParamsError):
        estimate_triple_probability(params, (1, 2, 41), 200)
    with pytest.raises(InvalidParamsError):
        estimate_triple_probability(params, (1, 2, 3), 99)


def test_probe_is_deterministic():
    params = Params(n=60, k=4, p=0.5, seed=9)
    a = estimate_triple_probability(params, (1, 2, 3), 300)
    b = estimate_triple_probability(params, (1, 2, 3), 300)
    assert a == b


def test_scaling_exponent_validation():
    with pytest.raises(InvalidParamsError):
        scaling_exponent(4, 0.5, ConfigClass.ALL_CLOSE, (20, 40, 80), 200, 0)
    with pytest.raises(InvalidParamsError):
        scaling_exponent(4, 0.5, ConfigClass.ONE_FAR, (20, 40), 200, 0)
    with pytest.raises(InvalidParamsError):
        scaling_exponent(4, 0.5, ConfigClass.ONE_FAR, (80, 40, 20), 200, 0)
    with pytest.raises(InvalidParamsError):
        scaling_exponent(4, 0.5, ConfigClass.ONE_FAR, (10, 40, 80), 200, 0)


def test_scaling_exponent_zero_hits():
    # With p=0 no far edge can ever appear, so every probe records 0 hits.
    with pytest.raises(ZeroHitsError):
        scaling_exponent(4, 0.0, ConfigClass.ONE_FAR, (20, 40, 80), 200, 0)


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32))
def test_probe_point_is_a_probability(seed):
    params = Params(n=50, k=4, p=0.5, seed=seed)
    est = estimate_triple_probability(params, (1, 2, 3), 100)
    assert 0.0 <= est.point <= 1.0
    assert est.trials == 100 and est.triple == (1, 2, 3)
