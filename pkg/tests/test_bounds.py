from fractions import Fraction

import mpmath
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from superlrc.bounds import (
    BoundInputs,
    BoundNotApplicable,
    bound_report,
    combined_bound,
    floor_scaled_power,
    hamming_length_bound,
    is_optimal,
    length_bound_delta2,
    length_bound_delta_gt2,
    optimal_length,
    reduction_distance_floor,
    singleton_bound,
)

from .oracles import delta2_bound_mp, gt2_bound_mp


def test_singleton_examples():
    assert singleton_bound(25, 13, 3, 3) == 5
    assert singleton_bound(15, 9, 2, 2) == 3
    assert singleton_bound(10, 4, 5, 2) == 7  # classical n - k + 1
    with pytest.raises(ValueError):
        singleton_bound(10, 0, 2, 2)


def test_is_optimal_examples():
    assert is_optimal(25, 13, 3, 3, 5)
    assert not is_optimal(25, 13, 3, 3, 4)
    assert is_optimal(8, 2, 1, 2, 6)
    assert optimal_length(13, 3, 3, 5) == 25


@given(st.integers(2, 60), st.integers(1, 8), st.integers(2, 5), st.integers(1, 30))
def test_singleton_strictly_decreasing_in_k(n, r, delta, k):
    assume(k + 1 <= n)
    assert singleton_bound(n, k + 1, r, delta) < singleton_bound(n, k, r, delta)


def test_delta2_bound_examples():
    rep = length_bound_delta2(13, 2, 5)
    assert rep.value == 274 == delta2_bound_mp(13, 2, 5)
    assert rep.detail["a"] == 1
    assert length_bound_delta2(29, 4, 5).value == 1088 == delta2_bound_mp(29, 4, 5)
    with pytest.raises(BoundNotApplicable):
        length_bound_delta2(13, 2, 4)


def test_delta2_bound_direct_arithmetic():
    # 4 * 3 / 96 * 13^3
    assert Fraction(4 * 3, 96) * 13**3 == Fraction(2197, 8)
    assert int(Fraction(2197, 8)) == 274


def near_integer(x) -> bool:
    with mpmath.workdps(60):
        return abs(x - mpmath.nint(x)) < mpmath.mpf(10) ** -40


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 29, 64]), st.integers(1, 8), st.integers(5, 16))
def test_delta2_bound_matches_mpmath(q, r, d):
    assert length_bound_delta2(q, r, d).value == delta2_bound_mp(q, r, d)


def test_delta2_bound_all_residues():
    for d in (5, 6, 7, 8):
        assert length_bound_delta2(7, 3, d).value == delta2_bound_mp(7, 3, d)
    assert length_bound_delta2(7, 3, 7).detail["a"] == 3


def test_gt2_bound_examples():
    rep = length_bound_delta_gt2(64, 4, 3, 7, 41)
    assert rep.value == 6241 == gt2_bound_mp(64, 4, 3, 2, 1, 1)
    assert rep.detail == {"t": 2, "v": 1, "w_minus_u": 1}
    assert hamming_length_bound(64, 4, 3, 2, 1, 1) == 6241
    with pytest.raises(BoundNotApplicable):
        length_bound_delta_gt2(64, 4, 3, 6, 41)  # t = 1
    odd = length_bound_delta_gt2(16, 4, 3, 10, 41)
    assert odd.detail["t"] == 3
    assert odd.value == 409 == gt2_bound_mp(16, 4, 3, 3, 1, 1)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9, 13, 16, 64]), st.integers(1, 6), st.integers(3, 5),
       st.integers(2, 30), st.integers(2, 60))
def test_gt2_bound_matches_mpmath(q, r, delta, d, k):
    t = (d - 1) // delta
    assume(2 * t + 1 > 4)
    v = k % r
    wu = (d - 1 + v) // (r + delta - 1)
    assume(2 * wu * r - 2 * v >= 0)
    assert length_bound_delta_gt2(q, r, delta, d, k).value == gt2_bound_mp(q, r, delta, t, v, wu)


def test_hypothesis_flags():
    assert length_bound_delta_gt2(64, 4, 3, 7, 41).hypotheses_hold
    rep = length_bound_delta_gt2(64, 4, 3, 7, 5)
    assert rep.flags["k_gt_r"] and not rep.flags["r_divides_k_or_u_ge_2(r+1-v)"]
    assert not length_bound_delta2(13, 2, 5, k=2).flags["k_gt_r"]


def test_combined_examples():
    rep = combined_bound(13, 4, 2, 10, 20)
    assert rep.detail["eps"] == 1 and rep.detail["d_reduced"] == 5
    assert rep.value == 5 + delta2_bound_mp(13, 4, 5) == 233
    rep = combined_bound(64, 4, 3, 13, 41)
    assert rep.value == 6 + 6241 == 6247
    with pytest.raises(BoundNotApplicable):
        combined_bound(13, 4, 2, 6, 20)


@given(st.integers(1, 6), st.integers(2, 4), st.integers(3, 40))
def test_combined_never_has_zero_eps(r, delta, d):
    assume(d > r + delta)
    eps = -(-(d - 1) // (r + delta - 1)) - 1
    assert eps >= 1


def test_reduction_floor_examples():
    assert reduction_distance_floor(5, 3) == 3
    assert reduction_distance_floor(4, 4) == 1
    assert reduction_distance_floor(9, 4) == 5


def test_floor_scaled_power_exact_integers():
    assert floor_scaled_power(Fraction(1), 4, 1, 2) == 2
    assert floor_scaled_power(Fraction(1, 3), 27, 2, 3) == 3
    assert floor_scaled_power(Fraction(1), 2, 1, 2) == 1
    assert floor_scaled_power(Fraction(3, 2), 2, 1, 2, Fraction(1, 2)) == 2  # 2.62
    with pytest.raises(ValueError):
        floor_scaled_power(Fraction(0), 2, 1, 1)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 50), st.integers(1, 50), st.integers(2, 100), st.integers(0, 12), st.integers(1, 6),
       st.integers(0, 20))
def test_floor_scaled_power_vs_mpmath(an, ad, q, num, den, b):
    with mpmath.workdps(80):
        x = mpmath.mpf(an) / ad * mpmath.power(q, mpmath.mpf(num) / den) + mpmath.mpf(b) / 7
        assume(not near_integer(x))
        expected = int(mpmath.floor(x))
    assert floor_scaled_power(Fraction(an, ad), q, num, den, Fraction(b, 7)) == expected


def test_bound_inputs_derived():
    b = BoundInputs(q=13, r=2, delta=2, k=9, d=5, n=15)
    assert (b.u, b.v, b.w, b.m, b.t, b.a, b.eps) == (4, 1, 5, 0, 2, 1, 1)
    assert BoundInputs(13, 2, 2, 9).t is None


def test_bound_report():
    rep = bound_report(BoundInputs(q=13, r=2, delta=2, k=9, d=5))
    names = {b["name"]: b["value"] for b in rep["bounds"]}
    assert names["length_bound_delta2"] == 274
    assert "combined_bound" in rep["skipped"]
    rep = bound_report(BoundInputs(q=64, r=4, delta=3, k=41, d=13, n=60))
    names = {b["name"]: b["value"] for b in rep["bounds"]}
    assert names["combined_bound"] == 6247
    assert names["singleton_bound"] == singleton_bound(60, 41, 4, 3)
