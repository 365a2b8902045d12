"""Joint-factor infinite product: exact truncations, tail certificates,
tolerance-mode stopping, and the assembled gamma quotient."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ballratio import gautschi as ga
from ballratio.errors import DomainError, NonConvergenceError
from ballratio.truncation import TruncationControl


def test_truncate_exact_rationals():
    x, a = Fraction(3, 2), Fraction(1, 2)
    assert ga.joint_factor_truncate(x, a, 0) == 1
    assert ga.joint_factor_truncate(x, a, 1) == Fraction(3, 2)
    assert ga.joint_factor_truncate(x, a, 2) == Fraction(5, 3)
    assert ga.joint_factor_truncate(1, a, 1) == Fraction(4, 3)
    assert ga.joint_factor_truncate(1, a, 2) == Fraction(64, 45)


def test_truncate_preserves_fraction_type():
    out = ga.joint_factor_truncate(Fraction(5, 2), Fraction(1, 2), 3)
    assert isinstance(out, Fraction)


def test_truncate_float_matches_exact():
    assert abs(ga.joint_factor_truncate(1.5, 0.5, 2) - 5 / 3) < 1e-14


def test_truncate_domain():
    with pytest.raises(DomainError):
        ga.joint_factor_truncate(0.0, 0.5, 1)
    with pytest.raises(DomainError):
        ga.joint_factor_truncate(2.0, 1.0, 1)
    with pytest.raises(DomainError):
        ga.joint_factor_truncate(0.25, -0.5, 1)  # x + a <= 0
    with pytest.raises(DomainError):
        ga.joint_factor_truncate(1.0, 0.5, -1)


@given(
    st.fractions(min_value=Fraction(3, 4), max_value=Fraction(40), max_denominator=64),
    st.integers(min_value=1, max_value=30),
)
def test_truncate_strictly_increasing_for_positive_c(x, m):
    # a(x+a-1) > 0 makes every factor exceed 1, so partials climb; the
    # comparison is exact rational arithmetic
    a = Fraction(1, 2)
    assert ga.joint_factor_truncate(x, a, m + 1) > ga.joint_factor_truncate(x, a, m)


@given(st.floats(min_value=0.75, max_value=10.0, allow_nan=False))
def test_half_shift_matches_gamma(x):
    want = math.gamma(x + 0.5) / math.gamma(x)
    got = ga.gautschi_ratio(x, 0.5, TruncationControl.tolerance(1e-5))
    assert abs(got - want) <= 2e-5 * want


@given(st.floats(min_value=0.6, max_value=6.0, allow_nan=False))
def test_half_shift_functional_equation(x):
    # the two half shifts compose to Gamma(x+1)/Gamma(x) = x
    ctrl = TruncationControl.tolerance(1e-5)
    prod = ga.gautschi_ratio(x, 0.5, ctrl) * ga.gautschi_ratio(x + 0.5, 0.5, ctrl)
    assert abs(prod - x) <= 4e-5 * x


def test_tolerance_stops_at_minimal_m():
    x, a, eps = 4.0, 0.5, 1e-4
    res = ga.joint_factor_result(x, a, TruncationControl.tolerance(eps))
    m = res.terms_used
    assert res.tail_bound == ga._tail_bound(x, a, m) < eps
    assert ga._tail_bound(x, a, m - 1) >= eps


def test_tail_bound_certifies_value():
    # f(x, a) = [Gamma(x+a)/Gamma(x)] * Gamma(1-a); the log shortfall of the
    # partial product must sit inside the reported tail bound
    want = math.gamma(5.25) / math.gamma(4.5) * math.gamma(0.25)
    res = ga.joint_factor_result(4.5, 0.75, TruncationControl.tolerance(1e-5))
    assert res.value <= want
    assert math.log(want) - math.log(res.value) <= res.tail_bound * (1 + 1e-9)


def test_fixed_mode_reports_tail():
    res = ga.joint_factor_result(2.0, 0.5, TruncationControl.fixed(1000))
    true_f = math.gamma(2.5) / math.gamma(2.0) * math.sqrt(math.pi)
    assert res.terms_used == 1000
    assert 0 < math.log(true_f) - math.log(res.value) <= res.tail_bound


def test_all_factors_one_when_c_vanishes():
    res = ga.joint_factor_result(0.5, 0.5)
    assert res.value == 1.0 and res.terms_used == 0 and res.tail_bound == 0.0
    assert ga.joint_factor(0.75, 0.25) == 1.0  # x + a = 1 again
    assert ga.joint_factor(3.0, 0) == 1.0      # a = 0 collapses every factor


def test_tolerance_rejects_factors_below_one():
    with pytest.raises(DomainError):
        ga.joint_factor(0.25, 0.5, TruncationControl.tolerance(1e-6))


def test_fixed_mode_allows_factors_below_one():
    got = ga.joint_factor(0.25, 0.5, TruncationControl.fixed(50_000))
    want = math.gamma(0.75) / math.gamma(0.25) * math.sqrt(math.pi)
    assert abs(got - want) / want < 1e-4


def test_budget_exhaustion_carries_partial():
    with pytest.raises(NonConvergenceError) as exc:
        ga.joint_factor(2.0, 0.5, TruncationControl.tolerance(1e-10))
    err = exc.value
    assert err.terms == 10**8
    assert 0 < err.tail_bound < 1e-7
    true_f = math.gamma(2.5) / math.gamma(2.0) * math.sqrt(math.pi)
    assert 0 < true_f - err.partial < 2 * err.tail_bound * true_f


def test_ratio_half_shift_spot_values():
    ctrl = TruncationControl.tolerance(1e-6)
    cases = [
        (0.5, 0.56418958354775628695),
        (1.0, 0.88622692545275801365),
        (1.5, 1.1283791670955125739),
    ]
    for x, want in cases:
        got = ga.gautschi_ratio(x, 0.5, ctrl)
        assert abs(got - want) <= 2e-6 * want


def test_ratio_denominator_selection():
    # x = a = 1/2 makes the product trivial, so only the built-in
    # 1/Gamma(1/2) enters and the result is exact
    assert ga.gautschi_ratio(0.5, 0.5) == 1.0 / math.sqrt(math.pi)
    assert ga.gautschi_ratio(7.0, 0) == 1.0
    got = ga.gautschi_ratio(2.0, 0.25, TruncationControl.tolerance(1e-6),
                            gamma_one_minus_a=math.gamma(0.75))
    assert abs(got - 1.1330030963193463) < 3e-6
    with pytest.raises(DomainError):
        ga.gautschi_ratio(2.0, 0.25)
