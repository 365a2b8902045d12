"""Exact unit-ball volumes, the two ratio sequences, and their product
evaluators."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ballratio import ballvol as bv
from ballratio.errors import BallRatioError, DomainError, NonConvergenceError
from ballratio.truncation import TruncationControl


def test_omega_spot_values():
    assert bv.omega_exact(0) == bv.ExactBallValue(Fraction(1), 0)
    assert bv.omega_exact(1) == bv.ExactBallValue(Fraction(2), 0)
    assert bv.omega_exact(2) == bv.ExactBallValue(Fraction(1), 1)
    assert bv.omega_exact(3) == bv.ExactBallValue(Fraction(4, 3), 1)
    assert bv.omega_exact(4) == bv.ExactBallValue(Fraction(1, 2), 2)
    assert abs(bv.omega_exact(3).to_real() - 4.1887902047863909846) < 1e-14


def test_omega_matches_gamma_formula():
    # independent cross-check: omega_n = pi^(n/2) / Gamma(1 + n/2)
    for n in range(0, 30):
        want = math.pi ** (n / 2) / math.gamma(1 + n / 2)
        assert abs(bv.omega_exact(n).to_real() - want) < 1e-13 * want


def test_to_real_handles_big_pi_powers():
    assert abs(bv.omega_exact(51).to_real() - 6.0433427554615918e-14) < 1e-27
    assert abs(bv.omega_exact(200).to_real() - 5.5588328420278266e-109) < 1e-121
    tiny = bv.ExactBallValue(Fraction(1), -40)
    assert abs(tiny.to_real() - math.pi ** -40.0) < 1e-32


def test_v_spot_values():
    assert bv.v_exact(1) == bv.ExactBallValue(Fraction(1, 2), 0)
    assert bv.v_exact(2) == bv.ExactBallValue(Fraction(2), -1)
    assert bv.v_exact(3) == bv.ExactBallValue(Fraction(3, 4), 0)
    assert bv.v_exact(4) == bv.ExactBallValue(Fraction(8, 3), -1)
    assert abs(bv.v_exact(2).to_real() - 0.63661977236758134308) < 1e-16
    assert abs(bv.v_exact(4).to_real() - 0.8488263631567751241) < 1e-15
    assert abs(bv.v_exact(100).to_real() - 3.999408671744203) < 1e-13
    assert abs(bv.v_exact(10_000).to_real() - 39.895225408309659) < 1e-12


def test_w_spot_values():
    assert bv.w_exact(1) == bv.ExactBallValue(Fraction(4), -1)
    assert bv.w_exact(2) == bv.ExactBallValue(Fraction(3, 8), 1)
    assert bv.w_exact(3) == bv.ExactBallValue(Fraction(32, 9), -1)
    assert abs(bv.w_exact(1).to_real() - 1.2732395447351626862) < 1e-15
    assert abs(bv.w_exact(3).to_real() - 1.1317684842090334988) < 1e-15
    assert abs(bv.w_exact(10_000).to_real() - 1.0000499962501875) < 1e-14


def test_dimension_domain():
    with pytest.raises(DomainError):
        bv.omega_exact(-1)
    for bad in (0, -3):
        with pytest.raises(DomainError):
            bv.v_exact(bad)
        with pytest.raises(DomainError):
            bv.w_exact(bad)


def test_w_is_v_quotient_exactly():
    for n in range(1, 501):
        w, vn, vn1 = bv.w_exact(n), bv.v_exact(n), bv.v_exact(n + 1)
        assert w.mantissa * vn.mantissa == vn1.mantissa
        assert w.pi_power + vn.pi_power == vn1.pi_power
        assert w.pi_power in (-1, 1)


def test_v_recurrence_exact():
    # v_n v_{n+1} = (n+1) / (2 pi)
    for n in range(1, 501):
        a, b = bv.v_exact(n), bv.v_exact(n + 1)
        assert a.mantissa * b.mantissa == Fraction(n + 1, 2)
        assert a.pi_power + b.pi_power == -1


def test_omega_quotients_define_v():
    for n in range(1, 80):
        prev, cur, v = bv.omega_exact(n - 1), bv.omega_exact(n), bv.v_exact(n)
        assert prev.mantissa / cur.mantissa == v.mantissa
        assert prev.pi_power - cur.pi_power == v.pi_power


def test_v_strictly_increasing():
    vals = [bv.v_exact(n).to_real() for n in range(1, 1001)]
    assert all(b > a for a, b in zip(vals, vals[1:]))


def test_compare_to_fraction_brackets():
    w1 = bv.w_exact(1)  # 4/pi = 1.27323...
    assert w1.compare_to_fraction(Fraction(14, 11)) == 1
    assert w1.compare_to_fraction(Fraction(13, 10)) == -1
    assert bv.v_exact(1).compare_to_fraction(Fraction(1, 2)) == 0
    assert bv.w_exact(2).compare_to_fraction(1) == 1
    assert bv.v_exact(2).compare_to_fraction(Fraction(2, 3)) == -1


def test_compare_raises_when_brackets_cannot_separate():
    # a rational chosen inside the 34-digit bracket around pi itself
    q = bv.PI_LO + Fraction(1, 2 * 10**34)
    with pytest.raises(BallRatioError):
        bv.ExactBallValue(Fraction(1), 1).compare_to_fraction(q)


def test_symbolic_rendering():
    assert bv.omega_exact(3).symbolic() == "4/3 * pi^1"
    assert bv.omega_exact(0).symbolic() == "1 * pi^0"
    assert bv.v_exact(2).symbolic() == "2 * pi^-1"


def test_v_product_fixed_one_term():
    got = bv.v_product(2, TruncationControl.fixed(1))
    assert abs(got - 0.47746482927568600731) < 1e-15  # 3 / (2 pi)


def test_v_product_tolerance_under_approximates():
    for n in (1, 2, 17):
        exact = bv.v_exact(n).to_real()
        got = bv.v_product(n, TruncationControl.tolerance(1e-6))
        shortfall = exact - got
        assert -1e-12 <= shortfall <= 1.1e-6 * exact


def test_w_product_fixed_values():
    assert abs(bv.w_product(2, TruncationControl.fixed(1)) - 16 / 15) < 1e-15
    got = bv.w_product(1000, TruncationControl.fixed(1))
    assert abs(got - 1.0000009960129601206) < 1e-14


def test_w_product_tolerance_hits_target():
    for n in (1, 2, 9):
        exact = bv.w_exact(n).to_real()
        got = bv.w_product(n, TruncationControl.tolerance(1e-6))
        shortfall = exact - got
        assert -1e-12 <= shortfall <= 2.1e-6 * exact


@given(st.integers(1, 100), st.integers(1, 200))
def test_w_partials_increase(n, m):
    lo = bv.w_product(n, TruncationControl.fixed(m))
    hi = bv.w_product(n, TruncationControl.fixed(m + 1))
    assert hi > lo


def test_w_product_budget():
    with pytest.raises(NonConvergenceError) as exc:
        bv.w_product(1, TruncationControl.tolerance(1e-12))
    assert exc.value.terms == 10**8
    assert 0 < exc.value.partial < bv.w_exact(1).to_real()


def test_product_domains():
    for fn in (bv.v_product, bv.w_product):
        with pytest.raises(DomainError):
            fn(0)
        with pytest.raises(DomainError):
            fn(-2)
