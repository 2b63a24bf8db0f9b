import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import box_points, zero_tail_estimate
from xiprobe.hadamard import (
    Mode,
    TruncationSpec,
    exp_factor_log_modulus,
    p_N,
    product_factor_log_modulus,
    _product_log,
    relative_error,
    truncated_xi,
)
from xiprobe.xi import xi
from xiprobe.zeros import TableRangeError, ZeroTable, ZetaZero, b_closed_form, partial_sum_S

RHO1 = ZetaZero(0.5, 14.134725)


def test_product_factor_examples():
    assert product_factor_log_modulus(0, RHO1) == 0.0
    assert product_factor_log_modulus(RHO1.rho, RHO1) == -math.inf
    expected = math.log(abs(1.5 - 14.134725j) / abs(0.5 + 14.134725j))
    assert product_factor_log_modulus(2, RHO1) == pytest.approx(expected, rel=1e-14)
    assert expected == pytest.approx(math.log(14.2141 / 14.1436), abs=1e-4)


def test_exp_factor_examples():
    assert exp_factor_log_modulus(0, RHO1) == 0.0
    assert exp_factor_log_modulus(3 + 2j, RHO1) == pytest.approx(
        (1.5 + 28.26945) / (0.25 + 14.134725 ** 2), rel=1e-14)
    flat = ZetaZero(0.0, 20.0)
    assert exp_factor_log_modulus(-7 + 3j, flat) == exp_factor_log_modulus(9 + 3j, flat) == 3 / 20


def test_exp_factor_is_log_of_exponential(rng):
    for s in box_points(rng, 20):
        assert exp_factor_log_modulus(s, RHO1) == pytest.approx(
            math.log(abs(cmath.exp(s / RHO1.rho))), abs=1e-13)


@settings(max_examples=80, deadline=None)
@given(beta=st.floats(0, 1), gamma=st.floats(0.5, 1e3), t0=st.floats(-200, 200),
       slack=st.floats(0, 2))
def test_product_factor_increases_right_of_zero(beta, gamma, t0, slack):
    rho = ZetaZero(beta, gamma)
    sigma0 = beta + slack
    sig = sigma0 + np.linspace(1e-3, 40, 400)
    vals = [product_factor_log_modulus(complex(x, t0), rho) for x in sig]
    assert np.all(np.diff(vals) > 0)


@settings(max_examples=80, deadline=None)
@given(beta=st.floats(0, 1), gamma=st.floats(0.5, 1e3), t0=st.floats(-200, 200),
       a=st.floats(-50, 50), b=st.floats(-50, 50))
def test_exp_factor_non_decreasing(beta, gamma, t0, a, b):
    rho = ZetaZero(beta, gamma)
    lo, hi = min(a, b), max(a, b)
    # linear in sigma with slope beta/|rho|^2 >= 0
    assert exp_factor_log_modulus(complex(hi, t0), rho) >= exp_factor_log_modulus(complex(lo, t0), rho)
    slope = beta / (beta ** 2 + gamma ** 2)
    diff = exp_factor_log_modulus(complex(hi, t0), rho) - exp_factor_log_modulus(complex(lo, t0), rho)
    assert diff == pytest.approx(slope * (hi - lo), abs=1e-12)


@pytest.mark.parametrize("mode", list(Mode))
@pytest.mark.parametrize("N", [1, 7, 500])
def test_value_at_origin(table, mode, N):
    v = truncated_xi(0, table, TruncationSpec(N, mode))
    assert v.value == pytest.approx(0.5, abs=1e-15)


@pytest.mark.parametrize("N", [1, 10, 100])
def test_modes_agree(table, rng, N):
    for s in box_points(rng, 50):
        a = truncated_xi(s, table, TruncationSpec(N, "paired"))
        b = truncated_xi(s, table, TruncationSpec(N, "regrouped"))
        assert relative_error(a, b) < 1e-12


def test_modes_agree_with_offline_zeros(rng):
    t = ZeroTable((ZetaZero(0.1, 5.0), ZetaZero(0.9, 7.0), ZetaZero(0.5, 11.0)))
    for s in box_points(rng, 20):
        a = truncated_xi(s, t, TruncationSpec(3, Mode.PAIRED))
        b = truncated_xi(s, t, TruncationSpec(3, Mode.REGROUPED))
        assert relative_error(a, b) < 1e-12


def test_truncation_against_direct_product():
    # small N, checked against a plain complex product
    t = ZeroTable.from_gammas([14.134725141734694, 21.022039638771555, 25.01085758014569])
    B = 0.5 * math.log(4 * math.pi) - 1 - 0.5 * 0.5772156649015329
    s = 1.7 - 3.2j
    ref = 0.5 * cmath.exp(B * s)
    for r in t.rho:
        for q in (r, r.conjugate()):
            ref *= (1 - s / q) * cmath.exp(s / q)
    got = truncated_xi(s, t, TruncationSpec(3, "paired")).value
    assert abs(got - ref) < 1e-13 * abs(ref)


def test_truncation_vanishes_at_zero(table):
    v = truncated_xi(table[2].rho, table, TruncationSpec(5))
    assert v.is_zero
    assert truncated_xi(table[2].rho.conjugate(), table, TruncationSpec(5)).is_zero


def test_truncation_range(table):
    with pytest.raises(TableRangeError):
        truncated_xi(2, table, TruncationSpec(len(table) + 1))
    with pytest.raises(ValueError):
        TruncationSpec(0)
    with pytest.raises(ValueError):
        TruncationSpec(3, "sideways")


def test_error_at_two_with_1000_zeros(table):
    err = relative_error(truncated_xi(2, table, TruncationSpec(1000)), xi(2))
    # dropped pairs contribute about s^2/gamma^2 each to log|xi| at real s
    est = 4 * zero_tail_estimate(table.gamma[999])
    assert err == pytest.approx(est, rel=0.1)
    assert err < 1e-2


def test_error_decreases_in_N(table):
    pts = [2 + 0j] + [complex(2, y) for y in np.linspace(-5, 5, 9)]
    errs = []
    for N in (10, 100, 1000, 10_000):
        errs.append(np.mean([relative_error(truncated_xi(s, table, TruncationSpec(N)), xi(s))
                             for s in pts]))
    assert all(b < a + 1e-3 for a, b in zip(errs, errs[1:]))
    assert errs[-1] < errs[0] / 10


def test_order_independent_accumulation(table):
    s = 3.3 + 17.0j
    rho = table.rho[:2000]
    # fsum rounds the exact sum once, so reversing the factors changes nothing
    assert _product_log(s, rho) == _product_log(s, rho[::-1].copy())
    perm = np.random.default_rng(3).permutation(len(rho))
    assert _product_log(s, rho) == _product_log(s, rho[perm])


def test_p_N_examples(table):
    assert p_N(0, table, 2).value == pytest.approx(1.0)
    r1, r2 = table[0].rho, table[1].rho
    expected = (1 - 1 / r1) * (1 - 1 / r2) * (1 - 1 / r2.conjugate())
    assert abs(p_N(1, table, 2).value - expected) < 1e-14


def test_p_N_range(table):
    with pytest.raises(TableRangeError):
        p_N(1, table, 1)
    with pytest.raises(TableRangeError):
        p_N(1, table, len(table) + 1)


def test_p_N_is_not_conjugate_symmetric(table):
    s = 0.8 + 3j
    a, b = p_N(s, table, 5), p_N(s.conjugate(), table, 5)
    assert math.isfinite(a.log_modulus) and math.isfinite(b.log_modulus)
    assert abs(b.value - a.value.conjugate()) > 1e-6


def test_regrouped_decomposition(table):
    # 1/2 e^{(B+S_N)s} (1 - s/rho_1) P_N(s) (1 - s/conj rho_1) is the regrouped truncation
    s, N = 1.3 + 4.0j, 12
    r1 = table[0].rho
    lhs = (0.5 * cmath.exp((b_closed_form() + partial_sum_S(table, N)) * s)
           * p_N(s, table, N).value * (1 - s / r1.conjugate()))
    rhs = truncated_xi(s, table, TruncationSpec(N, "regrouped")).value
    assert abs(lhs - rhs) < 1e-13 * abs(rhs)
