import decimal
from decimal import Decimal
from fractions import Fraction

import pytest

from oracles import averaged_alternating_sum, bernoulli_like_from_bernoulli, pi_power, to_dec
from tailsum.errors import DivergentSeriesError, InvalidArgumentError, InvalidPolicyError
from tailsum.summation import TruncationPolicy, boole_tail, em_tail, split_sum
from tailsum.term_functions import ZeroFunction, inverse_power

F = Fraction
P = TruncationPolicy


def zeta_tail_oracle(n, x0):
    """zeta(n) - sum_{k<x0} k^-n for even n, via the pi identity."""
    coeff = bernoulli_like_from_bernoulli(n // 2)[-1]
    with decimal.localcontext() as ctx:
        ctx.prec = 80
        head = to_dec(sum(F(1, k**n) for k in range(1, x0)))
        return to_dec(coeff) * pi_power(n) - head


def test_em_fixed_order_hand_value():
    r = em_tail(inverse_power(2), 10, P.fixed_order(2))
    assert r.value == F(1, 10) + F(1, 200) + F(1, 12) * F(2, 1000)
    assert r.k_star == 2
    assert r.recompute() == r.value


def test_em_smallest_term_against_zeta2_oracle():
    r = em_tail(inverse_power(2), 10, P.smallest_term())
    err = abs(to_dec(r.value) - zeta_tail_oracle(2, 10))
    assert err <= to_dec(r.error_estimate)


def test_em_rejects_divergent():
    with pytest.raises(DivergentSeriesError):
        em_tail(inverse_power(1), 10, P.smallest_term())
    with pytest.raises(DivergentSeriesError):
        em_tail(inverse_power("1/2"), 3, P.smallest_term())


def test_boole_fixed_order_hand_value():
    r = boole_tail(inverse_power(1), 10, P.fixed_order(1))
    assert r.value == F(21, 400) == F(1, 20) + F(1, 4) * F(1, 100)


def test_boole_smallest_term_against_averaging_oracle():
    r = boole_tail(inverse_power(2), 10, P.smallest_term())
    oracle = averaged_alternating_sum(lambda m: F(1, (10 + m) ** 2))
    assert abs(to_dec(r.value) - oracle) <= to_dec(r.error_estimate)


def test_boole_zero_function():
    r = boole_tail(ZeroFunction(), 3, P.smallest_term(20))
    assert r.value == 0
    assert all(t == 0 for t in r.trace)


def test_boole_two_weight_paths_identical_reports():
    for n in (1, 2, 5):
        a = boole_tail(inverse_power(n), 10, P.smallest_term(), weight_path="tangent")
        b = boole_tail(inverse_power(n), 10, P.smallest_term(), weight_path="ratio")
        assert a == b


def test_unknown_weight_path():
    with pytest.raises(InvalidArgumentError):
        boole_tail(inverse_power(2), 10, P.fixed_order(3), weight_path="nope")


class TestSplitSum:
    def test_zeta2_head_is_exact(self):
        r = split_sum(inverse_power(2), 1, 10, P.smallest_term())
        head = sum(F(1, k * k) for k in range(1, 10))
        assert r.head == head
        assert f"{float(head):.10f}" == "1.5397677312"
        assert r.value == head + em_tail(inverse_power(2), 10, P.smallest_term()).value
        assert abs(to_dec(r.value) - pi_power(2) / 6) <= to_dec(r.error_estimate)

    def test_split_equal_start_is_pure_tail(self):
        r = split_sum(inverse_power(3), 10, 10, P.smallest_term())
        assert r.head == 0
        assert r.value == em_tail(inverse_power(3), 10, P.smallest_term()).value

    def test_eta1_is_ln2(self):
        r = split_sum(inverse_power(1), 1, 10, P.smallest_term(), alternating=True)
        oracle = averaged_alternating_sum(lambda m: F(1, m + 1))
        assert abs(to_dec(r.value) - oracle) <= to_dec(r.error_estimate)
        assert r.sign == -1

    def test_alternating_sign_for_even_gap(self):
        r = split_sum(inverse_power(2), 2, 12, P.smallest_term(), alternating=True)
        oracle = averaged_alternating_sum(lambda m: F(1, (m + 2) ** 2))
        assert r.sign == 1
        assert abs(to_dec(r.value) - oracle) <= to_dec(r.error_estimate)

    def test_non_integral_gap(self):
        with pytest.raises(InvalidArgumentError):
            split_sum(inverse_power(2), 1, F(21, 2), P.smallest_term())
        with pytest.raises(InvalidArgumentError):
            split_sum(inverse_power(2), 5, 3, P.smallest_term())

    def test_nonpositive_abscissa_rejected(self):
        with pytest.raises(InvalidArgumentError):
            split_sum(inverse_power(2), 0, 10, P.smallest_term())
        with pytest.raises(InvalidArgumentError):
            em_tail(inverse_power(2), -1, P.smallest_term())


@pytest.mark.parametrize("n", [2, 3, 5, 7])
@pytest.mark.parametrize("alternating", [False, True])
def test_split_invariance(n, alternating):
    a = split_sum(inverse_power(n), 1, 10, P.smallest_term(), alternating=alternating)
    b = split_sum(inverse_power(n), 1, 20, P.smallest_term(), alternating=alternating)
    assert abs(a.value - b.value) <= a.error_estimate + b.error_estimate


def test_report_self_consistency_exact():
    for alt in (False, True):
        r = split_sum(inverse_power(4), 1, 10, P.smallest_term(), alternating=alt)
        assert r.mode == "exact"
        assert r.recompute() == r.value
        assert r.error_estimate >= 0
        assert r.k_star <= 100


def test_report_self_consistency_approx():
    r = split_sum(inverse_power("5/2"), 1, 10, P.smallest_term())
    assert r.mode == "approx"
    with decimal.localcontext() as ctx:
        ctx.prec = 60
        diff = abs(r.recompute() - r.value)
        assert diff <= abs(r.value) * Decimal("1e-59")


def test_approx_mode_zeta_three_halves():
    r = split_sum(inverse_power("3/2"), 1, 10, P.smallest_term())
    # zeta(3/2) = 2.612375348685488343348567567924071630570...
    ref = Decimal("2.612375348685488343348567567924071630570")
    assert abs(r.value - ref) < Decimal("1e-25")


def test_asymptotic_signature():
    r = em_tail(inverse_power(2), 10, P.smallest_term())
    mags = [abs(t) for k, t in enumerate(r.trace) if k == 0 or k % 2]
    ks = [k for k in range(len(r.trace)) if k == 0 or k % 2]
    i_min = mags.index(min(mags))
    assert ks[i_min] == r.k_star
    assert all(a > b for a, b in zip(mags[:i_min], mags[1 : i_min + 1]))
    assert mags[i_min + 1] > mags[i_min] and mags[i_min + 2] > mags[i_min + 1]
    assert r.diverged_before_converging
    assert r.error_estimate == mags[i_min + 1]


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10])
def test_smallest_term_dominance(n):
    r = split_sum(inverse_power(n), 1, 10, P.smallest_term())
    truth = to_dec(bernoulli_like_from_bernoulli(n // 2)[-1]) * pi_power(n)
    assert abs(to_dec(r.value) - truth) <= 10 * to_dec(r.error_estimate)


def test_fixed_order_estimate_is_next_nonzero_term():
    r = em_tail(inverse_power(2), 10, P.fixed_order(3))
    nxt = F(-1, 30240) * inverse_power(2).derivative(5, 10)
    assert r.error_estimate == abs(nxt)
    assert not r.diverged_before_converging


def test_bounded_scan_without_growth():
    r = em_tail(inverse_power(2), 40, P.smallest_term(30))
    assert not r.diverged_before_converging
    assert r.k_star == 29
    assert r.error_estimate > 0


def test_policy_validation():
    with pytest.raises(InvalidPolicyError):
        P.fixed_order(0)
    with pytest.raises(InvalidPolicyError):
        P("sometimes", 4)
    with pytest.raises(InvalidPolicyError):
        em_tail(inverse_power(2), 10, "smallest")
