from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tailsum.errors import DivergentSeriesError, InvalidArgumentError
from tailsum.term_functions import InversePower, ZeroFunction, fd_derivative_check, inverse_power

F = Fraction


def test_inverse_power_values():
    f = inverse_power(2)
    assert f.derivative(1, 10) == F(-1, 500)
    assert f.tail_integral(10) == F(1, 10)
    assert f.derivative(0, 3) == F(1, 9) == f.eval(3) == f(3)


def test_third_derivative_matches_closed_form():
    n = 5
    f = inverse_power(n)
    x = F(7, 3)
    assert f.derivative(3, x) == -n * (n + 1) * (n + 2) / x ** (n + 3)


@given(st.integers(2, 12), st.integers(0, 25), st.fractions(min_value=F(1, 4), max_value=50))
def test_derivative_recurrence(n, k, x):
    f = inverse_power(n)
    lhs = f.derivative(k + 1, x) * x ** (n + k + 1)
    rhs = -(n + k) * f.derivative(k, x) * x ** (n + k)
    assert lhs == rhs


def test_exact_mode_is_exact():
    f = inverse_power(4)
    assert f.exact
    assert all(isinstance(f.derivative(k, 10), Fraction) for k in range(10))
    assert isinstance(f.tail_integral(10), Fraction)


def test_noninteger_exponent_is_approximate():
    f = inverse_power("3/2")
    assert not f.exact
    assert isinstance(f.eval(4), Decimal)
    assert f.eval(4) == Decimal("0.125")
    assert f.tail_integral(4) == 1  # 2 / sqrt(4)


def test_tail_integral_requires_exponent_above_one():
    assert not inverse_power(1).supports_tail_integral
    with pytest.raises(DivergentSeriesError):
        inverse_power(1).tail_integral(10)
    with pytest.raises(DivergentSeriesError):
        inverse_power("1/2").tail_integral(10)


def test_invalid_exponent_and_domain():
    with pytest.raises(InvalidArgumentError):
        InversePower(0)
    with pytest.raises(InvalidArgumentError):
        inverse_power(2).eval(0)
    with pytest.raises(InvalidArgumentError):
        inverse_power(2).eval(-3)


def test_tail_integral_vanishes_at_large_x():
    f = inverse_power(3)
    assert f.tail_integral(10**9) < F(1, 10**17)


def test_tail_integral_derivative_reproduces_minus_x():
    f = inverse_power(3)
    x = F(10)
    for h in (F(1, 100), F(1, 200)):
        fd = (f.tail_integral(x + h) - f.tail_integral(x - h)) / (2 * h)
        # error of central difference is (h^2/6) |X''(x)| ~ h^2 * 2e-5
        assert abs(fd + f.eval(x)) < h**2 * F(3, 100000)


class TestFiniteDifferenceCheck:
    def test_first_derivative_residual(self):
        assert fd_derivative_check(inverse_power(2), 1, 10, F(1, 1000)) < F(1, 10**5)

    def test_zero_provider(self):
        assert fd_derivative_check(ZeroFunction(), 3, 5, F(1, 10)) == 0

    def test_second_order_accuracy(self):
        f = inverse_power(3)
        r1 = fd_derivative_check(f, 2, 5, F(1, 100))
        r2 = fd_derivative_check(f, 2, 5, F(1, 200))
        assert 3.9 < r1 / r2 < 4.1

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_higher_orders_scale_like_h_squared(self, k):
        f = inverse_power(2)
        r1 = fd_derivative_check(f, k, 8, F(1, 50))
        r2 = fd_derivative_check(f, k, 8, F(1, 100))
        assert 3.8 < r1 / r2 < 4.2

    def test_decimal_mode(self):
        f = inverse_power("5/2")
        assert fd_derivative_check(f, 1, 6, Decimal("0.001")) < Decimal("1e-8")

    def test_bad_step(self):
        with pytest.raises(InvalidArgumentError):
            fd_derivative_check(inverse_power(2), 1, 10, 0)
        with pytest.raises(InvalidArgumentError):
            fd_derivative_check(inverse_power(2), 1, 10, -1)
