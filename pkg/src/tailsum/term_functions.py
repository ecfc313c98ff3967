"""Term functions ``X(x)``: value, k-th derivative and tail integral.

A provider runs either in exact mode (every value a :class:`Fraction`) or in
approximate mode (every value a :class:`decimal.Decimal` computed with the
provider's ``precision`` significant digits).  The two are never mixed.
"""

from __future__ import annotations

import decimal
from abc import ABC, abstractmethod
from decimal import Decimal
from fractions import Fraction
from math import comb
from typing import Union

from .errors import DivergentSeriesError, InvalidArgumentError

__all__ = [
    "Value",
    "DEFAULT_PRECISION",
    "TermFunction",
    "InversePower",
    "ZeroFunction",
    "inverse_power",
    "to_decimal",
    "fd_derivative_check",
]

Value = Union[Fraction, Decimal]

DEFAULT_PRECISION = 60


def to_decimal(value: Value | int, precision: int) -> Decimal:
    """Round ``value`` to ``precision`` significant digits."""
    with decimal.localcontext() as ctx:
        ctx.prec = precision
        if isinstance(value, Decimal):
            return +value
        value = Fraction(value)
        return Decimal(value.numerator) / Decimal(value.denominator)


class TermFunction(ABC):
    """Contract for the term function of a series ``X(x) + X(x+1) + ...``."""

    #: exact providers return Fractions for rational abscissae
    exact: bool = True
    precision: int = DEFAULT_PRECISION
    supports_tail_integral: bool = False
    description: str = ""

    def coerce(self, x) -> Value:
        """Convert an abscissa to this provider's numeric mode."""
        if self.exact:
            if isinstance(x, Decimal):
                raise InvalidArgumentError("exact provider cannot take a Decimal abscissa")
            return Fraction(x)
        return to_decimal(x if isinstance(x, Decimal) else Fraction(x), self.precision)

    def eval(self, x) -> Value:
        return self.derivative(0, x)

    @abstractmethod
    def derivative(self, k: int, x) -> Value:
        """Value of the k-th derivative at ``x``."""

    def tail_integral(self, x) -> Value:
        """Integral of X from ``x`` to infinity."""
        raise DivergentSeriesError(f"{self.description or type(self).__name__} has no tail integral")

    def __call__(self, x) -> Value:
        return self.eval(x)


class ZeroFunction(TermFunction):
    supports_tail_integral = True
    description = "0"

    def derivative(self, k: int, x) -> Fraction:
        return Fraction(0)

    def tail_integral(self, x) -> Fraction:
        return Fraction(0)


class InversePower(TermFunction):
    """``X(x) = x^(-n)`` for ``n > 0``.

    Integer exponents run exactly.  Any other exponent switches the provider
    to Decimal arithmetic at ``precision`` significant digits.
    """

    def __init__(self, n, precision: int = DEFAULT_PRECISION):
        n = Fraction(n)
        if n <= 0:
            raise InvalidArgumentError(f"exponent must be positive, got {n}")
        self.n = n
        self.precision = precision
        self.exact = n.denominator == 1
        self.supports_tail_integral = n > 1
        self.description = f"1/x^{n}"

    def __repr__(self) -> str:
        return f"InversePower({self.n})"

    def _check_domain(self, x: Value) -> None:
        if x <= 0:
            raise InvalidArgumentError(f"inverse power needs x > 0, got {x}")

    def _power(self, x: Value, e) -> Value:
        """``x ** (-e)`` in the provider's numeric mode."""
        if self.exact:
            return 1 / x ** int(e)
        with decimal.localcontext() as ctx:
            ctx.prec = self.precision
            return 1 / x ** to_decimal(Fraction(e), self.precision)

    def derivative(self, k: int, x) -> Value:
        if k < 0:
            raise InvalidArgumentError("derivative order must be >= 0")
        x = self.coerce(x)
        self._check_domain(x)
        n = self.n
        rising = Fraction(1)
        for j in range(k):
            rising *= n + j
        sign = -1 if k % 2 else 1
        if self.exact:
            return sign * rising * self._power(x, n + k)
        with decimal.localcontext() as ctx:
            ctx.prec = self.precision
            return sign * to_decimal(rising, self.precision) * self._power(x, n + k)

    def tail_integral(self, x) -> Value:
        if not self.supports_tail_integral:
            raise DivergentSeriesError(
                f"tail integral of 1/x^{self.n} diverges: the exponent must exceed 1"
            )
        x = self.coerce(x)
        self._check_domain(x)
        if self.exact:
            return self._power(x, self.n - 1) / (self.n - 1)
        with decimal.localcontext() as ctx:
            ctx.prec = self.precision
            return self._power(x, self.n - 1) / to_decimal(self.n - 1, self.precision)


def inverse_power(n, precision: int = DEFAULT_PRECISION) -> InversePower:
    return InversePower(n, precision)


def fd_derivative_check(f: TermFunction, k: int, x, h) -> Value:
    """``|f^(k)(x) - central k-th difference|`` with step ``h``.

    The difference samples ``f`` at ``x + (k/2 - j) h`` for ``j = 0..k`` and is
    second-order accurate, so the residual of a correct provider scales as h^2.
    """
    if k < 1:
        raise InvalidArgumentError("k must be >= 1")
    h = Fraction(h) if not isinstance(h, Decimal) else h
    if h <= 0:
        raise InvalidArgumentError(f"step must be positive, got {h}")
    if f.exact:
        x, h = Fraction(x), Fraction(h)
        fd = sum(
            (-1) ** j * comb(k, j) * f.eval(x + (Fraction(k, 2) - j) * h) for j in range(k + 1)
        ) / h**k
        return abs(f.derivative(k, x) - fd)
    with decimal.localcontext() as ctx:
        ctx.prec = f.precision
        x, h = f.coerce(x), f.coerce(h)
        half = Decimal(k) / 2
        fd = sum(
            (-1) ** j * comb(k, j) * f.eval(x + (half - j) * h) for j in range(k + 1)
        ) / h**k
        return abs(f.derivative(k, x) - fd)
