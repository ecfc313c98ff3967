"""Truncated formal power series with exact rational coefficients.

Coefficients are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator.  Every series carries an explicit order
(the number of retained coefficients); binary operations truncate to the
smaller order and never extend a series silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidArgumentError, NonInvertibleSeriesError

__all__ = [
    "PowerSeries",
    "LaurentLike",
    "ps_mul",
    "ps_add",
    "ps_reciprocal",
    "ps_substitute_scale",
    "unit_series",
    "em_aux",
    "boole_aux",
    "ode_residual",
]


@dataclass(frozen=True)
class PowerSeries:
    """Dense series ``c0 + c1 z + ... + c_{order-1} z^{order-1}``."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[int | Fraction | str]):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __mul__(self, other: PowerSeries | int | Fraction) -> PowerSeries:
        if isinstance(other, PowerSeries):
            return ps_mul(self, other)
        return PowerSeries(c * other for c in self.coeffs)

    __rmul__ = __mul__

    def __add__(self, other: PowerSeries) -> PowerSeries:
        return ps_add(self, other)

    def __neg__(self) -> PowerSeries:
        return PowerSeries(-c for c in self.coeffs)

    def __sub__(self, other: PowerSeries) -> PowerSeries:
        return ps_add(self, -other)

    def truncate(self, order: int) -> PowerSeries:
        if order < 1 or order > self.order:
            raise InvalidArgumentError(f"cannot truncate order {self.order} series to {order}")
        return PowerSeries(self.coeffs[:order])

    def is_unit(self) -> bool:
        """True when the series is exactly ``1 + 0 z + ... + 0 z^{order-1}``."""
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def __repr__(self) -> str:
        return "PowerSeries(" + ", ".join(str(c) for c in self.coeffs) + ")"


@dataclass(frozen=True)
class LaurentLike:
    """``principal / t + regular(t)``; the only negative power allowed is 1/t."""

    principal: Fraction
    regular: PowerSeries

    def __init__(self, principal: int | Fraction, regular: PowerSeries | Sequence):
        if not isinstance(regular, PowerSeries):
            regular = PowerSeries(regular)
        object.__setattr__(self, "principal", Fraction(principal))
        object.__setattr__(self, "regular", regular)


def _require_nonempty(*series: PowerSeries) -> None:
    for s in series:
        if s.order == 0:
            raise InvalidArgumentError("power series must have at least one coefficient")


def unit_series(order: int) -> PowerSeries:
    if order < 1:
        raise InvalidArgumentError("order must be >= 1")
    return PowerSeries([1] + [0] * (order - 1))


def ps_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    _require_nonempty(a, b)
    n = min(a.order, b.order)
    return PowerSeries(a.coeffs[k] + b.coeffs[k] for k in range(n))


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated to ``min(a.order, b.order)``."""
    _require_nonempty(a, b)
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(n):
        s = Fraction(0)
        for i in range(k + 1):
            if ac[i] and bc[k - i]:
                s += ac[i] * bc[k - i]
        out.append(s)
    return PowerSeries(out)


def ps_reciprocal(a: PowerSeries) -> PowerSeries:
    """Series ``r`` with ``a * r == 1`` through the full order of ``a``."""
    _require_nonempty(a)
    a0 = a.coeffs[0]
    if a0 == 0:
        raise NonInvertibleSeriesError("constant term is zero; series has no reciprocal")
    inv0 = 1 / a0
    r = [inv0]
    for k in range(1, a.order):
        s = sum((a.coeffs[i] * r[k - i] for i in range(1, k + 1)), Fraction(0))
        r.append(-s * inv0)
    return PowerSeries(r)


def ps_substitute_scale(a: PowerSeries, factor: Fraction | int) -> PowerSeries:
    """Return ``a(factor * z)``, i.e. coefficient k multiplied by factor**k."""
    factor = Fraction(factor)
    out, p = [], Fraction(1)
    for c in a.coeffs:
        out.append(c * p)
        p *= factor
    return PowerSeries(out)


def _factorials(n: int) -> list[int]:
    facts = [1]
    for k in range(1, n + 1):
        facts.append(facts[-1] * k)
    return facts


def em_aux(order: int) -> PowerSeries:
    """``(e^z - 1)/z = 1 + z/2 + z^2/6 + ...``; coefficient k is ``1/(k+1)!``."""
    if order < 1:
        raise InvalidArgumentError("order must be >= 1")
    facts = _factorials(order)
    return PowerSeries(Fraction(1, facts[k + 1]) for k in range(order))


def boole_aux(order: int) -> PowerSeries:
    """``1 + e^z = 2 + z + z^2/2 + ...``."""
    if order < 1:
        raise InvalidArgumentError("order must be >= 1")
    facts = _factorials(order)
    return PowerSeries([Fraction(2)] + [Fraction(1, facts[k]) for k in range(1, order)])


def ode_residual(u: LaurentLike) -> LaurentLike:
    """Evaluate ``du/dt + u*u - 1`` for ``u = p/t + sum r_k t^k``.

    The ``1/t^2`` parts (``-p`` from the derivative, ``p^2`` from the square)
    cancel for ``p`` in {0, 1}; any other principal part is rejected because
    the result would not be representable.  The regular part of the result has
    order ``u.regular.order - 1`` since the derivative consumes one coefficient.
    """
    p = u.principal
    r = u.regular.coeffs
    n = len(r)
    if n < 2:
        raise InvalidArgumentError("regular part needs order >= 2")
    if p * p - p != 0:
        raise InvalidArgumentError("principal part must be 0 or 1 for the 1/t^2 terms to cancel")
    square = ps_mul(u.regular, u.regular).coeffs
    out = []
    for m in range(n - 1):
        c = (m + 1) * r[m + 1] + 2 * p * r[m + 1] + square[m]
        if m == 0:
            c -= 1
        out.append(c)
    return LaurentLike(2 * p * r[0], PowerSeries(out))
