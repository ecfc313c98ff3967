"""Tail engines for direct and alternating series, plus split-sum assembly.

Direct tail (Euler-Maclaurin)::

    X(x) + X(x+1) + ... = int_x^inf X + sum_k em_weight[k] X^(k)(x)

Alternating tail (Boole)::

    X(x) - X(x+1) + ... = sum_k boole_weight[k] X^(k)(x)

Both derivative series are asymptotic: their terms shrink to a minimum and
then grow.  Truncation is chosen by a :class:`TruncationPolicy`; the
``smallest_term`` policy stops at the term of least magnitude and reports the
magnitude of the first omitted term as a heuristic error estimate (not a
bound).
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass, replace
from decimal import Decimal
from fractions import Fraction

from .coefficients import CoefficientCache, default_cache
from .errors import DivergentSeriesError, InvalidArgumentError, InvalidPolicyError
from .term_functions import TermFunction, Value, to_decimal

__all__ = [
    "DEFAULT_MAX_ORDER",
    "TruncationPolicy",
    "SummationReport",
    "em_tail",
    "boole_tail",
    "split_sum",
]

# Highest derivative order scanned by default.  At split 10 the smallest
# direct-tail term sits near derivative order 2*pi*10 ~ 63.
DEFAULT_MAX_ORDER = 100

FIXED_ORDER = "fixed_order"
SMALLEST_TERM = "smallest_term"


@dataclass(frozen=True)
class TruncationPolicy:
    """``max_order`` is the highest derivative order the engine may use."""

    mode: str
    max_order: int

    def __post_init__(self):
        if self.mode not in (FIXED_ORDER, SMALLEST_TERM):
            raise InvalidPolicyError(f"unknown truncation mode {self.mode!r}")
        if not isinstance(self.max_order, int) or self.max_order < 1:
            raise InvalidPolicyError(f"max_order must be a positive integer, got {self.max_order!r}")

    @classmethod
    def fixed_order(cls, k: int) -> TruncationPolicy:
        return cls(FIXED_ORDER, k)

    @classmethod
    def smallest_term(cls, max_order: int = DEFAULT_MAX_ORDER) -> TruncationPolicy:
        return cls(SMALLEST_TERM, max_order)


@dataclass(frozen=True)
class SummationReport:
    """Result of one engine run.

    ``value == head + sign * (integral + sum(terms))``.  ``terms[k]`` is the
    included contribution of derivative order ``k`` (zero where the weight
    vanishes) for ``k = 0..k_star``; ``trace`` holds every term the engine
    evaluated, including those past ``k_star`` that revealed the growth.
    ``diverged_before_converging`` is set when the term magnitudes were seen
    to grow again before the policy bound, i.e. the accuracy is limited by
    the asymptotic series itself rather than by ``max_order``.
    """

    value: Value
    k_star: int
    terms: tuple[Value, ...]
    trace: tuple[Value, ...]
    error_estimate: Value
    diverged_before_converging: bool
    split_point: Value
    integral: Value
    mode: str
    head: Value = Fraction(0)
    sign: int = 1

    def recompute(self) -> Value:
        if self.mode == "exact":
            return self.head + self.sign * (self.integral + sum(self.terms, Fraction(0)))
        return self.head + self.sign * (self.integral + sum(self.terms, Decimal(0)))


def _mul(weight: Fraction, value: Value, precision: int) -> Value:
    if isinstance(value, Fraction):
        return weight * value
    return to_decimal(weight, precision) * value


def _run(f: TermFunction, x0, policy: TruncationPolicy, weights, integral: Value) -> SummationReport:
    K = policy.max_order
    exact = f.exact
    zero = Fraction(0) if exact else Decimal(0)

    def term(k: int) -> Value:
        w = weights[k]
        if w == 0:
            return zero
        return _mul(w, f.derivative(k, x0), f.precision)

    trace: list[Value] = []
    best_k, best_mag = 0, None
    prev_mag, rises = None, 0
    diverged = False
    for k in range(K + 1):
        t = term(k)
        trace.append(t)
        if weights[k] == 0:
            continue
        mag = abs(t)
        if policy.mode == FIXED_ORDER:
            continue
        if best_mag is None or mag <= best_mag:
            best_k, best_mag = k, mag
        if prev_mag is not None and mag > prev_mag:
            rises += 1
            if rises == 2:
                diverged = True
                break
        else:
            rises = 0
        prev_mag = mag

    k_star = K if policy.mode == FIXED_ORDER else best_k

    # first omitted term with nonzero weight, evaluated beyond the bound if needed
    estimate = None
    k = k_star + 1
    while estimate is None:
        if k < len(trace):
            if weights[k] != 0:
                estimate = abs(trace[k])
        elif k < len(weights):
            if weights[k] != 0:
                estimate = abs(term(k))
        else:
            estimate = zero
        k += 1

    terms = tuple(trace[: k_star + 1])
    if exact:
        value = integral + sum(terms, Fraction(0))
    else:
        with decimal.localcontext() as ctx:
            ctx.prec = f.precision
            value = integral + sum(terms, Decimal(0))
    return SummationReport(
        value=value,
        k_star=k_star,
        terms=terms,
        trace=tuple(trace),
        error_estimate=estimate,
        diverged_before_converging=diverged,
        split_point=x0,
        integral=integral,
        mode="exact" if exact else "approx",
        head=zero,
    )


def _prepare(f: TermFunction, x0, policy: TruncationPolicy):
    if not isinstance(policy, TruncationPolicy):
        raise InvalidPolicyError("policy must be a TruncationPolicy")
    x0 = f.coerce(x0)
    f.eval(x0)  # domain check before any series work
    # room for the first omitted nonzero term past the bound
    return x0, policy.max_order + 3


def em_tail(
    f: TermFunction,
    x0,
    policy: TruncationPolicy,
    cache: CoefficientCache | None = None,
) -> SummationReport:
    """``X(x0) + X(x0+1) + ...`` via the tail integral and odd derivatives."""
    if not f.supports_tail_integral:
        raise DivergentSeriesError(
            f"{f.description or type(f).__name__}: no convergent tail integral, so the sum diverges"
        )
    x0, count = _prepare(f, x0, policy)
    weights = (cache or default_cache).em_weights(count).values
    return _run(f, x0, policy, weights, f.tail_integral(x0))


def boole_tail(
    f: TermFunction,
    x0,
    policy: TruncationPolicy,
    cache: CoefficientCache | None = None,
    weight_path: str = "tangent",
) -> SummationReport:
    """``X(x0) - X(x0+1) + X(x0+2) - ...`` from derivatives at ``x0`` alone.

    ``weight_path="ratio"`` builds the weights as ``(2^(2k) - 1)`` times the
    direct-tail weights instead of from the tangent-like family; both give
    identical rationals.
    """
    x0, count = _prepare(f, x0, policy)
    cache = cache or default_cache
    if weight_path == "tangent":
        weights = cache.boole_weights(count).values
    elif weight_path == "ratio":
        weights = cache.boole_weights_via_ratio(count).values
    else:
        raise InvalidArgumentError(f"unknown weight path {weight_path!r}")
    zero = Fraction(0) if f.exact else Decimal(0)
    return _run(f, x0, policy, weights, zero)


def split_sum(
    f: TermFunction,
    start,
    split,
    policy: TruncationPolicy,
    alternating: bool = False,
    cache: CoefficientCache | None = None,
    weight_path: str = "tangent",
) -> SummationReport:
    """Exact head ``X(start) .. X(split-1)`` plus an accelerated tail at ``split``.

    In alternating mode the head alternates starting with ``+X(start)`` and the
    tail enters with sign ``(-1)^(split-start)``.
    """
    gap = Fraction(split) - Fraction(start)
    if gap.denominator != 1 or gap < 0:
        raise InvalidArgumentError(f"split - start must be a nonnegative integer, got {gap}")
    gap = int(gap)
    start_v = f.coerce(start)

    if alternating:
        tail = boole_tail(f, split, policy, cache=cache, weight_path=weight_path)
        sign = -1 if gap % 2 else 1
    else:
        tail = em_tail(f, split, policy, cache=cache)
        sign = 1

    with decimal.localcontext() as ctx:
        ctx.prec = f.precision
        head = Fraction(0) if f.exact else Decimal(0)
        for i in range(gap):
            term = f.eval(start_v + i)
            head += -term if (alternating and i % 2) else term
        value = head + sign * tail.value
    return replace(tail, value=value, head=head, sign=sign)
