"""Exact coefficient families and the summation weights built from them.

Two families come from matching powers of ``t`` in ``du/dt + u^2 - 1 = 0``:

* bernoulli-like ``A, B, C, ...`` from ``u = 1/t + 2At - 2Bt^3 + 2Ct^5 - ...``
  (``u = coth t``), giving ``(4k+2) T_k = 4 sum_{i+j=k} T_i T_j`` with
  ``6A = 1``;
* tangent-like ``A', B', C', ...`` from ``u = t - A't^3 + B't^5 - ...``
  (``u = tanh t``), giving ``(2k+1) T_k = sum_{i+j=k-1} T_i T_j`` with
  ``T_0 = 1``.

These recurrences are the production path.  :func:`cross_check` compares
them against the reciprocals of the auxiliary series in
:mod:`tailsum.power_series`, which is an independent route to the same
weights.

Weight tables are indexed by derivative order ``k`` and carry their own
signs, so the summation engines simply compute ``sum w[k] * f^(k)(x)``.
Known misprints in the historical tables (``D = 1/9540``, ``A' = 1/2``) are
listed in :data:`MISPRINTS`; the recurrences give ``D = 1/9450`` and
``A' = 1/3``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import InternalInconsistencyError, InvalidArgumentError
from .power_series import (
    LaurentLike,
    PowerSeries,
    boole_aux,
    em_aux,
    ode_residual,
    ps_reciprocal,
)

__all__ = [
    "Kind",
    "CoefficientTable",
    "CoefficientCache",
    "CheckResult",
    "MISPRINTS",
    "default_cache",
    "bernoulli_like",
    "tangent_like",
    "em_weights",
    "boole_weights",
    "boole_weights_via_ratio",
    "weight_ratio_table",
    "cross_check",
    "coth_series",
    "tanh_series",
    "v_direct",
    "v_alternating",
]

# (symbol, printed value, value implied by the recurrence)
MISPRINTS = (
    ("D (bernoulli-like, index 3)", "1/9540", "1/9450"),
    ("A' (tangent-like, index 0)", "1/2", "1/3"),
    ("C-term denominator in the inverse-power tail", "3^2", "32"),
    ("fourth row of the weight-ratio table", "B'/256 : D/128", "C'/256 : D/128"),
)


class Kind(str, Enum):
    BERNOULLI_LIKE = "bernoulli_like"
    TANGENT_LIKE = "tangent_like"
    EM_WEIGHT = "em_weight"
    BOOLE_WEIGHT = "boole_weight"


@dataclass(frozen=True)
class CoefficientTable:
    kind: Kind
    values: tuple[Fraction, ...]

    @property
    def count(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _check_count(count: int) -> None:
    if not isinstance(count, int) or count < 1:
        raise InvalidArgumentError(f"count must be a positive integer, got {count!r}")


class CoefficientCache:
    """Write-once-per-prefix store for the two recurrence families.

    Readers get immutable tuple snapshots.  Extensions run under a lock so
    concurrent callers publish one consistent prefix.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._bern: list[Fraction] = []
        # index 0 holds T_0 = 1, which is not part of the public table
        self._tan: list[Fraction] = [Fraction(1)]

    def _extend_bernoulli(self, count: int) -> None:
        t = self._bern
        while len(t) < count:
            k = len(t) + 1  # 1-based index of the entry being produced
            if k == 1:
                t.append(Fraction(1, 6))
                continue
            conv = sum((t[i - 1] * t[k - i - 1] for i in range(1, k)), Fraction(0))
            t.append(4 * conv / (4 * k + 2))

    def _extend_tangent(self, count: int) -> None:
        t = self._tan
        while len(t) < count + 1:
            k = len(t)
            conv = sum((t[i] * t[k - 1 - i] for i in range(k)), Fraction(0))
            t.append(conv / (2 * k + 1))

    def bernoulli_like(self, count: int) -> CoefficientTable:
        """``(A, B, C, D, E, ...)`` with ``A = 1/6``, ``B = 1/90``, ..."""
        _check_count(count)
        if len(self._bern) < count:
            with self._lock:
                self._extend_bernoulli(count)
        return CoefficientTable(Kind.BERNOULLI_LIKE, tuple(self._bern[:count]))

    def tangent_like(self, count: int) -> CoefficientTable:
        """``(A', B', C', ...)`` with ``A' = 1/3``, ``B' = 2/15``, ..."""
        _check_count(count)
        if len(self._tan) < count + 1:
            with self._lock:
                self._extend_tangent(count)
        return CoefficientTable(Kind.TANGENT_LIKE, tuple(self._tan[1 : count + 1]))

    def em_weights(self, count: int) -> CoefficientTable:
        """Weights ``w[k]`` of ``f^(k)(x)`` in the direct tail.

        ``w[0] = 1/2``, ``w[2k-1] = (-1)^k T_k / 2^(2k-1)``, zero at even k >= 2.
        """
        _check_count(count)
        bern = self.bernoulli_like(max(1, count // 2)).values
        w = [Fraction(0)] * count
        w[0] = Fraction(1, 2)
        for j in range(1, count):
            if j % 2:
                k = (j + 1) // 2
                w[j] = (-1) ** k * bern[k - 1] / 2 ** (2 * k - 1)
        return CoefficientTable(Kind.EM_WEIGHT, tuple(w))

    def boole_weights(self, count: int) -> CoefficientTable:
        """Weights of the alternating tail from the tangent-like family.

        ``w[0] = 1/2``, ``w[1] = -1/4`` and ``w[2k-1] = (-1)^k T'_{k-1} / 4^k``
        for ``k >= 2``, where ``T'_1 = A'``.
        """
        _check_count(count)
        tan = self.tangent_like(max(1, count // 2)).values
        w = [Fraction(0)] * count
        w[0] = Fraction(1, 2)
        for j in range(1, count):
            if j % 2:
                k = (j + 1) // 2
                if k == 1:
                    w[j] = Fraction(-1, 4)
                else:
                    w[j] = (-1) ** k * tan[k - 2] / 4**k
        return CoefficientTable(Kind.BOOLE_WEIGHT, tuple(w))

    def boole_weights_via_ratio(self, count: int) -> CoefficientTable:
        """Alternating weights as ``(2^(2k) - 1) * em_weight[2k-1]``."""
        em = self.em_weights(count).values
        w = [Fraction(0)] * count
        w[0] = Fraction(1, 2)
        for j in range(1, count):
            if j % 2:
                k = (j + 1) // 2
                w[j] = (2 ** (2 * k) - 1) * em[j]
        return CoefficientTable(Kind.BOOLE_WEIGHT, tuple(w))

    def weight_ratio_table(self, count: int) -> tuple[Fraction, ...]:
        """Entry ``k-1`` is ``boole_weight[2k-1] / em_weight[2k-1]`` for k = 1..count."""
        _check_count(count)
        em = self.em_weights(2 * count).values
        bo = self.boole_weights(2 * count).values
        out = []
        for k in range(1, count + 1):
            if em[2 * k - 1] == 0:
                raise InternalInconsistencyError(f"em weight at derivative {2 * k - 1} is zero")
            out.append(bo[2 * k - 1] / em[2 * k - 1])
        return tuple(out)

    def cross_check(self, order: int) -> list[CheckResult]:
        """Compare recurrence tables against the series reciprocals.

        Failures are reported in the returned list, never raised.
        """
        if order < 2:
            raise InvalidArgumentError("cross_check needs order >= 2")
        results = []

        # direct case: V = z/(e^z - 1) = 1 + alpha z + ...;  w[k] = -[z^(k+1)] V
        v = ps_reciprocal(em_aux(order))
        series_w = [-v[k + 1] for k in range(order - 1)]
        rec_w = list(self.em_weights(order - 1).values)
        bad = [k for k in range(order - 1) if series_w[k] != rec_w[k]]
        results.append(CheckResult(
            "em_weights_vs_series", not bad,
            f"{order - 1} weights compared" if not bad else f"mismatch at derivative orders {bad}",
        ))

        # alternating case: V = 1/(1 + e^z);  w[k] = [z^k] V
        v_alt = ps_reciprocal(boole_aux(order))
        rec_b = list(self.boole_weights(order).values)
        bad = [k for k in range(order) if v_alt[k] != rec_b[k]]
        results.append(CheckResult(
            "boole_weights_vs_series", not bad,
            f"{order} weights compared" if not bad else f"mismatch at derivative orders {bad}",
        ))

        n_ratio = max(1, order // 2)
        try:
            ratios = self.weight_ratio_table(n_ratio)
            bad = [k + 1 for k, r in enumerate(ratios) if r != 2 ** (2 * (k + 1)) - 1]
            detail = f"k = 1..{n_ratio}" if not bad else f"ratio differs from 2^(2k)-1 at k = {bad}"
            results.append(CheckResult("weight_ratio_law", not bad, detail))
        except InternalInconsistencyError as exc:
            results.append(CheckResult("weight_ratio_law", False, str(exc)))

        via_ratio = self.boole_weights_via_ratio(order).values
        bad = [k for k in range(order) if via_ratio[k] != rec_b[k]]
        results.append(CheckResult(
            "boole_two_paths_identical", not bad,
            "tangent path == ratio path" if not bad else f"paths differ at {bad}",
        ))

        for name, u in (
            ("ode_residual_coth", coth_series(order, self)),
            ("ode_residual_tanh", tanh_series(order, self)),
        ):
            res = ode_residual(u)
            ok = res.principal == 0 and not any(res.regular.coeffs)
            results.append(CheckResult(
                name, ok, f"zero through t^{res.regular.order - 1}" if ok else "nonzero residual",
            ))
        return results


def coth_series(order: int, cache: CoefficientCache | None = None) -> LaurentLike:
    """``1/t + 2At - 2Bt^3 + ...`` with a regular part of the given order."""
    cache = cache or default_cache
    order = max(order, 2)
    bern = cache.bernoulli_like(max(1, order // 2)).values
    reg = [Fraction(0)] * order
    for m in range(1, order, 2):
        k = (m + 1) // 2
        reg[m] = 2 * (-1) ** (k + 1) * bern[k - 1]
    return LaurentLike(1, PowerSeries(reg))


def tanh_series(order: int, cache: CoefficientCache | None = None) -> LaurentLike:
    """``t - A't^3 + B't^5 - ...`` with a regular part of the given order."""
    cache = cache or default_cache
    order = max(order, 2)
    tan = (Fraction(1),) + cache.tangent_like(max(1, order // 2)).values
    reg = [Fraction(0)] * order
    for m in range(1, order, 2):
        k = (m - 1) // 2
        reg[m] = (-1) ** k * tan[k]
    return LaurentLike(0, PowerSeries(reg))


def v_direct(order: int, cache: CoefficientCache | None = None) -> PowerSeries:
    """``1 + alpha z + beta z^2 + ...`` rebuilt from the direct-tail weights."""
    cache = cache or default_cache
    if order < 2:
        return PowerSeries([1])
    w = cache.em_weights(order - 1).values
    return PowerSeries([1] + [-c for c in w])


def v_alternating(order: int, cache: CoefficientCache | None = None) -> PowerSeries:
    """``1/2 + alpha z + ...`` rebuilt from the alternating-tail weights."""
    return PowerSeries((cache or default_cache).boole_weights(order).values)


default_cache = CoefficientCache()


def bernoulli_like(count: int) -> CoefficientTable:
    return default_cache.bernoulli_like(count)


def tangent_like(count: int) -> CoefficientTable:
    return default_cache.tangent_like(count)


def em_weights(count: int) -> CoefficientTable:
    return default_cache.em_weights(count)


def boole_weights(count: int) -> CoefficientTable:
    return default_cache.boole_weights(count)


def boole_weights_via_ratio(count: int) -> CoefficientTable:
    return default_cache.boole_weights_via_ratio(count)


def weight_ratio_table(count: int) -> tuple[Fraction, ...]:
    return default_cache.weight_ratio_table(count)


def cross_check(order: int, cache: CoefficientCache | None = None) -> list[CheckResult]:
    return (cache or default_cache).cross_check(order)
