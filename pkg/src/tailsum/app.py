"""Zeta and eta values, the pi identities, output records and the self-check suite."""

from __future__ import annotations

import csv
import decimal
import io
import json
import sys
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import Optional, TextIO

from .coefficients import CheckResult, CoefficientCache, default_cache, v_alternating, v_direct, coth_series
from .constants import PI
from .errors import DivergentSeriesError, InvalidArgumentError, UnsupportedError
from .power_series import boole_aux, em_aux, ps_mul, ps_reciprocal, ps_substitute_scale, PowerSeries
from .summation import SummationReport, TruncationPolicy, split_sum
from .term_functions import TermFunction, Value, inverse_power

__all__ = [
    "DEFAULT_SPLIT",
    "DEFAULT_DIGITS",
    "OutputRecord",
    "render_decimal",
    "record_from_report",
    "zeta",
    "zeta_via_pi",
    "eta",
    "sum_inverse_power",
    "verify_suite",
]

DEFAULT_SPLIT = 10
DEFAULT_DIGITS = 20

# working precision for pi powers and decimal comparisons
_WORK_PREC = 120

CSV_FIELDS = (
    "value_decimal", "exact_num", "exact_den", "terms_used", "k_star",
    "error_estimate", "split", "mode",
)


def render_decimal(value: Value, digits: int) -> str:
    """Correctly rounded (half-even) decimal with ``digits`` significant digits."""
    if digits < 1:
        raise InvalidArgumentError("digits must be >= 1")
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = decimal.ROUND_HALF_EVEN
        if isinstance(value, Decimal):
            d = +value
        else:
            value = Fraction(value)
            d = Decimal(value.numerator) / Decimal(value.denominator)
    return str(d)


@dataclass(frozen=True)
class OutputRecord:
    value_decimal: str
    exact_numerator: Optional[int]
    exact_denominator: Optional[int]
    terms_used: int
    k_star: Optional[int]
    error_estimate: Optional[str]
    split: Optional[str]
    mode: str
    value: Optional[Value] = field(default=None, compare=False, repr=False)
    report: Optional[SummationReport] = field(default=None, compare=False, repr=False)

    @property
    def exact(self) -> Optional[Fraction]:
        if self.exact_numerator is None:
            return None
        return Fraction(self.exact_numerator, self.exact_denominator)

    def to_dict(self) -> dict:
        exact = None
        if self.exact_numerator is not None:
            exact = {"num": str(self.exact_numerator), "den": str(self.exact_denominator)}
        return {
            "value_decimal": self.value_decimal,
            "exact": exact,
            "terms_used": self.terms_used,
            "k_star": self.k_star,
            "error_estimate": self.error_estimate,
            "split": self.split,
            "mode": self.mode,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> OutputRecord:
        d = json.loads(text)
        exact = d.get("exact")
        return cls(
            value_decimal=d["value_decimal"],
            exact_numerator=int(exact["num"]) if exact else None,
            exact_denominator=int(exact["den"]) if exact else None,
            terms_used=d["terms_used"],
            k_star=d["k_star"],
            error_estimate=d["error_estimate"],
            split=d["split"],
            mode=d["mode"],
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        w.writerow([
            self.value_decimal,
            "" if self.exact_numerator is None else self.exact_numerator,
            "" if self.exact_denominator is None else self.exact_denominator,
            self.terms_used,
            "" if self.k_star is None else self.k_star,
            self.error_estimate or "",
            self.split or "",
            self.mode,
        ])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> OutputRecord:
        row = next(csv.DictReader(io.StringIO(text)))
        opt = lambda s, conv: conv(s) if s != "" else None  # noqa: E731
        return cls(
            value_decimal=row["value_decimal"],
            exact_numerator=opt(row["exact_num"], int),
            exact_denominator=opt(row["exact_den"], int),
            terms_used=int(row["terms_used"]),
            k_star=opt(row["k_star"], int),
            error_estimate=opt(row["error_estimate"], str),
            split=opt(row["split"], str),
            mode=row["mode"],
        )

    def to_plain(self) -> str:
        lines = [f"value          {self.value_decimal}"]
        if self.exact_numerator is not None:
            lines.append(f"exact          {self.exact_numerator}/{self.exact_denominator}")
        lines += [
            f"terms_used     {self.terms_used}",
            f"k_star         {self.k_star}",
            f"error_estimate {self.error_estimate}",
            f"split          {self.split}",
            f"mode           {self.mode}",
        ]
        return "\n".join(lines) + "\n"


def _fmt_split(x) -> str:
    x = Fraction(x) if not isinstance(x, Decimal) else x
    return str(x)


def record_from_report(report: SummationReport, digits: int) -> OutputRecord:
    exact = report.mode == "exact"
    nonzero = sum(1 for t in report.terms if t != 0)
    return OutputRecord(
        value_decimal=render_decimal(report.value, digits),
        exact_numerator=report.value.numerator if exact else None,
        exact_denominator=report.value.denominator if exact else None,
        terms_used=nonzero,
        k_star=report.k_star,
        error_estimate=render_decimal(report.error_estimate, 6) if report.error_estimate else "0",
        split=_fmt_split(report.split_point),
        mode=report.mode,
        value=report.value,
        report=report,
    )


def _policy(policy: Optional[TruncationPolicy]) -> TruncationPolicy:
    return policy if policy is not None else TruncationPolicy.smallest_term()


def zeta(
    n: int,
    split: int = DEFAULT_SPLIT,
    policy: Optional[TruncationPolicy] = None,
    digits: int = DEFAULT_DIGITS,
    cache: Optional[CoefficientCache] = None,
) -> OutputRecord:
    """``1 + 1/2^n + 1/3^n + ...`` as exact head ``1..split-1`` plus tail."""
    if n <= 1:
        raise DivergentSeriesError(
            f"zeta({n}) diverges: for n = 1 it is the harmonic series 1 + 1/2 + 1/3 + ..., "
            "and smaller exponents only make the terms larger; n must be >= 2"
        )
    if split < 1:
        raise InvalidArgumentError("split must be >= 1")
    report = split_sum(inverse_power(n), 1, split, _policy(policy), cache=cache)
    return record_from_report(report, digits)


def eta(
    n: int,
    split: int = DEFAULT_SPLIT,
    policy: Optional[TruncationPolicy] = None,
    digits: int = DEFAULT_DIGITS,
    cache: Optional[CoefficientCache] = None,
    weight_path: str = "tangent",
) -> OutputRecord:
    """``1 - 1/2^n + 1/3^n - ...``; converges for every ``n >= 1``."""
    if n < 1:
        raise InvalidArgumentError("eta needs n >= 1")
    if split < 1:
        raise InvalidArgumentError("split must be >= 1")
    report = split_sum(
        inverse_power(n), 1, split, _policy(policy),
        alternating=True, cache=cache, weight_path=weight_path,
    )
    return record_from_report(report, digits)


def sum_inverse_power(
    exponent,
    start=1,
    split=DEFAULT_SPLIT,
    policy: Optional[TruncationPolicy] = None,
    alternating: bool = False,
    digits: int = DEFAULT_DIGITS,
    precision: Optional[int] = None,
) -> OutputRecord:
    f: TermFunction = inverse_power(exponent, precision or max(60, digits + 20))
    report = split_sum(f, start, split, _policy(policy), alternating=alternating)
    return record_from_report(report, digits)


def pi_power_value(n: int, cache: Optional[CoefficientCache] = None) -> Decimal:
    """``zeta(n)`` for even ``n`` as ``T_{n/2} * pi^n``, at working precision."""
    if n < 2 or n % 2:
        raise UnsupportedError(f"pi identities exist only for even n >= 2, got {n}")
    coeff = (cache or default_cache).bernoulli_like(n // 2).values[-1]
    with decimal.localcontext() as ctx:
        ctx.prec = _WORK_PREC
        return Decimal(coeff.numerator) / Decimal(coeff.denominator) * PI**n


def zeta_via_pi(n: int, digits: int = DEFAULT_DIGITS, cache: Optional[CoefficientCache] = None) -> OutputRecord:
    value = pi_power_value(n, cache)
    return OutputRecord(
        value_decimal=render_decimal(value, digits),
        exact_numerator=None,
        exact_denominator=None,
        terms_used=1,
        k_star=None,
        error_estimate=None,
        split=None,
        mode="pi-identity",
        value=value,
    )


def _as_decimal(v: Value) -> Decimal:
    with decimal.localcontext() as ctx:
        ctx.prec = _WORK_PREC
        if isinstance(v, Decimal):
            return +v
        return Decimal(v.numerator) / Decimal(v.denominator)


def _rel_err(a: Value, b: Value) -> Decimal:
    with decimal.localcontext() as ctx:
        ctx.prec = _WORK_PREC
        a, b = _as_decimal(a), _as_decimal(b)
        return abs(a - b) / abs(b)


def _abs_err(a: Value, b: Value) -> Decimal:
    with decimal.localcontext() as ctx:
        ctx.prec = _WORK_PREC
        return abs(_as_decimal(a) - _as_decimal(b))


def _series_checks(order: int, cache: CoefficientCache) -> list[CheckResult]:
    out = []
    for name, v, aux in (
        ("unit_product_direct", v_direct(order, cache), em_aux(order)),
        ("unit_product_alternating", v_alternating(order, cache), boole_aux(order)),
    ):
        ok = ps_mul(v, aux).is_unit()
        out.append(CheckResult(name, ok, f"V * aux == 1 through z^{order - 1}"))

    # V = t*u - t with u = coth t, then t = z/2
    u = coth_series(order, cache)
    tu_minus_t = [u.principal] + list(u.regular.coeffs[: order - 1])
    tu_minus_t[1] -= 1
    bridged = ps_substitute_scale(PowerSeries(tu_minus_t), Fraction(1, 2))
    ok = bridged == ps_reciprocal(em_aux(order))
    out.append(CheckResult("coth_bridge", ok, "t*u - t at t = z/2 equals z/(e^z - 1)"))
    return out


def _fidelity_checks(cache: CoefficientCache) -> list[CheckResult]:
    bern = cache.bernoulli_like(5).values
    tan = cache.tangent_like(4).values
    want_b = tuple(Fraction(1, d) for d in (6, 90, 945, 9450, 93555))
    want_t = (Fraction(1, 3), Fraction(2, 15), Fraction(17, 315), Fraction(62, 2835))
    return [
        CheckResult("bernoulli_like_table", bern == want_b, "A..E = 1/6, 1/90, 1/945, 1/9450, 1/93555"),
        CheckResult("tangent_like_table", tan == want_t, "1/3, 2/15, 17/315, 62/2835"),
    ]


def _numeric_checks(cache: CoefficientCache) -> list[CheckResult]:
    out = []
    for n in (2, 4, 6):
        err = _rel_err(zeta(n, cache=cache).value, pi_power_value(n, cache))
        out.append(CheckResult(f"zeta({n})_vs_pi_identity", err <= Decimal("1e-18"), f"relative error {err:.2e}"))
    with decimal.localcontext() as ctx:
        ctx.prec = _WORK_PREC
        ln2 = Decimal(2).ln()
    err = _abs_err(eta(1, cache=cache).value, ln2)
    out.append(CheckResult("eta(1)_vs_ln2", err <= Decimal("1e-12"), f"absolute error {err:.2e}"))
    err = _abs_err(eta(2, cache=cache).value, pi_power_value(2, cache) / 2)
    out.append(CheckResult("eta(2)_vs_pi2_over_12", err <= Decimal("1e-12"), f"absolute error {err:.2e}"))
    return out


def verify_suite(
    order: int = 40,
    cache: Optional[CoefficientCache] = None,
    out: Optional[TextIO] = None,
) -> tuple[int, list[CheckResult]]:
    """Run every self-check, print one PASS/FAIL line each, return (status, results)."""
    cache = cache or default_cache
    out = out or sys.stdout
    results: list[CheckResult] = []
    results += _fidelity_checks(cache)
    results += cache.cross_check(order)
    results += _series_checks(order, cache)
    results += _numeric_checks(cache)
    for r in results:
        out.write(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}\n")
    failed = sum(not r.passed for r in results)
    out.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return (0 if failed == 0 else 1), results
