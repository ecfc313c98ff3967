"""Accelerated summation of series tails with exact rational coefficients."""

from .app import OutputRecord, eta, verify_suite, zeta, zeta_via_pi
from .coefficients import (
    CoefficientCache,
    CoefficientTable,
    bernoulli_like,
    boole_weights,
    boole_weights_via_ratio,
    cross_check,
    em_weights,
    tangent_like,
    weight_ratio_table,
)
from .errors import (
    DivergentSeriesError,
    InternalInconsistencyError,
    InvalidArgumentError,
    InvalidPolicyError,
    NonInvertibleSeriesError,
    TailsumError,
    UnsupportedError,
)
from .power_series import LaurentLike, PowerSeries, boole_aux, em_aux, ode_residual, ps_mul, ps_reciprocal
from .summation import SummationReport, TruncationPolicy, boole_tail, em_tail, split_sum
from .term_functions import InversePower, TermFunction, ZeroFunction, fd_derivative_check, inverse_power

__version__ = "0.1.0"
