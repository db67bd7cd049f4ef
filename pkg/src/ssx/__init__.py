"""Self-similar extrapolation of truncated small-variable expansions.

Typical use::

    from ssx import normalize, build_iterated_root, amplitude_iterated_root
    f = normalize([1, 2, 3])
    amplitude_iterated_root(build_iterated_root(f, 2, 1)).amplitude
"""

from .errors import *  # noqa: F401,F403
from .errors import SSXError
from .exponent import ExponentSeries, estimate_exponent, exponent_series
from .factor import FactorApproximant, amplitude_factor, build_factor, eval_factor, factor_moments
from .methods import MethodTag, parse_tag, run_method
from .pade import PadeApproximant, build_pade, eval_pade, pade_amplitude
from .roots import (
    CorrectedApproximant,
    IteratedRoot,
    additive_limit,
    amplitude_corrected,
    amplitude_iterated_root,
    build_corrected,
    build_iterated_root,
    eval_corrected,
    eval_iterated_root,
    generic_root_limit,
    tower_limit,
    tower_series,
)
from .series import (
    AsymptoticForm,
    PowerSeries,
    Prefactor,
    ReducedExpansion,
    change_variable_power,
    from_puiseux,
    normalize,
    parse_scalar,
    reduced_from_literal,
    reduced_to_literal,
    series_exp,
    series_log,
    series_pow,
    series_xdlog,
)
from .transforms import (
    DoubleRenormResult,
    PowerTransformSolution,
    double_renorm_amplitude,
    power_transform_amplitude,
    power_transform_extrapolate,
)

__version__ = "0.1.0"
