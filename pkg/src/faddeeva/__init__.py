"""Double-precision Faddeeva and error-like functions.

w(z) is evaluated by an exponentially convergent trapezoidal rule with
residue corrections; erf, erfc, erfcx, erfi and the Dawson integral follow
from it through closed identities.
"""

from .core import (
    Region,
    WResult,
    classify_region,
    cond_w,
    erfcx_real,
    im_w_real,
    w,
    w_asymptotic,
    w_upper,
)
from .functions import (
    FunctionKind,
    dawson,
    default_params,
    erf,
    erfc,
    erfcx,
    erfi,
    evaluate,
    evaluate_real,
    im_w,
    wofz,
)
from .grids import GridSpec, grid_points
from .quadrature import (
    Kernel,
    NodeScheme,
    brute_force_integral,
    error_estimate,
    kernel_is_even,
    trap_quadrature,
)
from .tuning import (
    DEPS,
    EvalParams,
    build_params,
    gaussian_cutoff,
    pole_neglect_cutoff,
    step_size,
    truncation_terms,
)

__version__ = "0.1.0"

__all__ = [
    "DEPS",
    "EvalParams",
    "FunctionKind",
    "GridSpec",
    "Kernel",
    "NodeScheme",
    "Region",
    "WResult",
    "brute_force_integral",
    "build_params",
    "classify_region",
    "cond_w",
    "dawson",
    "default_params",
    "erf",
    "erfc",
    "erfcx",
    "erfcx_real",
    "erfi",
    "error_estimate",
    "evaluate",
    "evaluate_real",
    "gaussian_cutoff",
    "grid_points",
    "im_w",
    "im_w_real",
    "kernel_is_even",
    "pole_neglect_cutoff",
    "step_size",
    "trap_quadrature",
    "truncation_terms",
    "w",
    "w_asymptotic",
    "w_upper",
    "wofz",
]
