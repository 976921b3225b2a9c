"""Derivation of all evaluation constants from a target relative accuracy.

Every knob of the evaluation formula (node spacing, truncation count, the
cutoffs that let whole terms be dropped per region) follows from the
requested relative error; nothing is hand-fitted to double precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

#: IEEE binary64 machine epsilon; the unit in which relative errors are reported.
DEPS = 2.220446049250313e-16

_SQRTPI = 1.7724538509055160273
_SQRT2 = 1.4142135623730951


@dataclass(frozen=True)
class EvalParams:
    """Derived tuning constants; immutable and safe to share across threads."""

    eps: float
    h: float                 # trapezoidal node spacing
    n_terms: int             # series truncation N
    strip_height: float      # pi/h, top of the pole-corrected strip
    re_cut: float            # |Re z| beyond which the pole term is negligible
    g_cut: float             # level-curve constant for the reflected Gaussian
    asym_radius: float = 30.0
    asym_terms: int = 6
    use_asymptotic: bool = False
    use_maclaurin: bool = False
    maclaurin_radius: float = 0.05


def step_size(eps: float) -> float:
    """Node spacing h for target accuracy eps.

    h0 = pi/sqrt(log(2/eps)) makes the quadrature error 2*e^{-pi^2/h^2}
    equal eps; the empirical shrink h0*(1 - 0.06*h0) restores the margin the
    large-|z| approximations in that bound give away.
    """
    _check_eps(eps)
    h0 = math.pi / math.sqrt(math.log(2.0 / eps))
    return h0 * (1.0 - 0.06 * h0)


def truncation_terms(eps: float, h: float) -> int:
    """Smallest N with tail term 2h*e^{-N^2 h^2}/sqrt(pi) below eps.

    The same N serves the staggered and unstaggered node layouts.
    """
    _check_eps(eps)
    if not (h > 0.0):
        raise ValueError(f"node spacing must be positive, got {h}")
    arg = 2.0 * h / (_SQRTPI * eps)
    if arg <= 1.0:
        raise ValueError(f"no truncation point: 2h/(sqrt(pi)*eps) = {arg} <= 1")
    return max(1, math.ceil(math.sqrt(math.log(arg)) / h))


def pole_neglect_cutoff(eps: float) -> float:
    """Smallest r with r^2 >= log(sqrt(pi)*r / (sqrt(2)*eps)).

    Beyond |Re z| = r the pole term of the evaluation formula is below eps
    relative to |w|; ~6.17 at double precision.
    """
    _check_eps(eps)
    c = _SQRTPI / (_SQRT2 * eps)
    r = _fixed_point(lambda s: math.sqrt(math.log(c * s)), 5.0)
    # nudge up until the defining inequality holds with non-negative residual
    while r * r < math.log(c * r):
        r = math.nextafter(r, math.inf)
    return r


def gaussian_cutoff(eps: float) -> float:
    """Level constant g bounding where the reflected Gaussian term matters.

    Fixed point of g = log(2*sqrt(pi)*g/eps); the level curves
    Im(z)^2 - Re(z)^2 = +-g split the lower half-plane into
    Gaussian-dominant / mixed / Gaussian-negligible regions.  ~41.024 at
    double precision.
    """
    _check_eps(eps)
    c = 2.0 * _SQRTPI / eps
    g = _fixed_point(lambda s: math.log(c * s), 5.0)
    while g < math.log(c * g):
        g = math.nextafter(g, math.inf)
    return g


def build_params(
    eps: float,
    use_asymptotic: bool = False,
    use_maclaurin: bool = False,
    h_override: float | None = None,
) -> EvalParams:
    """Assemble EvalParams for a target accuracy.

    h_override replaces the derived spacing (debug aid for the CLI); the
    truncation count and strip height are re-derived from it.
    """
    _check_eps(eps)
    h = step_size(eps) if h_override is None else h_override
    if not (h > 0.0):
        raise ValueError(f"node spacing must be positive, got {h}")
    return EvalParams(
        eps=eps,
        h=h,
        n_terms=truncation_terms(eps, h),
        strip_height=math.pi / h,
        re_cut=pole_neglect_cutoff(eps),
        g_cut=gaussian_cutoff(eps),
        use_asymptotic=use_asymptotic,
        use_maclaurin=use_maclaurin,
    )


def _fixed_point(fn, start: float, tol: float = 1e-9, max_iter: int = 100) -> float:
    x = start
    for _ in range(max_iter):
        nxt = fn(x)
        if abs(nxt - x) < tol:
            return nxt
        x = nxt
    raise RuntimeError(f"fixed-point iteration did not converge from {start}")


def _check_eps(eps: float) -> None:
    if not (0.0 < eps < 1.0):
        raise ValueError(f"target accuracy must be in (0, 1), got {eps}")
