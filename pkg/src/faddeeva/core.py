"""Evaluation of the Faddeeva function w(z) over the whole complex plane.

Upper half-plane: trapezoidal quadrature of the integral representation
w(z) = (i z / pi) * Int e^{-t^2} / (z^2 - t^2) dt with the residue (pole)
term added back.  Two node layouts are kept, integer and half-integer
multiples of h, and the one whose denominators stay away from real z is
selected per call, so no argument is ever near a singular configuration.

Lower half-plane: the reflection w(-z) = 2 e^{-z^2} - w(z), with either
term dropped in the regions where it cannot affect the result at the
target accuracy.

Real and imaginary axes use all-real arithmetic specializations.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

from .compensated import (
    PI_HI,
    PI_LO,
    cexp_nzsq,
    div_dd,
    exp_mx2,
    exp_px2,
    frac_dd,
    mul_dd,
    sincos_2pi,
    tan_pi,
    two_prod,
    two_sum,
)
from .tuning import EvalParams

_SQRTPI = 1.7724538509055160273
_INV_SQRTPI = 0.5641895835477563

# Rising factorials (1/2)_n; all dyadic, hence exact in binary64.
_POCHHAMMER_HALF = (
    1.0, 0.5, 0.75, 1.875, 6.5625, 29.53125, 162.421875, 1055.7421875,
    7918.06640625, 67303.564453125, 639383.8623046875,
)

# Coefficients of 1/t - cot(t) = sum_{k>=1} c_k t^{2k-1} (c_k = 2*zeta(2k)/pi^{2k}).
# The pairing replaces the cancellation-prone 1/theta - cot(theta) with a
# positive, well-conditioned series; converges fast for theta <= 1.25.
_INV_T_MINUS_COT = (
    0.3333333333333333, 0.022222222222222223, 0.0021164021164021165,
    0.00021164021164021162, 2.1377799155576935e-05, 2.1644042808063972e-06,
    2.192594785187378e-07, 2.221460878997968e-08, 2.2507846516808993e-09,
    2.2805151204592183e-10, 2.3106432599002624e-11, 2.3411706819824884e-12,
    2.3721017400233654e-13, 2.4034415333307706e-14, 2.435195402918337e-15,
    2.4673688045172075e-16, 2.499967277122081e-17, 2.5329964357406348e-18,
    2.5664619702826287e-19, 2.6003696460137274e-20, 2.63472530441538e-21,
    2.669534864157395e-22, 2.7048043221090310e-23, 2.7405397543699513e-24,
)


class Region(enum.Enum):
    """Evaluation regions; tags select which terms of the formula are kept."""

    A = "A"                  # upper strip, pole term required
    B = "B"                  # rest of upper half-plane, pole term negligible/absent
    C = "C"                  # lower, Gaussian and quadrature both required
    D = "D"                  # lower, Gaussian negligible
    E = "E"                  # lower, Gaussian dominant
    REAL_AXIS = "REAL_AXIS"
    IMAG_AXIS = "IMAG_AXIS"


@dataclass(frozen=True)
class WResult:
    value: complex
    region: Region
    overflowed: bool


class _Tables:
    """Per-(h, N) node data: t_n^2 and e^{-t_n^2} in double-double."""

    __slots__ = ("stag", "unstag", "coef_h", "coef_l")

    def __init__(self, h: float, n_terms: int):
        self.stag = self._build(h, n_terms, True)
        self.unstag = self._build(h, n_terms, False)
        # 2h/pi in double-double, shared by every sum
        self.coef_h, self.coef_l = div_dd(2.0 * h, 0.0, PI_HI, PI_LO)

    @staticmethod
    def _build(h: float, n: int, staggered: bool):
        rows = []
        for k in range(1, n + 1):
            t = (k - 0.5) * h if staggered else k * h
            t2h, t2l = two_prod(t, t)
            wh = exp_mx2(t)
            # dd residual of e^{-t^2} ~ m*(1 - t2l) relative to wh
            m = math.exp(-t2h)
            ph, pe = two_prod(m, -t2l)
            wl = ((m - wh) + ph) + pe
            rows.append((t2h, t2l, wh, wl))
        return tuple(rows)


@lru_cache(maxsize=16)
def _tables(h: float, n_terms: int) -> _Tables:
    return _Tables(h, n_terms)


def classify_region(z: complex, params: EvalParams) -> Region:
    """Assign a finite argument to its evaluation region.

    Exact zeros take the axis tags (origin counts as imaginary axis); the
    upper half splits on the strip height pi/h and the pole-neglect cutoff,
    the lower half on the level curves Im(z)^2 - Re(z)^2 = +-g.
    """
    x, y = z.real, z.imag
    if y == 0.0:
        return Region.IMAG_AXIS if x == 0.0 else Region.REAL_AXIS
    if x == 0.0:
        return Region.IMAG_AXIS
    if y > 0.0:
        if y <= params.strip_height and abs(x) <= params.re_cut:
            return Region.A
        return Region.B
    v = (y - x) * (y + x)  # Re(-z^2), factored against cancellation
    if v > params.g_cut:
        return Region.E
    if v < -params.g_cut:
        return Region.D
    return Region.C


def _use_unstaggered(ax: float, h: float) -> bool:
    # Integer nodes are safe iff |Re z|/h sits mid-interval; ties included.
    u = ax / h
    f = u - math.floor(u)
    return 0.25 <= f <= 0.75


def w_upper(z: complex, params: EvalParams) -> complex:
    """w(z) for Im(z) >= 0 by the pole-corrected trapezoidal formula.

    The node loop performs, term by term, the operations of the generic
    trapezoidal engine applied to K(t) = iz/(pi (z^2 - t^2)), so the two
    paths agree to the last bit (asserted by the test suite).
    """
    x, y = z.real, z.imag
    if params.use_asymptotic and math.hypot(x, y) > params.asym_radius:
        return w_asymptotic(z, params.asym_terms)
    h = params.h
    ax = abs(x)
    tab = _tables(h, params.n_terms)
    zre = (x - y) * (x + y)  # Re(z^2), factored against cancellation
    zim = 2.0 * x * y
    if not (math.isfinite(zre) and math.isfinite(zim)):
        # |z|^2 overflowed; the quadrature is void and w ~ i/(sqrt(pi) z)
        return complex(0.0, _INV_SQRTPI) / z
    pref = 1j * z / math.pi
    two_h = 2.0 * h
    unstag = _use_unstaggered(ax, h)
    rows = tab.unstag if unstag else tab.stag
    total = h * (pref / complex(zre, zim)) if unstag else 0j
    for t2h, t2l, wh, _wl in rows:
        total += two_h * (pref / complex(zre - t2h - t2l, zim)) * wh
    if y <= params.strip_height and ax <= params.re_cut:
        p = 1.0 if y == params.strip_height else 2.0
        gauss = cexp_nzsq(z)
        mag = math.exp(2.0 * math.pi * y / h)
        fh, fl = frac_dd(ax, h)
        sn, cs = sincos_2pi(fh, fl)
        if x < 0.0:
            sn = -sn
        q = complex(mag * cs, -mag * sn)  # e^{-2 pi i z / h}
        denom = (1.0 - q) if unstag else (1.0 + q)
        total += p * gauss / denom
    return total


def w(z: complex, params: EvalParams) -> WResult:
    """w(z) anywhere in the plane, with region tag and overflow flag."""
    x, y = z.real, z.imag
    if not (math.isfinite(x) and math.isfinite(y)):
        # NaN propagates; infinities have no meaningful value either.
        return WResult(complex(math.nan, math.nan), Region.B, False)
    if y == 0.0 and x != 0.0:
        value = complex(exp_mx2(x), im_w_real(x, params))
        return WResult(value, Region.REAL_AXIS, False)
    if x == 0.0:
        value = complex(erfcx_real(y, params), 0.0)
        return WResult(value, Region.IMAG_AXIS, not math.isfinite(value.real))
    if y > 0.0:
        region = classify_region(z, params)
        return WResult(w_upper(z, params), region, False)
    region = classify_region(z, params)
    if region is Region.E:
        value = 2.0 * cexp_nzsq(z)
    elif region is Region.D:
        value = -w_upper(-z, params)
    else:
        value = 2.0 * cexp_nzsq(z) - w_upper(-z, params)
    overflowed = not (math.isfinite(value.real) and math.isfinite(value.imag))
    return WResult(value, region, overflowed)


def _sum_quotients(x2h: float, x2l: float, rows, sub: bool) -> tuple[float, float]:
    """sum of w_n / (x^2 -+ t_n^2) in double-double (compensated)."""
    sh = 0.0
    sl = 0.0
    for t2h, t2l, wh, wl in rows:
        if sub:
            dh, de = two_sum(x2h, -t2h)
            dl = de + (x2l - t2l)
        else:
            dh, de = two_sum(x2h, t2h)
            dl = de + (x2l + t2l)
        qh, ql = div_dd(wh, wl, dh, dl)
        sh, e = two_sum(sh, qh)
        sl += e + ql
    return two_sum(sh, sl)


def erfcx_real(x: float, params: EvalParams) -> float:
    """Scaled complementary error function e^{x^2} erfc(x) for real x.

    Real-arithmetic specialization of w(ix): every denominator is
    -(x^2 + t_n^2), so the half-integer node layout is always safe.
    Negative arguments reflect through 2 e^{x^2}, overflowing to +inf
    below x ~ -26.6.
    """
    if x != x:
        return x
    if x < 0.0:
        return 2.0 * exp_px2(x) - erfcx_real(-x, params)
    if params.use_asymptotic and x > params.asym_radius:
        return _erfcx_asymptotic(x, params.asym_terms)
    tab = _tables(params.h, params.n_terms)
    x2h, x2l = two_prod(x, x)
    if not math.isfinite(x2h):
        return _INV_SQRTPI / x
    sh, sl = _sum_quotients(x2h, x2l, tab.stag, sub=False)
    ch, cl = mul_dd(tab.coef_h, tab.coef_l, x, 0.0)
    vh, vl = mul_dd(ch, cl, sh, sl)
    if x <= params.strip_height:
        p = 1.0 if x == params.strip_height else 2.0
        pole = p * exp_px2(x) / (1.0 + math.exp(2.0 * math.pi * x / params.h))
        vh, e = two_sum(vh, pole)
        vl += e
    return vh + vl


def im_w_real(x: float, params: EvalParams) -> float:
    """Imaginary part of w along the real axis; odd in x.

    The pole term reduces to e^{-x^2} tan(pi (x/h - r)) with r the nearest
    half-integer or integer, depending on the node layout; for the
    integer-node layout in its first period the cancellation between 1/theta
    and cot(theta) is evaluated by a series to keep full accuracy.
    """
    if x != x:
        return x
    if x == 0.0:
        return 0.0
    sign = math.copysign(1.0, x)
    ax = abs(x)
    if params.use_maclaurin and ax <= params.maclaurin_radius:
        return sign * _imw_maclaurin(ax)
    if params.use_asymptotic and ax > params.asym_radius:
        return sign * _imw_asymptotic(ax, params.asym_terms)
    h = params.h
    tab = _tables(h, params.n_terms)
    x2h, x2l = two_prod(ax, ax)
    if not math.isfinite(x2h):
        return sign * (_INV_SQRTPI / ax)
    unstag = _use_unstaggered(ax, h)
    rows = tab.unstag if unstag else tab.stag
    sh, sl = _sum_quotients(x2h, x2l, rows, sub=True)
    ch, cl = mul_dd(tab.coef_h, tab.coef_l, ax, 0.0)
    vh, vl = mul_dd(ch, cl, sh, sl)
    theta = math.pi * ax / h
    if unstag and theta < 1.25 and ax <= params.re_cut:
        # first period of the integer-node layout: pair 1/theta with cot(theta)
        em = exp_mx2(ax)
        pair = _inv_t_minus_cot(theta)
        return sign * (em * pair - math.expm1(-x2h) / theta + (vh + vl))
    if unstag:
        rh, rl = div_dd(h, 0.0, math.pi * ax, 0.0)
        vh, e = two_sum(vh, rh)
        vl += e + rl
    if ax <= params.re_cut:
        fh, fl = frac_dd(ax, h)
        r = 0.5 if unstag else math.floor(fh + 0.5)
        tn = tan_pi(fh - r, fl)
        m = math.exp(-x2h)
        emh, eml = mul_dd(m, 0.0, 1.0, -x2l)
        ph, pl = mul_dd(emh, eml, tn, 0.0)
        vh, e = two_sum(vh, ph)
        vl += e + pl
    return sign * (vh + vl)


def w_asymptotic(z: complex, terms: int) -> complex:
    """Large-argument expansion (i/sqrt(pi)) sum (1/2)_n / z^{2n+1}.

    Valid in the sector -pi/4 < arg(z) < 5pi/4; the caller gates
    applicability.  Evaluated by Horner in 1/z^2.
    """
    if terms < 1 or terms > len(_POCHHAMMER_HALF):
        raise ValueError(f"terms must be in 1..{len(_POCHHAMMER_HALF)}, got {terms}")
    zsq = z * z
    u = 1.0 / zsq if (math.isfinite(zsq.real) and math.isfinite(zsq.imag)) else 0j
    acc = complex(_POCHHAMMER_HALF[terms - 1], 0.0)
    for n in range(terms - 2, -1, -1):
        acc = acc * u + _POCHHAMMER_HALF[n]
    return complex(0.0, _INV_SQRTPI) * acc / z


def cond_w(z: complex, params: EvalParams) -> complex:
    """Relative condition number C = 2iz/(sqrt(pi) w(z)) - 2z^2."""
    wz = w(z, params).value
    if wz == 0:
        return complex(math.inf, math.inf)
    return 2j * z / (_SQRTPI * wz) - 2.0 * z * z


def _inv_t_minus_cot(t: float) -> float:
    t2 = t * t
    acc = 0.0
    for c in reversed(_INV_T_MINUS_COT):
        acc = acc * t2 + c
    return acc * t


def _build_imw_maclaurin(n: int = 7) -> tuple[float, ...]:
    # (2/sqrt(pi)) * (-2)^k / (2k+1)!!; 7 terms hold truncation below eps
    # out to |x| = 0.05
    coefs = []
    num = 1.0
    dfact = 1.0
    for k in range(n):
        if k:
            num *= -2.0
            dfact *= 2 * k + 1
        coefs.append(1.1283791670955126 * num / dfact)
    return tuple(coefs)


_IMW_MACLAURIN = _build_imw_maclaurin()


def _imw_maclaurin(ax: float) -> float:
    x2 = ax * ax
    acc = 0.0
    for c in reversed(_IMW_MACLAURIN):
        acc = acc * x2 + c
    return acc * ax


def _imw_asymptotic(ax: float, terms: int) -> float:
    u = 1.0 / (ax * ax)
    acc = _POCHHAMMER_HALF[terms - 1]
    for n in range(terms - 2, -1, -1):
        acc = acc * u + _POCHHAMMER_HALF[n]
    return _INV_SQRTPI * acc / ax


def _erfcx_asymptotic(x: float, terms: int) -> float:
    u = -1.0 / (x * x)
    acc = _POCHHAMMER_HALF[terms - 1]
    for n in range(terms - 2, -1, -1):
        acc = acc * u + _POCHHAMMER_HALF[n]
    return _INV_SQRTPI * acc / x
