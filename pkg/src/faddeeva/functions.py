"""erf, erfc, erfcx, erfi and the Dawson integral, derived from w(z).

Each function reduces to one or two evaluations of the Faddeeva function
through closed identities; the sign of Re(z) (Im(z) for erfi) selects the
branch that avoids mixing huge and tiny exponentials.  Real arguments are
routed through all-real specializations.
"""

from __future__ import annotations

import enum
import math

from .compensated import (
    PI_HI,
    PI_LO,
    SQRTPI_2_HI,
    SQRTPI_2_LO,
    cexp_nzsq,
    cexp_pzsq,
    div_dd,
    exp_mx2,
    exp_px2,
    mul_dd,
    two_prod,
    two_sum,
)
from .core import _sum_quotients, _tables, erfcx_real, im_w_real, w
from .tuning import DEPS, EvalParams, build_params


class FunctionKind(enum.Enum):
    ERF = "erf"
    ERFC = "erfc"
    ERFCX = "erfcx"
    ERFI = "erfi"
    DAWSON = "dawson"
    W = "w"
    IM_W = "imw"


_REAL_VALUED = frozenset(
    {FunctionKind.ERF, FunctionKind.ERFC, FunctionKind.ERFCX,
     FunctionKind.ERFI, FunctionKind.DAWSON, FunctionKind.IM_W}
)


def evaluate(kind: FunctionKind, z: complex, params: EvalParams) -> complex:
    """Evaluate an error-like function at a complex argument.

    Arguments on the real axis defer to the real specializations (the
    results are real there for every kind except w itself).
    """
    z = complex(z)
    if z.imag == 0.0 and kind in _REAL_VALUED and math.isfinite(z.real):
        return complex(evaluate_real(kind, z.real, params), 0.0)
    if kind is FunctionKind.W:
        return w(z, params).value
    if kind is FunctionKind.IM_W:
        return complex(w(z, params).value.imag, 0.0)
    iz = complex(-z.imag, z.real)
    niz = complex(z.imag, -z.real)
    if kind is FunctionKind.ERFCX:
        return w(iz, params).value
    if kind is FunctionKind.ERFC:
        if z.real >= 0.0:
            return cexp_nzsq(z) * w(iz, params).value
        return 2.0 - cexp_nzsq(z) * w(niz, params).value
    if kind is FunctionKind.ERF:
        if z.real >= 0.0:
            return 1.0 - cexp_nzsq(z) * w(iz, params).value
        return cexp_nzsq(z) * w(niz, params).value - 1.0
    if kind is FunctionKind.ERFI:
        if z.imag <= 0.0:
            return -1j + 1j * cexp_pzsq(z) * w(-z, params).value
        return 1j - 1j * cexp_pzsq(z) * w(z, params).value
    if kind is FunctionKind.DAWSON:
        half = complex(0.0, SQRTPI_2_HI + SQRTPI_2_LO)
        if z.real >= 0.0:
            return half * (cexp_nzsq(z) - w(z, params).value)
        return half * (w(-z, params).value - cexp_nzsq(z))
    raise ValueError(f"unhandled kind {kind!r}")


def evaluate_real(kind: FunctionKind, x: float, params: EvalParams) -> float:
    """Real-axis evaluation using only real arithmetic."""
    x = float(x)
    if kind is FunctionKind.W:
        raise ValueError("w(x) is complex for real x; use evaluate() or im_w")
    if x != x:
        return x
    mac = params.use_maclaurin and abs(x) <= params.maclaurin_radius
    if kind is FunctionKind.ERFCX:
        return erfcx_real(x, params)
    if kind is FunctionKind.ERFC:
        if x < 0.0:
            return 2.0 - exp_mx2(x) * erfcx_real(-x, params)
        return exp_mx2(x) * erfcx_real(x, params)
    if kind is FunctionKind.ERF:
        if mac:
            return _horner_odd(_ERF_SERIES, x)
        return _erf_real(x, params)
    if kind is FunctionKind.ERFI:
        if mac:
            return _horner_odd(_ERFI_SERIES, x)
        return exp_px2(x) * im_w_real(x, params)
    if kind is FunctionKind.DAWSON:
        if mac:
            return _horner_odd(_DAWSON_SERIES, x)
        v = im_w_real(x, params)
        ph, pe = two_prod(SQRTPI_2_HI, v)
        return ph + (pe + SQRTPI_2_LO * v)
    if kind is FunctionKind.IM_W:
        return im_w_real(x, params)
    raise ValueError(f"unhandled kind {kind!r}")


def _erf_real(x: float, params: EvalParams) -> float:
    """erf on the real axis, folded form of 1 - e^{-x^2} w(ix).

    The constant 1 and the pole term of w(ix) combine exactly into
    tanh(pi*x/h); near the origin tanh is paired with its linear term
    (series) so the small result is not assembled from O(1) pieces.
    """
    if x == 0.0:
        return 0.0
    if x < 0.0:
        return -_erf_real(-x, params)
    tab = _tables(params.h, params.n_terms)
    x2h, x2l = two_prod(x, x)
    if not math.isfinite(x2h):
        return 1.0
    sh, sl = _sum_quotients(x2h, x2l, tab.stag, sub=False)
    ch, cl = mul_dd(tab.coef_h, tab.coef_l, x, 0.0)
    sph, spl = mul_dd(ch, cl, sh, sl)
    m = math.exp(-x2h)
    emh, eml = mul_dd(m, 0.0, 1.0, -x2l)
    th, tl = mul_dd(emh, eml, sph, spl)  # e^{-x^2} (2hx/pi) S
    ph, pe = two_prod(PI_HI, x)
    qh, ql = div_dd(ph, pe + PI_LO * x, params.h, 0.0)  # theta = pi x / h
    if qh <= 1.0:
        dh, e = two_sum(qh, -th)
        dl = e + (ql - tl)
        hi, e2 = two_sum(dh, _tanh_minus_theta(qh))
        return hi + (e2 + dl)
    hi, e = two_sum(math.tanh(qh), -th)
    return hi + (e - tl)


# -- convenience wrappers -------------------------------------------------

_DEFAULT_PARAMS: EvalParams | None = None


def default_params() -> EvalParams:
    """Shared double-precision parameter set."""
    global _DEFAULT_PARAMS
    if _DEFAULT_PARAMS is None:
        _DEFAULT_PARAMS = build_params(DEPS)
    return _DEFAULT_PARAMS


def _dispatch(kind: FunctionKind, z, params):
    p = params if params is not None else default_params()
    if isinstance(z, complex):
        return evaluate(kind, z, p)
    return evaluate_real(kind, float(z), p)


def erf(z, params: EvalParams | None = None):
    return _dispatch(FunctionKind.ERF, z, params)


def erfc(z, params: EvalParams | None = None):
    return _dispatch(FunctionKind.ERFC, z, params)


def erfcx(z, params: EvalParams | None = None):
    return _dispatch(FunctionKind.ERFCX, z, params)


def erfi(z, params: EvalParams | None = None):
    return _dispatch(FunctionKind.ERFI, z, params)


def dawson(z, params: EvalParams | None = None):
    return _dispatch(FunctionKind.DAWSON, z, params)


def wofz(z, params: EvalParams | None = None) -> complex:
    p = params if params is not None else default_params()
    return w(complex(z), p).value


def im_w(x: float, params: EvalParams | None = None) -> float:
    p = params if params is not None else default_params()
    return im_w_real(float(x), p)


# -- series tables --------------------------------------------------------

def _horner_odd(coefs: tuple[float, ...], x: float) -> float:
    x2 = x * x
    acc = 0.0
    for c in reversed(coefs):
        acc = acc * x2 + c
    return acc * x


def _build_series(n: int = 7):
    # Maclaurin coefficients of erf, erfi and the Dawson integral; 7 terms
    # keep the truncation below eps for |x| <= 0.05.
    two_over_sqrtpi = 1.1283791670955126
    erf_c, erfi_c, daw_c = [], [], []
    fact = 1.0
    num = 1.0  # (-2)^k
    dfact = 1.0  # (2k+1)!!
    for k in range(n):
        if k:
            fact *= k
            num *= -2.0
            dfact *= 2 * k + 1
        sgn = -1.0 if k % 2 else 1.0
        erf_c.append(two_over_sqrtpi * sgn / (fact * (2 * k + 1)))
        erfi_c.append(two_over_sqrtpi / (fact * (2 * k + 1)))
        daw_c.append(num / dfact)
    return tuple(erf_c), tuple(erfi_c), tuple(daw_c)


_ERF_SERIES, _ERFI_SERIES, _DAWSON_SERIES = _build_series()


def _dawson_series(x: float) -> float:
    return _horner_odd(_DAWSON_SERIES, x)


# tanh(t) - t = sum_{k>=2} a_k t^{2k-1}; pairs tanh with its linear term so
# erf(x) for small x is not formed as a difference of O(1) quantities.
# a_k = 2^{2k} (2^{2k}-1) B_{2k} / (2k)!; usable for t <= 1.
_TANH_MINUS_T = (
    -0.3333333333333333, 0.13333333333333333, -0.05396825396825397,
    0.021869488536155203, -0.008863235529902197, 0.003592128036572481,
    -0.0014558343870513183, 0.000590027440945586, -0.00023912911424355248,
    9.69153795692945e-05, -3.9278323883316834e-05, 1.5918905069328964e-05,
    -6.451689215655431e-06, 2.6147711512907546e-06, -1.0597268320104654e-06,
    4.294911078273806e-07, -1.7406618963571648e-07, 7.054636946400968e-08,
    -2.859136662305254e-08, 1.15876444327988522e-08, -4.696295398230902e-09,
    1.903336833931276e-09, -7.713933635359062e-10, 3.126339545892087e-10,
    -1.267057693030540106e-10, 5.135191408039368e-11, -2.0812146867700474e-11,
    8.434845419094338e-12, -3.418514086811156e-12, 1.3854715742948469e-12,
    -5.61510479241468e-13, 2.2757162553728748e-13, -9.223130585139532e-14,
    3.737994031096739e-14, -1.5149519187148605e-14, 6.139868862616814e-15,
    -2.488395122276279e-15, 1.0085085566354096e-15, -4.087331226869014e-16,
    1.6565329513786284e-16, -6.713675175048712e-17, 2.720950061304459e-17,
    -1.102759523372237e-17, 4.4693160072374125e-18, -1.8113455516997667e-18,
    7.341107011340148e-19,
)


def _tanh_minus_theta(t: float) -> float:
    t2 = t * t
    acc = 0.0
    for c in reversed(_TANH_MINUS_T):
        acc = acc * t2 + c
    return acc * t2 * t
