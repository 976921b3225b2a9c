"""Error-free float transformations and accurate exponentials.

The quadrature formula mixes terms whose magnitudes differ by many orders;
plain binary64 evaluation of e^{±x^2} and of phases like 2*pi*x/h loses
several digits because the *argument* carries a rounding error that the
exponential amplifies.  The helpers here track that error explicitly with
double-double (hi/lo) arithmetic so downstream results stay within a couple
of ulps.
"""

from __future__ import annotations

import math

_SPLIT = 134217729.0  # 2**27 + 1, Veltkamp splitting constant

# pi = PI_HI + PI_LO to ~107 bits
PI_HI = math.pi
PI_LO = 1.2246467991473532e-16

# sqrt(pi)/2 to ~107 bits
SQRTPI_2_HI = 0.886226925452758
SQRTPI_2_LO = -3.8332932499128994e-17

# 2/sqrt(pi) to ~107 bits
TWO_OVER_SQRTPI_HI = 1.1283791670955126
TWO_OVER_SQRTPI_LO = 1.533545961316588e-17


def two_sum(a: float, b: float) -> tuple[float, float]:
    """a + b as (rounded sum, exact rounding error)."""
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def two_prod(a: float, b: float) -> tuple[float, float]:
    """a * b as (rounded product, exact rounding error)."""
    p = a * b
    ah = _SPLIT * a
    ah = ah - (ah - a)
    al = a - ah
    bh = _SPLIT * b
    bh = bh - (bh - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def mul_dd(ah: float, al: float, bh: float, bl: float) -> tuple[float, float]:
    """(ah+al) * (bh+bl), first-order in the low parts."""
    ph, pe = two_prod(ah, bh)
    return two_sum(ph, pe + (ah * bl + al * bh))


def div_dd(nh: float, nl: float, dh: float, dl: float) -> tuple[float, float]:
    """(nh+nl) / (dh+dl) with one Newton correction of the quotient."""
    qh = nh / dh
    ph, pe = two_prod(qh, dh)
    ql = ((nh - ph) - pe + nl - qh * dl) / dh
    return qh, ql


def exp_mx2(x: float) -> float:
    """e^{-x^2} accurate to ~1 ulp even when x^2 is large.

    fl(x*x) is off by up to 0.5 ulp(x^2); for x^2 ~ 700 that alone would
    cost ~350 eps in the exponential, so the residual is folded back in.
    """
    hi, lo = two_prod(x, x)
    if hi > 745.2:  # exp underflows to 0 anyway
        return 0.0
    return math.exp(-hi) * (1.0 - lo)


def exp_px2(x: float) -> float:
    """e^{+x^2}; +inf on overflow."""
    hi, lo = two_prod(x, x)
    if hi > 709.782712893384:
        return math.inf
    return math.exp(hi) * (1.0 + lo)


def _cexp(ah: float, al: float, bh: float, bl: float) -> complex:
    """e^{(ah+al) + i(bh+bl)} for double-double real part / phase."""
    c0 = math.cos(bh)
    s0 = math.sin(bh)
    # rotate by the residual phase
    c = c0 - s0 * bl
    s = s0 + c0 * bl
    if ah > 709.782712893384:
        return complex(math.copysign(math.inf, c), math.copysign(math.inf, s))
    if ah < -745.2:
        return complex(math.copysign(0.0, c), math.copysign(0.0, s))
    m = math.exp(ah) * (1.0 + al)
    return complex(m * c, m * s)


def _zsq_dd(z: complex) -> tuple[float, float, float, float]:
    # Re(z^2), Im(z^2) in double-double
    x, y = z.real, z.imag
    x2h, x2l = two_prod(x, x)
    y2h, y2l = two_prod(y, y)
    ah, e = two_sum(x2h, -y2h)
    al = e + (x2l - y2l)
    bh, bl = two_prod(x, y)
    return ah, al, 2.0 * bh, 2.0 * bl


def cexp_nzsq(z: complex) -> complex:
    """e^{-z^2} with compensated real part and phase."""
    ah, al, bh, bl = _zsq_dd(z)
    return _cexp(-ah, -al, -bh, -bl)


def cexp_pzsq(z: complex) -> complex:
    """e^{+z^2}, same accuracy as cexp_nzsq."""
    ah, al, bh, bl = _zsq_dd(z)
    return _cexp(ah, al, bh, bl)


def frac_dd(ax: float, h: float) -> tuple[float, float]:
    """Fractional part of ax/h in double-double, ax >= 0.

    Used for phase reduction of e^{-2*pi*i*x/h} and tan/cot(pi*x/h): the
    quotient's rounding error grows with ax/h and must not leak into the
    reduced argument.
    """
    u = ax / h
    if not math.isfinite(u):
        return 0.0, 0.0
    if u >= 4.5e15:  # beyond exact float integers; callers only need *a* branch
        return u - math.floor(u), 0.0
    p, pe = two_prod(u, h)
    ulo = ((ax - p) - pe) / h
    fh = u - math.floor(u)
    fh, fl = two_sum(fh, ulo)
    if fh >= 1.0:
        fh -= 1.0
    elif fh < 0.0:
        fh += 1.0
    return fh, fl


def sincos_2pi(fh: float, fl: float) -> tuple[float, float]:
    """(sin, cos) of 2*pi*(fh+fl) for fh in [0, 1)."""
    th, te = two_prod(2.0 * PI_HI, fh)
    tl = te + 2.0 * PI_LO * fh + 2.0 * PI_HI * fl
    c0 = math.cos(th)
    s0 = math.sin(th)
    return s0 + c0 * tl, c0 - s0 * tl


def tan_pi(gh: float, gl: float) -> float:
    """tan(pi*(gh+gl)) for |gh| <= 0.25."""
    th, te = two_prod(PI_HI, gh)
    tl = te + PI_LO * gh + PI_HI * gl
    t0 = math.tan(th)
    return t0 + tl * (1.0 + t0 * t0)
