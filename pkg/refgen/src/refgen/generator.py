"""Arbitrary-precision reference values of the Faddeeva function.

Writes CSV fixtures with header ``z_re,z_im,w_re,w_im``: z coordinates as
shortest round-trip decimals of the binary64 grid points, w values from
w(z) = e^{-z^2} erfc(-iz) computed at >= 236 bits and printed with >= 30
significant digits.  Output is byte-stable for fixed inputs.

Grid convention (shared contract with the consumer): n inclusive points
lo + k*(hi-lo)/(n-1) evaluated in binary64, the last forced to hi; rows
row-major with the imaginary coordinate outermost.  Coordinates are
rounded to binary64 first and then lifted, so the reference belongs to the
exact double argument the consumer evaluates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath as mp


@dataclass(frozen=True)
class PrecisionSpec:
    bits: int = 236
    digits_out: int = 32

    def __post_init__(self) -> None:
        if self.bits < 236:
            raise ValueError(f"working precision must be >= 236 bits, got {self.bits}")
        if self.digits_out < 30:
            raise ValueError(f"need >= 30 printed digits, got {self.digits_out}")
        if self.digits_out > self.bits * math.log10(2.0) - 10:
            raise ValueError(
                f"{self.digits_out} digits exceeds {self.bits}-bit precision "
                "minus guard digits"
            )


@dataclass(frozen=True)
class GridSpec:
    re_min: float
    re_max: float
    im_min: float
    im_max: float
    n_re: int
    n_im: int

    def __post_init__(self) -> None:
        if self.re_min > self.re_max or self.im_min > self.im_max:
            raise ValueError("grid bounds must be ordered")
        if self.n_re < 1 or self.n_im < 1:
            raise ValueError("grid needs at least one point per axis")


def grid_points(lo: float, hi: float, n: int) -> list[float]:
    """Binary64 grid points; must match the consumer bit for bit."""
    lo = float(lo)
    hi = float(hi)
    if n == 1:
        return [lo]
    step = (hi - lo) / (n - 1)
    pts = [lo + k * step for k in range(n)]
    pts[-1] = hi
    return pts


def w_reference(z_re: float, z_im: float) -> mp.mpc:
    """w(z) = e^{-z^2} erfc(-iz) at the current working precision."""
    z = mp.mpc(mp.mpf(z_re), mp.mpf(z_im))
    return mp.exp(-z * z) * mp.erfc(mp.mpc(0, -1) * z)


def format_value(x: mp.mpf, digits: int) -> str:
    return mp.nstr(x, digits, strip_zeros=False, min_fixed=-6, max_fixed=10)


def generate_reference(grid: GridSpec, precision: PrecisionSpec, out_path: str) -> int:
    """Write one ReferenceRecord row per grid point; returns the row count."""
    res = grid_points(grid.re_min, grid.re_max, grid.n_re)
    ims = grid_points(grid.im_min, grid.im_max, grid.n_im)
    count = 0
    old_prec = mp.mp.prec
    try:
        mp.mp.prec = precision.bits
        with open(out_path, "w", newline="\n", encoding="utf-8") as fh:
            fh.write("z_re,z_im,w_re,w_im\n")
            for im in ims:
                for re in res:
                    val = w_reference(re, im)
                    fh.write(
                        f"{re!r},{im!r},"
                        f"{format_value(val.real, precision.digits_out)},"
                        f"{format_value(val.imag, precision.digits_out)}\n"
                    )
                    count += 1
    finally:
        mp.mp.prec = old_prec
    return count
