"""Inclusive-endpoint evaluation grids.

The grid-point formula below is part of the reference-file contract: the
fixture generator reproduces it bit for bit, and reference rows are matched
by the shortest round-trip decimal of each coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass


def grid_points(lo: float, hi: float, n: int) -> list[float]:
    """n points from lo to hi inclusive: lo + k*(hi-lo)/(n-1), last forced to hi."""
    lo = float(lo)
    hi = float(hi)
    if n < 1:
        raise ValueError(f"grid needs at least one point, got {n}")
    if n == 1:
        return [lo]
    step = (hi - lo) / (n - 1)
    pts = [lo + k * step for k in range(n)]
    pts[-1] = hi
    return pts


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

    @property
    def size(self) -> int:
        return self.n_re * self.n_im

    def re_points(self) -> list[float]:
        return grid_points(self.re_min, self.re_max, self.n_re)

    def im_points(self) -> list[float]:
        return grid_points(self.im_min, self.im_max, self.n_im)

    def points(self):
        """Row-major iteration, imaginary coordinate outermost."""
        res = self.re_points()
        for im in self.im_points():
            for re in res:
                yield complex(re, im)
