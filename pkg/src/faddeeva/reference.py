"""High-precision reference fixtures: loading and relative-error evaluation.

Reference CSV format (shared with the fixture generator):
header ``z_re,z_im,w_re,w_im``; z fields are the shortest round-trip
decimals of the binary64 grid coordinates, w fields carry >= 30 significant
digits.  Rows are keyed by the exact z strings, so a reference matches a
grid only if both were produced by the same grid-point formula.

Relative errors are formed in 50-digit decimal arithmetic: the reference
values cannot be rounded to binary64 first without biasing errors at the
sub-eps level.
"""

from __future__ import annotations

import csv
import math
from decimal import Decimal, localcontext

from .tuning import DEPS

_MAX_DOUBLE = Decimal("1.7976931348623157e308")


class ReferenceMismatchError(Exception):
    """A requested grid point is missing from the reference file."""


def load_reference(path: str) -> dict[tuple[str, str], tuple[str, str]]:
    """Map (z_re, z_im) strings to (w_re, w_im) decimal strings."""
    table: dict[tuple[str, str], tuple[str, str]] = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != ["z_re", "z_im", "w_re", "w_im"]:
            raise ValueError(f"unexpected reference header {header!r} in {path}")
        for row in reader:
            table[(row[0], row[1])] = (row[2], row[3])
    return table


def lookup(table: dict, z: complex) -> tuple[str, str]:
    key = (repr(z.real), repr(z.imag))
    try:
        return table[key]
    except KeyError:
        raise ReferenceMismatchError(
            f"grid point {key[0]},{key[1]} not present in reference"
        ) from None


def relerr_deps(value: complex, ref: tuple[str, str]) -> float:
    """|value - ref| / |ref| in units of binary64 epsilon.

    NaN when the reference modulus overflows binary64 (the relative error
    is undefined there); +inf when the computed value is non-finite but the
    reference is representable.
    """
    with localcontext() as ctx:
        ctx.prec = 50
        rre = Decimal(ref[0])
        rim = Decimal(ref[1])
        den = (rre * rre + rim * rim).sqrt()
        if den > _MAX_DOUBLE:
            return math.nan
        if den == 0:
            return math.nan
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            return math.inf
        dre = Decimal(value.real) - rre
        dim = Decimal(value.imag) - rim
        num = (dre * dre + dim * dim).sqrt()
        return float(num / den) / DEPS
