"""Shared fixtures: parameter sets, fixture paths, and the mpmath oracle.

The oracle evaluates w(z) = e^{-z^2} erfc(-iz) at 236 bits, the same route
the vendored reference files were produced with, and is used wherever a
test needs an expected value that cannot be stated in closed form.
"""

from __future__ import annotations

import math
from pathlib import Path

import mpmath as mp
import pytest

from faddeeva import DEPS, build_params

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

ORACLE_PREC = 236


@pytest.fixture(scope="session")
def params():
    return build_params(DEPS)


@pytest.fixture(scope="session")
def params_asym():
    return build_params(DEPS, use_asymptotic=True)


@pytest.fixture(scope="session")
def params_mac():
    return build_params(DEPS, use_maclaurin=True)


def w_oracle(z: complex) -> mp.mpc:
    """236-bit w(z) at the exact binary64 argument."""
    with mp.workprec(ORACLE_PREC):
        zz = mp.mpc(mp.mpf(z.real), mp.mpf(z.imag))
        return mp.exp(-zz * zz) * mp.erfc(mp.mpc(0, -1) * zz)


def relerr_deps(value, reference) -> float:
    """|value - reference| / |reference| in units of binary64 epsilon."""
    with mp.workprec(ORACLE_PREC):
        ref = mp.mpmathify(reference)
        if ref == 0:
            return math.inf
        if isinstance(value, complex):
            val = mp.mpc(value.real, value.imag)
        else:
            val = mp.mpf(value)
        return float(abs(val - ref) / abs(ref)) / DEPS


def write_reference_csv(path, points, digits: int = 32) -> None:
    """Write a reference CSV in the shared fixture format (test helper)."""
    with mp.workprec(ORACLE_PREC):
        with open(path, "w", newline="\n", encoding="utf-8") as fh:
            fh.write("z_re,z_im,w_re,w_im\n")
            for z in points:
                val = w_oracle(z)
                sr = mp.nstr(val.real, digits, strip_zeros=False, min_fixed=-6, max_fixed=10)
                si = mp.nstr(val.imag, digits, strip_zeros=False, min_fixed=-6, max_fixed=10)
                fh.write(f"{z.real!r},{z.imag!r},{sr},{si}\n")
