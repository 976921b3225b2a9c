"""High-precision reference fixture generator for the Faddeeva function."""

from .generator import GridSpec, PrecisionSpec, generate_reference, w_reference

__all__ = ["GridSpec", "PrecisionSpec", "generate_reference", "w_reference"]
