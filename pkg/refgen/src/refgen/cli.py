"""refgen command line: one grid in, one reference CSV out."""

from __future__ import annotations

import argparse
import sys

from .generator import GridSpec, PrecisionSpec, generate_reference


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="refgen",
        description="Generate high-precision Faddeeva reference fixtures",
    )
    p.add_argument("--re-min", type=float, required=True)
    p.add_argument("--re-max", type=float, required=True)
    p.add_argument("--im-min", type=float, required=True)
    p.add_argument("--im-max", type=float, required=True)
    p.add_argument("--nre", type=int, required=True)
    p.add_argument("--nim", type=int, required=True)
    p.add_argument("--bits", type=int, default=236)
    p.add_argument("--digits", type=int, default=32)
    p.add_argument("--out", required=True)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        grid = GridSpec(args.re_min, args.re_max, args.im_min, args.im_max,
                        args.nre, args.nim)
        precision = PrecisionSpec(bits=args.bits, digits_out=args.digits)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        count = generate_reference(grid, precision, args.out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {count} rows to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
