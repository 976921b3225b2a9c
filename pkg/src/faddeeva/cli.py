"""Command-line interface: eval, params, accuracy-map, bench, selftest.

Exit codes: 0 ok, 1 selftest failure, 2 usage error, 3 data mismatch.
"""

from __future__ import annotations

import argparse
import math
import random
import sys
import time

from .compensated import cexp_nzsq, exp_mx2, frac_dd, sincos_2pi
from .core import Region, _use_unstaggered, classify_region, w
from .functions import FunctionKind, evaluate
from .grids import GridSpec
from .reference import ReferenceMismatchError, load_reference, lookup, relerr_deps
from .tuning import DEPS, EvalParams, build_params


class _UsageError(Exception):
    pass


def _fmt17(x: float) -> str:
    """17 significant digits, scientific, minimal exponent (1.0...0e0)."""
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    mant, exp = f"{x:.16e}".split("e")
    return f"{mant}e{int(exp)}"


def _params_from(args: argparse.Namespace) -> EvalParams:
    eps = getattr(args, "eps", DEPS)
    if not (0.0 < eps < 1.0):
        raise _UsageError(f"--eps must be in (0, 1), got {eps}")
    h_override = getattr(args, "h_override", None)
    if h_override is not None and not (h_override > 0.0):
        raise _UsageError(f"--h-override must be positive, got {h_override}")
    return build_params(
        eps,
        use_asymptotic=getattr(args, "use_asymptotic", False),
        use_maclaurin=getattr(args, "use_maclaurin", False),
        h_override=h_override,
    )


def _grid_from(args: argparse.Namespace) -> GridSpec:
    try:
        return GridSpec(args.re_min, args.re_max, args.im_min, args.im_max,
                        args.nre, args.nim)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _kind_from(args: argparse.Namespace) -> FunctionKind:
    return FunctionKind(args.fn)


# -- subcommands -----------------------------------------------------------

def cmd_eval(args: argparse.Namespace) -> int:
    params = _params_from(args)
    kind = _kind_from(args)
    z = complex(args.re, args.im)
    value = evaluate(kind, z, params)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        print(f"warning: non-finite result for {kind.value} at {z}", file=sys.stderr)
    print(f"{_fmt17(value.real)} {_fmt17(value.imag)}")
    return 0


def cmd_params(args: argparse.Namespace) -> int:
    p = _params_from(args)
    for name, value in (
        ("eps", p.eps), ("h", p.h), ("n_terms", p.n_terms),
        ("strip_height", p.strip_height), ("re_cut", p.re_cut),
        ("g_cut", p.g_cut), ("asym_radius", p.asym_radius),
        ("asym_terms", p.asym_terms), ("use_asymptotic", p.use_asymptotic),
        ("use_maclaurin", p.use_maclaurin),
        ("maclaurin_radius", p.maclaurin_radius),
    ):
        if isinstance(value, bool):
            print(f"{name}={'true' if value else 'false'}")
        elif isinstance(value, float):
            print(f"{name}={value!r}")
        else:
            print(f"{name}={value}")
    return 0


def cmd_accuracy_map(args: argparse.Namespace) -> int:
    params = _params_from(args)
    kind = _kind_from(args)
    grid = _grid_from(args)
    table = load_reference(args.reference)
    rows = []
    total = 0.0
    worst = 0.0
    n_defined = 0
    for z in grid.points():
        if kind is FunctionKind.W:
            res = w(z, params)
            value, region, over = res.value, res.region, res.overflowed
        else:
            value = evaluate(kind, z, params)
            region = classify_region(z, params)
            over = not (math.isfinite(value.real) and math.isfinite(value.imag))
        err = relerr_deps(value, lookup(table, z))
        if not math.isnan(err):
            total += err
            worst = max(worst, err)
            n_defined += 1
        rows.append((z, err, region, over))
    with open(args.out, "w", newline="\n", encoding="utf-8") as fh:
        fh.write("z_re,z_im,relerr_deps,region,overflowed\n")
        for z, err, region, over in rows:
            fh.write(
                f"{z.real!r},{z.imag!r},{err!r},{region.value},"
                f"{'true' if over else 'false'}\n"
            )
    mean = total / n_defined if n_defined else math.nan
    print(f"mean={mean!r} max={worst!r} n={n_defined}")
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    params = _params_from(args)
    kind = _kind_from(args)
    grid = _grid_from(args)
    if args.reps < 1:
        raise _UsageError(f"--reps must be >= 1, got {args.reps}")
    buckets: dict[Region, list[complex]] = {}
    for z in grid.points():
        buckets.setdefault(classify_region(z, params), []).append(z)
    checksum = 0j
    report = []
    t_all = 0.0
    for region in Region:
        pts = buckets.get(region)
        if not pts:
            continue
        acc = 0j
        t0 = time.perf_counter()
        for _ in range(args.reps):
            acc = 0j  # fresh accumulator per pass: checksum is rep-count invariant
            for z in pts:
                acc += evaluate(kind, z, params)
        t1 = time.perf_counter()
        t_all += t1 - t0
        checksum += acc
        ns = (t1 - t0) * 1e9 / (args.reps * len(pts))
        report.append((region, ns, len(pts)))
    print(f"checksum={checksum.real!r},{checksum.imag!r}")
    for region, ns, n in report:
        print(f"region={region.value} ns_per_call={ns:.1f} n={n}")
    total_n = sum(n for _, _, n in report)
    ns_all = t_all * 1e9 / (args.reps * total_n) if total_n else math.nan
    print(f"region=ALL ns_per_call={ns_all:.1f} n={total_n}")
    print(f"total_s={t_all:.3f}")
    return 0


def cmd_selftest(args: argparse.Namespace) -> int:
    params = _params_from(args)
    failures = 0
    for name, fn in (
        ("reflection", _check_reflection),
        ("erf_plus_erfc", _check_erf_erfc),
        ("derivative_identity", _check_derivative),
        ("real_axis_re", _check_real_axis),
        ("imag_axis_reality", _check_imag_axis),
        ("denominator_bounds", _check_denominators),
    ):
        ok, detail = fn(params)
        if ok:
            print(f"ok {name}")
        else:
            failures += 1
            print(f"FAIL {name}: {detail}")
    return 1 if failures else 0


# -- selftest checks (reference-free identities) ----------------------------

def _check_reflection(params: EvalParams) -> tuple[bool, str]:
    rng = random.Random(1234)
    for _ in range(2000):
        z = complex(rng.uniform(-8, 8), rng.uniform(-8, 8))
        if z.imag == 0.0:
            continue
        w1 = w(z, params).value
        w2 = w(-z, params).value
        gauss = 2.0 * cexp_nzsq(z)
        tol = 8.0 * DEPS * max(abs(w1), abs(gauss))
        if abs(w1 + w2 - gauss) > tol:
            return False, f"w(z)+w(-z) != 2e^-z^2 at z={z}"
    return True, ""


def _check_erf_erfc(params: EvalParams) -> tuple[bool, str]:
    rng = random.Random(99)
    for _ in range(2000):
        z = complex(rng.uniform(-7, 7), rng.uniform(-7, 7))
        a = evaluate(FunctionKind.ERF, z, params)
        b = evaluate(FunctionKind.ERFC, z, params)
        if abs(a + b - 1.0) > 8.0 * DEPS * max(1.0, abs(a)):
            return False, f"erf+erfc != 1 at z={z}"
    return True, ""


def _check_derivative(params: EvalParams) -> tuple[bool, str]:
    rng = random.Random(7)
    delta = 1e-6
    for _ in range(300):
        z = complex(rng.uniform(-5, 5), rng.uniform(0.01, 5))
        if abs(z) > 5.0:
            continue
        wz = w(z, params).value
        rhs = 2j / math.sqrt(math.pi) - 2.0 * z * wz
        lhs = (w(z + delta, params).value - w(z - delta, params).value) / (2 * delta)
        # |w| term covers the difference quotient's noise floor near w' zeros
        if abs(lhs - rhs) > 1e-9 * (abs(rhs) + abs(wz)):
            return False, f"w' identity off at z={z}"
    return True, ""


def _check_real_axis(params: EvalParams) -> tuple[bool, str]:
    for k in range(-260, 261):
        x = k / 10.0
        re = w(complex(x, 0.0), params).value.real
        ref = exp_mx2(x)
        if abs(re - ref) > 2.0 * DEPS * abs(ref):
            return False, f"Re w(x) != e^-x^2 at x={x}"
    return True, ""


def _check_imag_axis(params: EvalParams) -> tuple[bool, str]:
    for k in range(0, 261):
        x = k / 10.0
        val = w(complex(0.0, x), params).value
        if abs(val.imag) > 2.0 * DEPS * val.real:
            return False, f"w(ix) not real at x={x}"
    return True, ""


def _check_denominators(params: EvalParams) -> tuple[bool, str]:
    rng = random.Random(55)
    h = params.h
    floor_val = math.sqrt(2.0) - 1e-12
    for _ in range(2000):
        x = rng.uniform(-8, 8)
        ax = abs(x)
        unstag = _use_unstaggered(ax, h)
        nodes = [(n * h if unstag else (n - 0.5) * h) for n in range(1, params.n_terms + 1)]
        if min(abs(ax - t) for t in nodes) < 0.245 * h:
            return False, f"node too close to |Re z| at x={x}"
        fh, fl = frac_dd(ax, h)
        sn, cs = sincos_2pi(fh, fl)
        q = complex(cs, -sn if x >= 0 else sn)
        denom = (1.0 - q) if unstag else (1.0 + q)
        if abs(denom) < floor_val:
            return False, f"|1 -+ e^(-2 pi i x/h)| = {abs(denom)} at x={x}"
    return True, ""


# -- parser ------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="faddeeva",
        description="Faddeeva and error-like functions via the pole-corrected "
                    "trapezoidal rule",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--eps", type=float, default=DEPS,
                        help="target relative accuracy (default: binary64 epsilon)")
    common.add_argument("--use-asymptotic", action="store_true",
                        help="large-|z| asymptotic fast path")
    common.add_argument("--use-maclaurin", action="store_true",
                        help="Maclaurin series for odd functions near the origin")
    common.add_argument("--h-override", type=float, default=None,
                        help="debug: force the node spacing")

    gridp = argparse.ArgumentParser(add_help=False)
    gridp.add_argument("--re-min", type=float, required=True)
    gridp.add_argument("--re-max", type=float, required=True)
    gridp.add_argument("--im-min", type=float, required=True)
    gridp.add_argument("--im-max", type=float, required=True)
    gridp.add_argument("--nre", type=int, required=True)
    gridp.add_argument("--nim", type=int, required=True)

    kinds = [k.value for k in FunctionKind]
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate one point")
    p.add_argument("--fn", choices=kinds, required=True)
    p.add_argument("--re", type=float, default=0.0)
    p.add_argument("--im", type=float, default=0.0)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("params", parents=[common], help="derived tuning constants")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("accuracy-map", parents=[common, gridp],
                       help="relative-error map against a reference CSV")
    p.add_argument("--fn", choices=kinds, default="w")
    p.add_argument("--reference", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_accuracy_map)

    p = sub.add_parser("bench", parents=[common, gridp],
                       help="per-region evaluation timing")
    p.add_argument("--fn", choices=kinds, default="w")
    p.add_argument("--reps", type=int, default=1)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("selftest", parents=[common],
                       help="reference-free identity checks")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ReferenceMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
