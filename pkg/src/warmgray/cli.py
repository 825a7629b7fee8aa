"""Command-line front end: decolor, metrics, tonemap, bench.

Exit codes are a stable contract for scripting: 0 success, 1 usage error,
2 I/O error, 3 computation error.
"""

from __future__ import annotations

import argparse
import sys

from .backend import THREADS_ENV, available_backends
from .bench import format_table, run_benchmark
from .codec import CodecError, load_image, save_image
from .colorspaces import METHOD_NAMES, luminance_image
from .core import DecolorParams
from .metrics import MetricReport, PairSampleConfig, evaluate, write_sweep_csv
from .tonemap import LocalHistogramGrid, SigmoidCurve, tonemap_image

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_COMPUTE = 3


class UsageCliError(Exception):
    pass


class ComputeCliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageCliError(message)


def _decolor_params(args) -> DecolorParams:
    try:
        return DecolorParams(beta_r=args.beta_r, beta_k=args.beta_k)
    except ValueError as e:
        raise UsageCliError(str(e)) from None


def _add_common(parser, with_params=True):
    if with_params:
        parser.add_argument("--beta-r", type=float, default=0.55, help="warm red/green weight, in (0.5, 1)")
        parser.add_argument("--beta-k", type=float, default=0.8, help="warm/cool blend weight, in (0.5, 1)")
    parser.add_argument("--threads", type=int, default=None,
                        help=f"row-parallel workers (default: ${THREADS_ENV} or 1)")
    parser.add_argument("--backend", choices=available_backends(), default=None,
                        help="kernel backend (default: best available)")


def cmd_decolor(args) -> int:
    params = _decolor_params(args)
    color = load_image(args.input)
    try:
        gray = luminance_image(color, method=args.method, params=params,
                               threads=args.threads, backend=args.backend)
    except ValueError as e:
        raise ComputeCliError(str(e)) from None
    save_image(args.output, gray)
    return EXIT_OK


def cmd_metrics(args) -> int:
    params = _decolor_params(args)
    try:
        cfg = PairSampleConfig(pair_count=args.pairs, seed=args.seed, exhaustive=args.exhaustive)
    except ValueError as e:
        raise UsageCliError(str(e)) from None
    color = load_image(args.color)
    if args.gray is not None:
        gray = load_image(args.gray)
    else:
        gray = luminance_image(color, method=args.method, params=params,
                               threads=args.threads, backend=args.backend)
    try:
        report: MetricReport = evaluate(color, gray, cfg)
    except ValueError as e:
        raise ComputeCliError(str(e)) from None
    if args.output:
        name = args.gray if args.gray is not None else f"{args.color}:{args.method}"
        write_sweep_csv(args.output, [(str(name), report)])
    print(f"mean_escore {report.mean_escore:.6f}")
    return EXIT_OK


def cmd_tonemap(args) -> int:
    params = _decolor_params(args)
    color = load_image(args.input)
    try:
        if args.mode == "global":
            curve = SigmoidCurve(midpoint=args.midpoint, slope=args.slope)
            grid = None
        else:
            tile_w = args.tile_w if args.tile_w else max(1, -(-color.width // args.tiles))
            tile_h = args.tile_h if args.tile_h else max(1, -(-color.height // args.tiles))
            curve = None
            grid = LocalHistogramGrid(tile_w=tile_w, tile_h=tile_h,
                                      bins=args.bins, strength=args.strength)
    except ValueError as e:
        raise UsageCliError(str(e)) from None
    try:
        rgb_out, l_out = tonemap_image(color, mode=args.mode, params=params,
                                       curve=curve, grid=grid,
                                       threads=args.threads, backend=args.backend)
    except ValueError as e:
        raise ComputeCliError(str(e)) from None
    save_image(args.output, rgb_out)
    if args.gray_out:
        save_image(args.gray_out, l_out)
    return EXIT_OK


def cmd_bench(args) -> int:
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    bad = [m for m in methods if m not in METHOD_NAMES]
    if not methods or bad:
        raise UsageCliError(f"--methods needs a comma list from {METHOD_NAMES}, got {args.methods!r}")
    backends = available_backends() if args.bench_backend == "all" else (args.bench_backend,)
    try:
        results = run_benchmark(methods, args.width, args.height, repeats=args.repeats,
                                cpu_ghz=args.cpu_ghz, backends=backends,
                                seed=args.seed, threads=args.threads)
    except ValueError as e:
        raise UsageCliError(str(e)) from None
    print(format_table(results))
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="warmgray",
                     description="Warm/cool color-temperature decolorization toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decolor", help="convert a color image to grayscale")
    p.add_argument("input", help="PNG or binary PPM path")
    p.add_argument("output", help="PNG or PGM path")
    p.add_argument("--method", choices=METHOD_NAMES, default="ours")
    _add_common(p)
    p.set_defaults(handler=cmd_decolor)

    p = sub.add_parser("metrics", help="tau-sweep contrast metrics for a (color, gray) pair")
    p.add_argument("color", help="color image path")
    p.add_argument("gray", nargs="?", default=None,
                   help="gray image path; omitted: computed via --method")
    p.add_argument("--method", choices=METHOD_NAMES, default="ours")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--pairs", type=int, default=50_000)
    p.add_argument("--exhaustive", action="store_true", help="evaluate every pixel pair")
    p.add_argument("--output", "-o", default=None, help="write the sweep CSV here")
    _add_common(p)
    p.set_defaults(handler=cmd_metrics)

    p = sub.add_parser("tonemap", help="decolor, tone-map, reinstate color")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--mode", choices=("global", "local"), default="global")
    p.add_argument("--midpoint", type=float, default=0.5, help="global curve midpoint")
    p.add_argument("--slope", type=float, default=8.0, help="global curve contrast gain")
    p.add_argument("--tiles", type=int, default=8, help="local mode: tiles per axis")
    p.add_argument("--tile-w", type=int, default=None, help="local mode: tile width in pixels")
    p.add_argument("--tile-h", type=int, default=None, help="local mode: tile height in pixels")
    p.add_argument("--bins", type=int, default=256, help="local mode: histogram bins")
    p.add_argument("--strength", type=float, default=0.7, help="local mode: blend weight in [0, 1]")
    p.add_argument("--gray-out", default=None, help="also write the tone-mapped luminance here")
    _add_common(p)
    p.set_defaults(handler=cmd_tonemap)

    p = sub.add_parser("bench", help="per-pixel kernel timing table (TSV on stdout)")
    p.add_argument("--width", type=int, default=800)
    p.add_argument("--height", type=int, default=600)
    p.add_argument("--methods", default="ours,lab", help="comma list of methods to time")
    p.add_argument("--repeats", type=int, default=9, help="timed runs per kernel (>= 5)")
    p.add_argument("--cpu-ghz", type=float, default=2.7,
                   help="nominal machine clock used for normalization")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--backend", dest="bench_backend",
                   choices=available_backends() + ("all",), default="all")
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(handler=cmd_bench)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageCliError as e:
        print(f"warmgray: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.handler(args)
    except UsageCliError as e:
        print(f"warmgray: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (CodecError, OSError) as e:
        print(f"warmgray: i/o error: {e}", file=sys.stderr)
        return EXIT_IO
    except ComputeCliError as e:
        print(f"warmgray: computation error: {e}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
