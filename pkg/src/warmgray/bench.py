"""Per-pixel runtime benchmark for the color-to-gray kernels.

Times each method on a synthesized random image, excluding all I/O, and
reports the median wall time, the per-pixel time, and the per-pixel time
normalized to a 2.7 GHz reference clock (so numbers are comparable across
machines once the actual clock is passed in). When the compiled extension
is present, both it and the NumPy fallback are measured side by side.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

import numpy as np

from .backend import available_backends, get_kernels, resolve_threads, run_rows
from .colorspaces import METHOD_NAMES
from .core import DEFAULT_PARAMS, DecolorParams

REFERENCE_GHZ = 2.7


@dataclass(frozen=True)
class BenchResult:
    method: str
    backend: str
    width: int
    height: int
    repeats: int
    wall_ns: int
    per_pixel_ns: float
    normalized_us: float


def _row_fn(kernels, method: str, rgb, out, params: DecolorParams):
    if method == "ours":
        return lambda r0, r1: kernels.decolor_rows(rgb, out, params.beta_r, params.beta_k, r0, r1)
    if method in ("y", "weighted"):
        return lambda r0, r1: kernels.bt601_rows(rgb, out, r0, r1)
    if method == "v":
        return lambda r0, r1: kernels.hsv_value_rows(rgb, out, r0, r1)
    if method == "lab":
        return lambda r0, r1: kernels.lab_lightness_rows(rgb, out, r0, r1)
    known = ", ".join(METHOD_NAMES)
    raise ValueError(f"unknown method {method!r} (have: {known})")


def run_benchmark(
    methods,
    width: int,
    height: int,
    repeats: int = 9,
    cpu_ghz: float = REFERENCE_GHZ,
    backends=None,
    params: DecolorParams = DEFAULT_PARAMS,
    seed: int = 0,
    threads: int | None = None,
) -> list[BenchResult]:
    """Time every (backend, method) combination on one random image."""
    if width < 1 or height < 1:
        raise ValueError(f"benchmark image must be at least 1x1, got {width}x{height}")
    if repeats < 5:
        raise ValueError(f"repeats must be >= 5, got {repeats}")
    if cpu_ghz <= 0:
        raise ValueError(f"cpu_ghz must be positive, got {cpu_ghz}")
    if backends is None:
        backends = available_backends()
    n_threads = resolve_threads(threads)

    rng = np.random.default_rng(seed)
    rgb = rng.random((height, width, 3), dtype=np.float64)
    out = np.empty((height, width), dtype=np.float64)

    results = []
    pixels = width * height
    for backend in backends:
        kernels = get_kernels(backend)
        for method in methods:
            fn = _row_fn(kernels, method, rgb, out, params)
            run_rows(height, n_threads, fn)  # warmup
            times = []
            for _ in range(repeats):
                t0 = time.perf_counter_ns()
                run_rows(height, n_threads, fn)
                t1 = time.perf_counter_ns()
                times.append(t1 - t0)
            wall = max(1, int(statistics.median(times)))
            per_pixel = wall / pixels
            results.append(
                BenchResult(
                    method=method,
                    backend=backend,
                    width=width,
                    height=height,
                    repeats=repeats,
                    wall_ns=wall,
                    per_pixel_ns=per_pixel,
                    normalized_us=per_pixel * (cpu_ghz / REFERENCE_GHZ) / 1000.0,
                )
            )
    return results


def format_table(results) -> str:
    """TSV table with one row per BenchResult."""
    lines = ["method\tbackend\twidth\theight\trepeats\twall_ns\tper_pixel_ns\tnormalized_us"]
    for r in results:
        lines.append(
            f"{r.method}\t{r.backend}\t{r.width}\t{r.height}\t{r.repeats}"
            f"\t{r.wall_ns}\t{r.per_pixel_ns:.3f}\t{r.normalized_us:.6f}"
        )
    return "\n".join(lines)
