"""Kernel backend selection and row-parallel execution.

The hot per-pixel loops exist twice: a compiled extension
(``warmgray._kernels``) and a NumPy fallback (``warmgray._kernels_py``)
with identical module-level signatures. The compiled backend is picked at
import time when the extension built; everything else in the package is
backend-agnostic and calls :func:`get_kernels`.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable

from . import _kernels_py

try:
    from . import _kernels  # type: ignore[attr-defined]
except ImportError:
    _kernels = None

THREADS_ENV = "WARMGRAY_THREADS"

_BACKENDS = {"python": _kernels_py}
if _kernels is not None:
    _BACKENDS["compiled"] = _kernels


def compiled_available() -> bool:
    return _kernels is not None


def available_backends() -> tuple[str, ...]:
    """Backend names usable in this process, fastest first."""
    return ("compiled", "python") if _kernels is not None else ("python",)


def active_backend() -> str:
    """Name of the backend used when none is requested explicitly."""
    return available_backends()[0]


def get_kernels(name: str | None = None):
    """Return the kernel module for `name` (default: best available)."""
    if name is None:
        name = active_backend()
    try:
        return _BACKENDS[name]
    except KeyError:
        known = ", ".join(sorted(_BACKENDS))
        raise ValueError(f"unknown or unavailable backend {name!r} (have: {known})") from None


def resolve_threads(threads: int | None = None) -> int:
    """Worker count: explicit value, else the WARMGRAY_THREADS env var, else 1."""
    if threads is None:
        raw = os.environ.get(THREADS_ENV, "").strip()
        threads = int(raw) if raw else 1
    if threads < 1:
        raise ValueError(f"thread count must be >= 1, got {threads}")
    return threads


def run_rows(height: int, threads: int, fn: Callable[[int, int], None]) -> None:
    """Run ``fn(row0, row1)`` over contiguous row chunks.

    Chunks are disjoint and the per-pixel work is order-independent, so the
    result is bit-identical for any worker count.
    """
    if height <= 0:
        return
    workers = max(1, min(threads, height))
    if workers == 1:
        fn(0, height)
        return
    chunk = -(-height // workers)
    spans = [(r0, min(r0 + chunk, height)) for r0 in range(0, height, chunk)]
    with ThreadPoolExecutor(max_workers=len(spans)) as pool:
        # list() forces completion and re-raises worker exceptions
        list(pool.map(lambda span: fn(*span), spans))
