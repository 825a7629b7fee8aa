"""Tone mapping over a luminance channel plus ratio-based color reinstatement.

Global mode pushes luminance through a normalized logistic curve; local
mode equalizes against per-tile cumulative histograms with bilinear
interpolation between neighboring tile curves, so per-pixel cost stays
constant regardless of image size.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .backend import resolve_threads, run_rows
from .core import DEFAULT_PARAMS, DecolorParams, PlanarImage, decolor_image

_RATIO_EPS = 1e-6


@dataclass(frozen=True)
class SigmoidCurve:
    """Logistic tone curve, renormalized to map 0 to 0 and 1 to 1."""

    midpoint: float = 0.5
    slope: float = 8.0

    def __post_init__(self):
        if not 0.0 <= self.midpoint <= 1.0:
            raise ValueError(f"midpoint must lie in [0, 1], got {self.midpoint!r}")
        if not self.slope > 0.0 or math.isinf(self.slope):
            raise ValueError(f"slope must be a positive finite value, got {self.slope!r}")


@dataclass(frozen=True)
class LocalHistogramGrid:
    """Tile layout and blend strength for local histogram equalization."""

    tile_w: int
    tile_h: int
    bins: int = 256
    strength: float = 0.7

    def __post_init__(self):
        if self.tile_w < 1 or self.tile_h < 1:
            raise ValueError(f"tile size must be >= 1, got {self.tile_w}x{self.tile_h}")
        if self.bins < 2:
            raise ValueError(f"bins must be >= 2, got {self.bins}")
        if not 0.0 <= self.strength <= 1.0:
            raise ValueError(f"strength must lie in [0, 1], got {self.strength!r}")

    @classmethod
    def for_image(
        cls,
        width: int,
        height: int,
        tiles_x: int = 8,
        tiles_y: int = 8,
        bins: int = 256,
        strength: float = 0.7,
    ) -> "LocalHistogramGrid":
        """Grid sized so the image splits into about tiles_x by tiles_y tiles."""
        return cls(
            tile_w=max(1, -(-width // tiles_x)),
            tile_h=max(1, -(-height // tiles_y)),
            bins=bins,
            strength=strength,
        )


def apply_sigmoid(img: PlanarImage, curve: SigmoidCurve = SigmoidCurve()) -> PlanarImage:
    """Monotone global remap of a luminance image through the curve."""
    if img.kind != "luminance":
        raise ValueError("apply_sigmoid expects a luminance image")
    k, m = curve.slope, curve.midpoint
    with np.errstate(over="ignore"):
        lo = 1.0 / (1.0 + np.exp(k * m))
        hi = 1.0 / (1.0 + np.exp(-k * (1.0 - m)))
        y = 1.0 / (1.0 + np.exp(-k * (img.data - m)))
    out = (y - lo) / (hi - lo)
    np.clip(out, 0.0, 1.0, out=out)
    return PlanarImage(out)


def _spans(length: int, step: int) -> list[tuple[int, int]]:
    return [(s, min(s + step, length)) for s in range(0, length, step)]


def _axis_weights(length: int, spans: list[tuple[int, int]]):
    """Neighbor tile indices and blend fractions for every pixel position."""
    if len(spans) == 1:
        zero_i = np.zeros(length, dtype=np.intp)
        return zero_i, zero_i, np.zeros(length, dtype=np.float64)
    centers = np.array([(s0 + s1 - 1) / 2.0 for s0, s1 in spans])
    pos = np.arange(length, dtype=np.float64)
    idx = np.clip(np.searchsorted(centers, pos, side="right") - 1, 0, len(spans) - 2)
    idx = idx.astype(np.intp)
    frac = (pos - centers[idx]) / (centers[idx + 1] - centers[idx])
    return idx, (idx + 1).astype(np.intp), np.clip(frac, 0.0, 1.0)


def apply_local_lhe(
    img: PlanarImage,
    grid: LocalHistogramGrid,
    threads: int | None = None,
) -> PlanarImage:
    """Local histogram equalization with smoothed (interpolated) tile curves.

    Each tile contributes a cumulative-histogram tone curve stretched over
    its occupied range; per pixel the four surrounding tile curves are
    blended bilinearly and the result is mixed with the identity by
    ``grid.strength``. A tile whose pixels all share one histogram bin
    keeps its values unchanged, so constant images pass through untouched.
    Tiles larger than the image are clamped to the image dimensions.
    """
    if img.kind != "luminance":
        raise ValueError("apply_local_lhe expects a luminance image")
    data = img.data
    h, w = data.shape
    if h == 0 or w == 0:
        return PlanarImage(data.copy())

    col_spans = _spans(w, min(grid.tile_w, w))
    row_spans = _spans(h, min(grid.tile_h, h))
    nx, ny, nb = len(col_spans), len(row_spans), grid.bins
    strength = grid.strength

    bin_idx = np.minimum((data * nb).astype(np.intp), nb - 1)

    curves = np.zeros((ny, nx, nb), dtype=np.float64)
    identity = np.zeros((ny, nx), dtype=bool)
    for ty, (y0, y1) in enumerate(row_spans):
        for tx, (x0, x1) in enumerate(col_spans):
            hist = np.bincount(bin_idx[y0:y1, x0:x1].ravel(), minlength=nb)
            cdf = np.cumsum(hist)
            total = cdf[-1]
            low = cdf[np.flatnonzero(hist)[0]]
            if low == total:
                identity[ty, tx] = True
            else:
                curves[ty, tx] = np.clip((cdf - low) / (total - low), 0.0, 1.0)

    ix0, ix1, fx = _axis_weights(w, col_spans)
    iy0, iy1, fy = _axis_weights(h, row_spans)
    out = np.empty_like(data)

    def equalize_rows(r0, r1):
        v = data[r0:r1]
        b = bin_idx[r0:r1]
        j0 = iy0[r0:r1, None]
        j1 = iy1[r0:r1, None]
        wy = fy[r0:r1, None]
        i0 = ix0[None, :]
        i1 = ix1[None, :]
        wx = fx[None, :]
        c00 = np.where(identity[j0, i0], v, curves[j0, i0, b])
        c01 = np.where(identity[j0, i1], v, curves[j0, i1, b])
        c10 = np.where(identity[j1, i0], v, curves[j1, i0, b])
        c11 = np.where(identity[j1, i1], v, curves[j1, i1, b])
        top = c00 + wx * (c01 - c00)
        bottom = c10 + wx * (c11 - c10)
        equalized = top + wy * (bottom - top)
        res = v + strength * (equalized - v)
        np.clip(res, 0.0, 1.0, out=res)
        out[r0:r1] = res

    run_rows(h, resolve_threads(threads), equalize_rows)
    return PlanarImage(out)


def reinstate_color(
    rgb: PlanarImage,
    l_in: PlanarImage,
    l_out: PlanarImage,
) -> PlanarImage:
    """Rescale RGB channels by the luminance ratio after tone mapping.

    Channel ratios are preserved wherever the input luminance is positive;
    pixels whose input luminance is exactly 0 stay black.
    """
    if rgb.kind != "rgb" or l_in.kind != "luminance" or l_out.kind != "luminance":
        raise ValueError("reinstate_color expects (rgb, luminance, luminance) images")
    dims = (rgb.width, rgb.height)
    if dims != (l_in.width, l_in.height) or dims != (l_out.width, l_out.height):
        raise ValueError("reinstate_color requires matching image dimensions")
    li = l_in.data[:, :, None]
    lo = l_out.data[:, :, None]
    scaled = rgb.data * (lo / np.maximum(li, _RATIO_EPS))
    np.clip(scaled, 0.0, 1.0, out=scaled)
    out = np.where(li == 0.0, 0.0, scaled)
    return PlanarImage(out)


def tonemap_image(
    rgb: PlanarImage,
    mode: str = "global",
    params: DecolorParams = DEFAULT_PARAMS,
    curve: SigmoidCurve | None = None,
    grid: LocalHistogramGrid | None = None,
    threads: int | None = None,
    backend: str | None = None,
) -> tuple[PlanarImage, PlanarImage]:
    """Decolorize, tone-map the luminance, reinstate color.

    Returns ``(rgb_out, toned_luminance)``.
    """
    l_in = decolor_image(rgb, params, threads=threads, backend=backend)
    if mode == "global":
        l_out = apply_sigmoid(l_in, curve or SigmoidCurve())
    elif mode == "local":
        g = grid or LocalHistogramGrid.for_image(rgb.width, rgb.height)
        l_out = apply_local_lhe(l_in, g, threads=threads)
    else:
        raise ValueError(f"unknown tonemap mode {mode!r} (use 'global' or 'local')")
    return reinstate_color(rgb, l_in, l_out), l_out
