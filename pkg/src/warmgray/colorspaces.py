"""Baseline luminance extractors and CIELAB machinery.

Scalar versions are direct transcriptions used as oracles; image-level
work goes through the selected kernel backend.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .backend import get_kernels, resolve_threads, run_rows
from .core import DEFAULT_PARAMS, DecolorParams, PlanarImage, decolor_image

# sRGB D65 linear-light weights for the Y row of XYZ
_Y_WEIGHTS = (0.2126729, 0.7151522, 0.0721750)
_X_WEIGHTS = (0.4124564, 0.3575761, 0.1804375)
_Z_WEIGHTS = (0.0193339, 0.1191920, 0.9503041)
_WHITE = (0.95047, 1.0, 1.08883)
_LAB_EPS = 216.0 / 24389.0
_LAB_KAPPA = 24389.0 / 27.0

#: selectable color-to-gray methods; "y" and "weighted" share the BT.601 weights
METHOD_NAMES = ("ours", "y", "v", "lab", "weighted")


@dataclass(frozen=True)
class LabColor:
    """CIELAB coordinates: lightness plus the two opponent axes."""

    l_star: float
    a_star: float
    b_star: float


def luma_weighted(pixel) -> float:
    """BT.601 weighted sum of the gamma-encoded channels (MATLAB-style gray)."""
    r, g, b = pixel
    return 0.2989 * r + 0.5870 * g + 0.1140 * b


def hsv_v(pixel) -> float:
    """V of HSV: the channel maximum."""
    r, g, b = pixel
    return max(r, g, b)


def _srgb_to_linear(c: float) -> float:
    if c <= 0.04045:
        return c / 12.92
    return ((c + 0.055) / 1.055) ** 2.4


def _lab_f(t: float) -> float:
    if t > _LAB_EPS:
        return t ** (1.0 / 3.0)
    return (_LAB_KAPPA * t + 16.0) / 116.0


def rgb_to_lab(pixel) -> LabColor:
    """sRGB (D65, 2 degree observer) to CIELAB."""
    lin = tuple(_srgb_to_linear(c) for c in pixel)
    x = sum(w * c for w, c in zip(_X_WEIGHTS, lin)) / _WHITE[0]
    y = sum(w * c for w, c in zip(_Y_WEIGHTS, lin))
    z = sum(w * c for w, c in zip(_Z_WEIGHTS, lin)) / _WHITE[2]
    fx, fy, fz = _lab_f(x), _lab_f(y), _lab_f(z)
    return LabColor(116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz))


def lab_lightness(pixel) -> float:
    """CIELAB lightness rescaled to [0, 1] for use as a luminance channel."""
    value = rgb_to_lab(pixel).l_star / 100.0
    return min(max(value, 0.0), 1.0)


def delta_e76(a: LabColor, b: LabColor) -> float:
    """Euclidean color difference in Lab space."""
    return math.sqrt(
        (a.l_star - b.l_star) ** 2
        + (a.a_star - b.a_star) ** 2
        + (a.b_star - b.b_star) ** 2
    )


def luminance_image(
    img: PlanarImage,
    method: str = "ours",
    params: DecolorParams | None = None,
    threads: int | None = None,
    backend: str | None = None,
) -> PlanarImage:
    """Extract a luminance channel from an RGB image with the named method."""
    if img.kind != "rgb":
        raise ValueError("luminance_image expects an rgb image")
    if method == "ours":
        return decolor_image(img, params or DEFAULT_PARAMS, threads=threads, backend=backend)
    kernels = get_kernels(backend)
    if method in ("y", "weighted"):
        rows = kernels.bt601_rows
    elif method == "v":
        rows = kernels.hsv_value_rows
    elif method == "lab":
        rows = kernels.lab_lightness_rows
    else:
        known = ", ".join(METHOD_NAMES)
        raise ValueError(f"unknown method {method!r} (have: {known})")
    out = np.empty((img.height, img.width), dtype=np.float64)
    data = img.data
    run_rows(img.height, resolve_threads(threads), lambda r0, r1: rows(data, out, r0, r1))
    return PlanarImage(out)


def lab_image(
    img: PlanarImage,
    threads: int | None = None,
    backend: str | None = None,
) -> np.ndarray:
    """Per-pixel CIELAB coordinates of an RGB image, shape (height, width, 3)."""
    if img.kind != "rgb":
        raise ValueError("lab_image expects an rgb image")
    kernels = get_kernels(backend)
    out = np.empty((img.height, img.width, 3), dtype=np.float64)
    data = img.data
    run_rows(
        img.height,
        resolve_threads(threads),
        lambda r0, r1: kernels.lab_rows(data, out, r0, r1),
    )
    return out
