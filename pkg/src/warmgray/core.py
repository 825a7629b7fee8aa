"""Warm/cool luminance model: scalar reference functions and the image driver.

Gray values come from blending two luminance estimates. The warm estimate
mixes a beta_r-weighted red/green distance with the achromatic (white)
level according to the red share of the pixel; the cool estimate mixes the
raw blue channel with the white level according to the blue share. The
final value is the beta_k-weighted Euclidean blend of the two.

The scalar functions here are the plain transcription of that model and
double as the correctness oracle for the vectorized and compiled image
kernels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .backend import get_kernels, resolve_threads, run_rows


class RgbPixel(NamedTuple):
    """One RGB sample with channels normalized to [0, 1]."""

    r: float
    g: float
    b: float


@dataclass(frozen=True)
class DecolorParams:
    """Blending weights of the model.

    Both weights must lie strictly inside (0.5, 1): beta_r biases red over
    green in the warm estimate, beta_k biases warm over cool in the final
    blend.
    """

    beta_r: float = 0.55
    beta_k: float = 0.8

    def __post_init__(self):
        for name in ("beta_r", "beta_k"):
            value = getattr(self, name)
            if not 0.5 < value < 1.0:
                raise ValueError(
                    f"{name} must lie strictly between 0.5 and 1, got {value!r}"
                )


DEFAULT_PARAMS = DecolorParams()


class PlanarImage:
    """Row-major raster of RGB or luminance samples in [0, 1].

    Wraps a C-contiguous float64 array of shape (height, width, 3) for RGB
    or (height, width) for luminance. Construction validates range; treat
    the data as immutable afterwards. Out-of-range input is rejected here,
    clamping happens once at decode time (see ``warmgray.codec``).
    """

    __slots__ = ("data",)

    def __init__(self, data):
        arr = np.ascontiguousarray(data, dtype=np.float64)
        if arr.ndim == 3:
            if arr.shape[2] != 3:
                raise ValueError(f"rgb data needs 3 channels, got shape {arr.shape}")
        elif arr.ndim != 2:
            raise ValueError(f"expected a 2-d or 3-d raster, got shape {arr.shape}")
        if arr.size:
            if not np.isfinite(arr).all():
                raise ValueError("image samples must be finite")
            if arr.min() < 0.0 or arr.max() > 1.0:
                raise ValueError("image samples must lie in [0, 1]")
        self.data = arr

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]

    @property
    def kind(self) -> str:
        return "rgb" if self.data.ndim == 3 else "luminance"

    @property
    def pixel_count(self) -> int:
        return self.height * self.width

    def __repr__(self):
        return f"PlanarImage({self.kind}, {self.width}x{self.height})"


def white_luminance(pixel) -> float:
    """Root mean square of the three channels (achromatic level)."""
    r, g, b = pixel
    return math.sqrt((r * r + g * g + b * b) / 3.0)


def blue_luminance(pixel) -> float:
    """The blue channel taken as-is."""
    return pixel[2]


def red_green_luminance(pixel, params: DecolorParams = DEFAULT_PARAMS) -> float:
    """Euclidean distance of the beta_r-weighted red and green channels."""
    r, g, _ = pixel
    return math.sqrt(params.beta_r * r * r + (1.0 - params.beta_r) * g * g)


def warm_luminance(pixel, params: DecolorParams = DEFAULT_PARAMS) -> float:
    """Red/green distance blended toward the white level by the red share.

    A black pixel has no defined red share; it is taken as 0 so the value
    is continuous along the gray axis.
    """
    r, g, b = pixel
    s = r + g + b
    share = r / s if s > 0.0 else 0.0
    return share * red_green_luminance(pixel, params) + (1.0 - share) * white_luminance(pixel)


def cool_luminance(pixel) -> float:
    """Blue channel blended toward the white level by the blue share."""
    r, g, b = pixel
    s = r + g + b
    share = b / s if s > 0.0 else 0.0
    return (1.0 - share) * b + share * white_luminance(pixel)


def decolor_pixel(pixel, params: DecolorParams = DEFAULT_PARAMS) -> float:
    """Gray value of one pixel under the warm/cool blending model."""
    warm = warm_luminance(pixel, params)
    cool = cool_luminance(pixel)
    value = math.sqrt(params.beta_k * warm * warm + (1.0 - params.beta_k) * cool * cool)
    return min(max(value, 0.0), 1.0)


def decolor_image(
    img: PlanarImage,
    params: DecolorParams = DEFAULT_PARAMS,
    threads: int | None = None,
    backend: str | None = None,
) -> PlanarImage:
    """Decolorize a whole RGB image.

    Each output sample is ``decolor_pixel`` of the corresponding input
    pixel; the result does not depend on the backend, thread count, or
    traversal order (beyond float ulps between backends).
    """
    if img.kind != "rgb":
        raise ValueError("decolor_image expects an rgb image")
    kernels = get_kernels(backend)
    out = np.empty((img.height, img.width), dtype=np.float64)
    data = img.data
    run_rows(
        img.height,
        resolve_threads(threads),
        lambda r0, r1: kernels.decolor_rows(data, out, params.beta_r, params.beta_k, r0, r1),
    )
    return PlanarImage(out)
