"""Bundled synthetic/natural-style mini corpus for metric sweeps.

Ten small deterministic images: ramps, charts, smooth pseudo-natural
fields, and noise. They stand in for a real photo dataset in tests and in
the metrics acceptance sweep, so composition matters more than looks.
"""

from __future__ import annotations

import colorsys

import numpy as np

from .core import PlanarImage

WIDTH, HEIGHT = 64, 48


def _clip_image(arr: np.ndarray) -> PlanarImage:
    return PlanarImage(np.clip(arr, 0.0, 1.0))


def _upsample(coarse: np.ndarray, height: int, width: int) -> np.ndarray:
    """Bilinear upsample of a small grid to (height, width)."""
    ch, cw = coarse.shape[:2]
    ys = np.linspace(0.0, ch - 1.0, height)
    xs = np.linspace(0.0, cw - 1.0, width)
    y0 = np.clip(ys.astype(int), 0, ch - 2) if ch > 1 else np.zeros(height, dtype=int)
    x0 = np.clip(xs.astype(int), 0, cw - 2) if cw > 1 else np.zeros(width, dtype=int)
    fy = (ys - y0)[:, None] if ch > 1 else np.zeros((height, 1))
    fx = (xs - x0)[None, :] if cw > 1 else np.zeros((1, width))
    y1 = np.minimum(y0 + 1, ch - 1)
    x1 = np.minimum(x0 + 1, cw - 1)
    if coarse.ndim == 3:
        fy = fy[..., None]
        fx = fx[..., None]
    c00 = coarse[np.ix_(y0, x0)]
    c01 = coarse[np.ix_(y0, x1)]
    c10 = coarse[np.ix_(y1, x0)]
    c11 = coarse[np.ix_(y1, x1)]
    top = c00 + fx * (c01 - c00)
    bottom = c10 + fx * (c11 - c10)
    return top + fy * (bottom - top)


def _smooth_field(rng: np.random.Generator, cells: int = 6) -> np.ndarray:
    """Natural-style field: smooth lighting modulating a mild smooth tint."""
    lighting = _upsample(rng.random((cells, cells, 1)) * 0.85 + 0.1, HEIGHT, WIDTH)
    tint = _upsample(rng.random((cells, cells, 3)) * 0.35 + 0.65, HEIGHT, WIDTH)
    return lighting * tint


def _gray_ramp() -> np.ndarray:
    ramp = np.linspace(0.0, 1.0, WIDTH)[None, :, None]
    return np.broadcast_to(ramp, (HEIGHT, WIDTH, 3)).copy()


def _hue_lightness_sweep() -> np.ndarray:
    img = np.empty((HEIGHT, WIDTH, 3))
    for y in range(HEIGHT):
        value = 0.15 + 0.8 * y / (HEIGHT - 1)
        for x in range(WIDTH):
            img[y, x] = colorsys.hsv_to_rgb(x / WIDTH, 0.75, value)
    return img


def _palette_bars() -> np.ndarray:
    palette = [
        (0.05, 0.05, 0.10),
        (0.45, 0.12, 0.10),
        (0.20, 0.35, 0.15),
        (0.85, 0.55, 0.15),
        (0.25, 0.45, 0.70),
        (0.80, 0.80, 0.25),
        (0.60, 0.70, 0.80),
        (0.95, 0.95, 0.90),
    ]
    img = np.empty((HEIGHT, WIDTH, 3))
    per = WIDTH // len(palette)
    for k, color in enumerate(palette):
        img[:, k * per : (k + 1) * per if k < len(palette) - 1 else WIDTH] = color
    return img


def _sky_ground(rng: np.random.Generator) -> np.ndarray:
    img = np.empty((HEIGHT, WIDTH, 3))
    horizon = HEIGHT // 2
    for y in range(horizon):
        t = y / max(horizon - 1, 1)
        img[y] = (0.35 + 0.45 * t, 0.55 + 0.35 * t, 0.85 + 0.1 * t)
    for y in range(horizon, HEIGHT):
        t = (y - horizon) / max(HEIGHT - horizon - 1, 1)
        img[y] = (0.30 - 0.18 * t, 0.40 - 0.22 * t, 0.12)
    img += 0.05 * (rng.random((HEIGHT, WIDTH, 3)) - 0.5)
    return img


def _checker() -> np.ndarray:
    dark = np.array([0.12, 0.20, 0.35])
    bright = np.array([0.90, 0.60, 0.25])
    yy, xx = np.mgrid[0:HEIGHT, 0:WIDTH]
    mask = ((yy // 8 + xx // 8) % 2).astype(bool)
    img = np.where(mask[..., None], bright, dark)
    return img


def _blobs(rng: np.random.Generator) -> np.ndarray:
    img = _gray_ramp() * 0.6 + 0.1
    yy, xx = np.mgrid[0:HEIGHT, 0:WIDTH]
    for k in range(6):
        cy, cx = rng.uniform(0, HEIGHT), rng.uniform(0, WIDTH)
        radius = rng.uniform(4, 10)
        # hues at spread intensities so blobs separate in lightness too
        color = rng.random(3)
        color *= (0.2 + 0.15 * k) / max(color.max(), 1e-9)
        weight = np.exp(-((yy - cy) ** 2 + (xx - cx) ** 2) / (2 * radius**2))
        img = img * (1 - weight[..., None]) + color * weight[..., None]
    return img


def _noise(rng: np.random.Generator) -> np.ndarray:
    return rng.random((HEIGHT, WIDTH, 3))


def _portrait_field(rng: np.random.Generator) -> np.ndarray:
    base = np.array([0.78, 0.58, 0.48])
    shading = _upsample(rng.random((4, 4, 1)) * 0.7 + 0.3, HEIGHT, WIDTH)
    return base[None, None, :] * shading


def _shapes() -> np.ndarray:
    img = np.full((HEIGHT, WIDTH, 3), 0.08)
    img[6:18, 8:24] = (0.95, 0.85, 0.40)
    img[24:42, 16:36] = (0.55, 0.75, 0.90)
    img[10:38, 44:58] = (0.85, 0.35, 0.30)
    return img


def mini_corpus() -> list[tuple[str, PlanarImage]]:
    """The ten bundled (name, image) pairs, deterministic across runs."""
    return [
        ("gray_ramp", _clip_image(_gray_ramp())),
        ("hue_lightness_sweep", _clip_image(_hue_lightness_sweep())),
        ("palette_bars", _clip_image(_palette_bars())),
        ("smooth_field", _clip_image(_smooth_field(np.random.default_rng(11)))),
        ("sky_ground", _clip_image(_sky_ground(np.random.default_rng(12)))),
        ("checker", _clip_image(_checker())),
        ("blobs", _clip_image(_blobs(np.random.default_rng(13)))),
        ("noise", _clip_image(_noise(np.random.default_rng(14)))),
        ("portrait_field", _clip_image(_portrait_field(np.random.default_rng(15)))),
        ("shapes", _clip_image(_shapes())),
    ]
