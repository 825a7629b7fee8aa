"""NumPy fallback kernels.

Mirrors the compiled extension operation for operation so both backends
agree to the last few ulps. Every function fills ``out[row0:row1]`` from
``rgb[row0:row1]`` and clamps its result to [0, 1].
"""

from __future__ import annotations

import numpy as np

NAME = "python"

# sRGB (D65, 2 degree observer) to XYZ, rows X/Y/Z
_M_X = (0.4124564, 0.3575761, 0.1804375)
_M_Y = (0.2126729, 0.7151522, 0.0721750)
_M_Z = (0.0193339, 0.1191920, 0.9503041)
_WHITE_X = 0.95047
_WHITE_Z = 1.08883
_LAB_EPS = 216.0 / 24389.0
_LAB_KAPPA = 24389.0 / 27.0


def decolor_rows(rgb, out, beta_r, beta_k, row0, row1):
    """Warm/cool weighted blending of the RGB channels into one gray value."""
    r = rgb[row0:row1, :, 0]
    g = rgb[row0:row1, :, 1]
    b = rgb[row0:row1, :, 2]
    # in-place chains keep the hot path down to four full-size buffers
    r2 = r * r
    g2 = g * g
    white = b * b
    white += r2
    white += g2
    white /= 3.0
    np.sqrt(white, out=white)

    s = r + g
    s += b
    positive = s > 0.0
    inv = np.divide(1.0, s, out=s, where=positive)  # black pixels keep share 0

    redgreen = r2
    redgreen *= beta_r
    g2 *= 1.0 - beta_r
    redgreen += g2
    np.sqrt(redgreen, out=redgreen)

    warm = redgreen  # white + (r / s) * (redgreen - white)
    warm -= white
    warm *= r
    warm *= inv
    warm += white

    cool = white  # b + (b / s) * (white - b), consumes the white buffer
    cool -= b
    cool *= b
    cool *= inv
    cool += b

    warm *= warm
    warm *= beta_k
    cool *= cool
    cool *= 1.0 - beta_k
    warm += cool
    np.sqrt(warm, out=warm)
    np.clip(warm, 0.0, 1.0, out=warm)
    out[row0:row1] = warm


def bt601_rows(rgb, out, row0, row1):
    chunk = rgb[row0:row1]
    res = 0.2989 * chunk[:, :, 0] + 0.5870 * chunk[:, :, 1] + 0.1140 * chunk[:, :, 2]
    np.clip(res, 0.0, 1.0, out=res)
    out[row0:row1] = res


def hsv_value_rows(rgb, out, row0, row1):
    out[row0:row1] = rgb[row0:row1].max(axis=2)


def _srgb_to_linear(c):
    return np.where(c <= 0.04045, c / 12.92, np.power((c + 0.055) / 1.055, 2.4))


def _lab_f(t):
    return np.where(t > _LAB_EPS, np.cbrt(t), (_LAB_KAPPA * t + 16.0) / 116.0)


def lab_lightness_rows(rgb, out, row0, row1):
    """CIELAB lightness of the sRGB input, rescaled to [0, 1]."""
    chunk = _srgb_to_linear(rgb[row0:row1])
    y = _M_Y[0] * chunk[:, :, 0] + _M_Y[1] * chunk[:, :, 1] + _M_Y[2] * chunk[:, :, 2]
    l_star = 116.0 * _lab_f(y) - 16.0
    res = l_star / 100.0
    np.clip(res, 0.0, 1.0, out=res)
    out[row0:row1] = res


def lab_rows(rgb, out, row0, row1):
    """Full CIELAB coordinates into ``out[row0:row1]`` of shape (..., 3)."""
    chunk = _srgb_to_linear(rgb[row0:row1])
    lr = chunk[:, :, 0]
    lg = chunk[:, :, 1]
    lb = chunk[:, :, 2]
    fx = _lab_f((_M_X[0] * lr + _M_X[1] * lg + _M_X[2] * lb) / _WHITE_X)
    fy = _lab_f(_M_Y[0] * lr + _M_Y[1] * lg + _M_Y[2] * lb)
    fz = _lab_f((_M_Z[0] * lr + _M_Z[1] * lg + _M_Z[2] * lb) / _WHITE_Z)
    out[row0:row1, :, 0] = 116.0 * fy - 16.0
    out[row0:row1, :, 1] = 500.0 * (fx - fy)
    out[row0:row1, :, 2] = 200.0 * (fy - fz)
