# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled per-pixel kernels, the hot loops of the package.

Same module surface as ``warmgray._kernels_py``; all math in double
precision with results clamped to [0, 1]. Loops release the GIL so row
chunks can run on real threads.
"""

from libc.math cimport sqrt, pow, cbrt

NAME = "compiled"

cdef double M_X0 = 0.4124564, M_X1 = 0.3575761, M_X2 = 0.1804375
cdef double M_Y0 = 0.2126729, M_Y1 = 0.7151522, M_Y2 = 0.0721750
cdef double M_Z0 = 0.0193339, M_Z1 = 0.1191920, M_Z2 = 0.9503041
cdef double WHITE_X = 0.95047
cdef double WHITE_Z = 1.08883
cdef double LAB_EPS = 216.0 / 24389.0
cdef double LAB_KAPPA = 24389.0 / 27.0


cdef inline double _clamp01(double v) nogil:
    if v < 0.0:
        return 0.0
    if v > 1.0:
        return 1.0
    return v


cdef inline double _decolor_px(double r, double g, double b,
                               double beta_r, double beta_k) nogil:
    cdef double white = sqrt((r * r + g * g + b * b) / 3.0)
    cdef double s = r + g + b
    cdef double wr = 0.0
    cdef double wb = 0.0
    cdef double redgreen, warm, cool
    if s > 0.0:
        wr = r / s
        wb = b / s
    redgreen = sqrt(beta_r * r * r + (1.0 - beta_r) * g * g)
    warm = wr * redgreen + (1.0 - wr) * white
    cool = (1.0 - wb) * b + wb * white
    return _clamp01(sqrt(beta_k * warm * warm + (1.0 - beta_k) * cool * cool))


def decolor_rows(const double[:, :, ::1] rgb, double[:, ::1] out,
                 double beta_r, double beta_k, Py_ssize_t row0, Py_ssize_t row1):
    """Warm/cool weighted blending of the RGB channels into one gray value."""
    cdef Py_ssize_t y, x
    cdef Py_ssize_t w = rgb.shape[1]
    with nogil:
        for y in range(row0, row1):
            for x in range(w):
                out[y, x] = _decolor_px(rgb[y, x, 0], rgb[y, x, 1], rgb[y, x, 2],
                                        beta_r, beta_k)


def bt601_rows(const double[:, :, ::1] rgb, double[:, ::1] out,
               Py_ssize_t row0, Py_ssize_t row1):
    cdef Py_ssize_t y, x
    cdef Py_ssize_t w = rgb.shape[1]
    with nogil:
        for y in range(row0, row1):
            for x in range(w):
                out[y, x] = _clamp01(0.2989 * rgb[y, x, 0]
                                     + 0.5870 * rgb[y, x, 1]
                                     + 0.1140 * rgb[y, x, 2])


def hsv_value_rows(const double[:, :, ::1] rgb, double[:, ::1] out,
                   Py_ssize_t row0, Py_ssize_t row1):
    cdef Py_ssize_t y, x
    cdef Py_ssize_t w = rgb.shape[1]
    cdef double v
    with nogil:
        for y in range(row0, row1):
            for x in range(w):
                v = rgb[y, x, 0]
                if rgb[y, x, 1] > v:
                    v = rgb[y, x, 1]
                if rgb[y, x, 2] > v:
                    v = rgb[y, x, 2]
                out[y, x] = v


cdef inline double _srgb_to_linear(double c) nogil:
    if c <= 0.04045:
        return c / 12.92
    return pow((c + 0.055) / 1.055, 2.4)


cdef inline double _lab_f(double t) nogil:
    if t > LAB_EPS:
        return cbrt(t)
    return (LAB_KAPPA * t + 16.0) / 116.0


def lab_lightness_rows(const double[:, :, ::1] rgb, double[:, ::1] out,
                       Py_ssize_t row0, Py_ssize_t row1):
    """CIELAB lightness of the sRGB input, rescaled to [0, 1]."""
    cdef Py_ssize_t y, x
    cdef Py_ssize_t w = rgb.shape[1]
    cdef double lr, lg, lb, lum
    with nogil:
        for y in range(row0, row1):
            for x in range(w):
                lr = _srgb_to_linear(rgb[y, x, 0])
                lg = _srgb_to_linear(rgb[y, x, 1])
                lb = _srgb_to_linear(rgb[y, x, 2])
                lum = 116.0 * _lab_f(M_Y0 * lr + M_Y1 * lg + M_Y2 * lb) - 16.0
                out[y, x] = _clamp01(lum / 100.0)


def lab_rows(const double[:, :, ::1] rgb, double[:, :, ::1] out,
             Py_ssize_t row0, Py_ssize_t row1):
    """Full CIELAB coordinates into ``out[row0:row1]`` of shape (..., 3)."""
    cdef Py_ssize_t y, x
    cdef Py_ssize_t w = rgb.shape[1]
    cdef double lr, lg, lb, fx, fy, fz
    with nogil:
        for y in range(row0, row1):
            for x in range(w):
                lr = _srgb_to_linear(rgb[y, x, 0])
                lg = _srgb_to_linear(rgb[y, x, 1])
                lb = _srgb_to_linear(rgb[y, x, 2])
                fx = _lab_f((M_X0 * lr + M_X1 * lg + M_X2 * lb) / WHITE_X)
                fy = _lab_f(M_Y0 * lr + M_Y1 * lg + M_Y2 * lb)
                fz = _lab_f((M_Z0 * lr + M_Z1 * lg + M_Z2 * lb) / WHITE_Z)
                out[y, x, 0] = 116.0 * fy - 16.0
                out[y, x, 1] = 500.0 * (fx - fy)
                out[y, x, 2] = 200.0 * (fy - fz)
