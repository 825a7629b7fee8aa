"""Tone mapping tests, including a scalar reference for the local equalizer."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from warmgray import (
    LocalHistogramGrid,
    PlanarImage,
    SigmoidCurve,
    apply_local_lhe,
    apply_sigmoid,
    decolor_image,
    reinstate_color,
    tonemap_image,
)
from conftest import rand_rgb, rand_u8_rgb

lum = st.floats(0.0, 1.0, allow_nan=False, allow_infinity=False, width=64)


def reference_lhe(data: np.ndarray, grid: LocalHistogramGrid, interpolate=True) -> np.ndarray:
    """Loop transcription of tile-CDF equalization with bilinear curve blending.

    With ``interpolate=False`` every pixel uses only its own tile's curve,
    which is the seam-prone variant the smoothing exists to avoid.
    """
    h, w = data.shape
    tw, th = min(grid.tile_w, w), min(grid.tile_h, h)
    col_spans = [(x, min(x + tw, w)) for x in range(0, w, tw)]
    row_spans = [(y, min(y + th, h)) for y in range(0, h, th)]
    nb = grid.bins

    def bin_of(v):
        return min(int(v * nb), nb - 1)

    curves, ident = {}, {}
    for tj, (y0, y1) in enumerate(row_spans):
        for ti, (x0, x1) in enumerate(col_spans):
            hist = [0] * nb
            for y in range(y0, y1):
                for x in range(x0, x1):
                    hist[bin_of(data[y, x])] += 1
            total = sum(hist)
            cdf, acc = [], 0
            for c in hist:
                acc += c
                cdf.append(acc)
            low = next(cdf[k] for k in range(nb) if hist[k])
            if low == total:
                ident[tj, ti] = True
                curves[tj, ti] = None
            else:
                ident[tj, ti] = False
                curves[tj, ti] = [
                    min(max((c - low) / (total - low), 0.0), 1.0) for c in cdf
                ]

    cx = [(x0 + x1 - 1) / 2.0 for x0, x1 in col_spans]
    cy = [(y0 + y1 - 1) / 2.0 for y0, y1 in row_spans]

    def axis(pos, centers):
        if len(centers) == 1:
            return 0, 0, 0.0
        if pos <= centers[0]:
            return 0, 1, 0.0
        if pos >= centers[-1]:
            return len(centers) - 2, len(centers) - 1, 1.0
        k = max(i for i in range(len(centers)) if centers[i] <= pos)
        k = min(k, len(centers) - 2)
        return k, k + 1, (pos - centers[k]) / (centers[k + 1] - centers[k])

    def owning_tile(pos, spans):
        return next(k for k, (s0, s1) in enumerate(spans) if s0 <= pos < s1)

    out = np.empty_like(data)
    for y in range(h):
        j0, j1, fy = axis(float(y), cy)
        if not interpolate:
            j0 = j1 = owning_tile(y, row_spans)
            fy = 0.0
        for x in range(w):
            i0, i1, fx = axis(float(x), cx)
            if not interpolate:
                i0 = i1 = owning_tile(x, col_spans)
                fx = 0.0
            v = data[y, x]

            def curve_val(tj, ti):
                if ident[tj, ti]:
                    return v
                return curves[tj, ti][bin_of(v)]

            c00, c01 = curve_val(j0, i0), curve_val(j0, i1)
            c10, c11 = curve_val(j1, i0), curve_val(j1, i1)
            top = c00 + fx * (c01 - c00)
            bottom = c10 + fx * (c11 - c10)
            eq = top + fy * (bottom - top)
            out[y, x] = min(max(v + grid.strength * (eq - v), 0.0), 1.0)
    return out


class TestSigmoid:
    def test_curve_validation(self):
        with pytest.raises(ValueError):
            SigmoidCurve(slope=0.0)
        with pytest.raises(ValueError):
            SigmoidCurve(slope=-2.0)
        with pytest.raises(ValueError):
            SigmoidCurve(slope=float("inf"))
        with pytest.raises(ValueError):
            SigmoidCurve(midpoint=1.5)

    def test_midpoint_maps_to_half(self):
        out = apply_sigmoid(PlanarImage(np.full((1, 1), 0.5)), SigmoidCurve(midpoint=0.5, slope=7.0))
        assert out.data[0, 0] == pytest.approx(0.5, abs=1e-12)

    def test_endpoints_pinned(self):
        out = apply_sigmoid(PlanarImage(np.array([[0.0, 1.0]])), SigmoidCurve(slope=5.0))
        assert out.data[0, 0] == 0.0
        assert out.data[0, 1] == 1.0

    def test_tiny_slope_approaches_identity_ramp(self):
        ramp = np.linspace(0.0, 1.0, 64)[None, :]
        out = apply_sigmoid(PlanarImage(ramp), SigmoidCurve(slope=1e-6))
        assert np.abs(out.data - ramp).max() < 1e-5

    @given(l1=lum, l2=lum, slope=st.floats(0.1, 50.0, width=64), mid=lum)
    def test_order_preserving(self, l1, l2, slope, mid):
        lo, hi = sorted((l1, l2))
        out = apply_sigmoid(PlanarImage(np.array([[lo, hi]])), SigmoidCurve(mid, slope))
        assert out.data[0, 0] <= out.data[0, 1]

    def test_constant_stays_constant(self):
        out = apply_sigmoid(PlanarImage(np.full((3, 4), 0.3)))
        assert (out.data == out.data[0, 0]).all()

    def test_rejects_rgb(self, rng):
        with pytest.raises(ValueError):
            apply_sigmoid(rand_rgb(rng, 2, 2))


class TestLocalLhe:
    def test_grid_validation(self):
        with pytest.raises(ValueError):
            LocalHistogramGrid(tile_w=0, tile_h=4)
        with pytest.raises(ValueError):
            LocalHistogramGrid(tile_w=4, tile_h=4, bins=1)
        with pytest.raises(ValueError):
            LocalHistogramGrid(tile_w=4, tile_h=4, strength=1.2)

    def test_strength_zero_is_bit_identical(self, rng):
        img = PlanarImage(rng.random((16, 16)))
        grid = LocalHistogramGrid(tile_w=4, tile_h=4, strength=0.0)
        out = apply_local_lhe(img, grid)
        assert out.data.tobytes() == img.data.tobytes()

    def test_constant_image_unchanged(self):
        img = PlanarImage(np.full((12, 10), 0.37))
        grid = LocalHistogramGrid(tile_w=4, tile_h=4, strength=1.0)
        out = apply_local_lhe(img, grid)
        assert np.array_equal(out.data, img.data)

    def test_tile_larger_than_image_clamps(self, rng):
        img = PlanarImage(rng.random((6, 6)))
        grid = LocalHistogramGrid(tile_w=10_000, tile_h=10_000, strength=1.0)
        out = apply_local_lhe(img, grid)  # single global tile, no error
        assert out.data.shape == img.data.shape

    def test_output_in_unit_range(self, rng):
        img = PlanarImage(rng.random((20, 24)))
        out = apply_local_lhe(img, LocalHistogramGrid(tile_w=6, tile_h=5, strength=1.0))
        assert out.data.min() >= 0.0
        assert out.data.max() <= 1.0

    def test_two_tile_case_matches_reference(self):
        # dark left half, bright right half, one tile each
        xs = np.linspace(0.0, 1.0, 4)
        left = 0.3 * np.tile(xs, (8, 1))
        right = 0.7 + 0.3 * np.tile(xs, (8, 1))
        data = np.hstack([left, right])
        grid = LocalHistogramGrid(tile_w=4, tile_h=8, bins=16, strength=1.0)
        out = apply_local_lhe(PlanarImage(data), grid)
        ref = reference_lhe(data, grid)
        assert np.abs(out.data - ref).max() <= 1e-12
        # each half is stretched toward full range
        assert out.data[:, :4].std() > data[:, :4].std()
        assert out.data[:, 4:].std() > data[:, 4:].std()

    def test_random_image_matches_reference(self, rng):
        data = rng.random((11, 13))
        grid = LocalHistogramGrid(tile_w=5, tile_h=4, bins=32, strength=0.7)
        out = apply_local_lhe(PlanarImage(data), grid)
        assert np.abs(out.data - reference_lhe(data, grid)).max() <= 1e-12

    def test_interpolation_smooths_tile_seams(self):
        # per-tile curves alone tear a smooth ramp apart at tile borders;
        # the blended curves keep adjacent differences an order of magnitude smaller
        ramp = np.tile(np.linspace(0.0, 1.0, 64), (32, 1))
        grid = LocalHistogramGrid(8, 8, strength=1.0)
        smooth = apply_local_lhe(PlanarImage(ramp), grid)
        hard = reference_lhe(ramp, grid, interpolate=False)
        hard_jump = np.abs(np.diff(hard, axis=1)).max()
        smooth_jump = np.abs(np.diff(smooth.data, axis=1)).max()
        assert hard_jump > 0.9
        assert smooth_jump <= 0.15

    def test_thread_count_invariance(self, rng):
        img = PlanarImage(rng.random((30, 17)))
        grid = LocalHistogramGrid(tile_w=6, tile_h=7, strength=0.9)
        base = apply_local_lhe(img, grid, threads=1).data.tobytes()
        for threads in (2, 5, 8):
            assert apply_local_lhe(img, grid, threads=threads).data.tobytes() == base

    def test_rejects_rgb(self, rng):
        with pytest.raises(ValueError):
            apply_local_lhe(rand_rgb(rng, 4, 4), LocalHistogramGrid(2, 2))


class TestReinstate:
    def test_identity_ratio_returns_input(self, rng):
        rgb = rand_u8_rgb(rng, 6, 6)
        l_in = decolor_image(rgb)
        out = reinstate_color(rgb, l_in, l_in)
        assert np.abs(out.data - rgb.data).max() <= 1e-6

    def test_zero_target_gives_black(self, rng):
        rgb = rand_rgb(rng, 4, 4)
        l_in = decolor_image(rgb)
        out = reinstate_color(rgb, l_in, PlanarImage(np.zeros((4, 4))))
        assert (out.data == 0.0).all()

    def test_ratio_fixture(self):
        rgb = PlanarImage(np.array([[[0.5, 0.25, 0.1]]]))
        l_in = PlanarImage(np.array([[0.4]]))
        l_out = PlanarImage(np.array([[0.6]]))
        out = reinstate_color(rgb, l_in, l_out)
        assert out.data[0, 0] == pytest.approx([0.75, 0.375, 0.15], abs=1e-12)

    def test_black_pixels_stay_black(self):
        rgb = PlanarImage(np.zeros((2, 2, 3)))
        zero = PlanarImage(np.zeros((2, 2)))
        bright = PlanarImage(np.ones((2, 2)))
        out = reinstate_color(rgb, zero, bright)
        assert (out.data == 0.0).all()

    def test_hue_ratios_preserved(self, rng):
        rgb = rand_rgb(rng, 8, 8)
        l_in = decolor_image(rgb)
        l_out = PlanarImage(l_in.data * rng.uniform(0.2, 1.0, size=l_in.data.shape))
        out = reinstate_color(rgb, l_in, l_out)
        mask = (l_in.data > 1e-3) & (rgb.data[:, :, 1] > 1e-3)
        got = out.data[:, :, 0][mask] / out.data[:, :, 1][mask]
        want = rgb.data[:, :, 0][mask] / rgb.data[:, :, 1][mask]
        assert np.abs(got - want).max() <= 1e-9

    def test_dimension_mismatch(self, rng):
        rgb = rand_rgb(rng, 3, 3)
        with pytest.raises(ValueError):
            reinstate_color(rgb, PlanarImage(np.zeros((2, 3))), PlanarImage(np.zeros((3, 3))))

    def test_kind_mismatch(self, rng):
        rgb = rand_rgb(rng, 3, 3)
        with pytest.raises(ValueError):
            reinstate_color(rgb, rgb, PlanarImage(np.zeros((3, 3))))


class TestPipeline:
    def test_global_mode_runs(self, rng):
        rgb = rand_rgb(rng, 10, 12)
        out, toned = tonemap_image(rgb, mode="global")
        assert out.kind == "rgb" and toned.kind == "luminance"
        assert out.data.shape == rgb.data.shape

    def test_local_mode_runs(self, rng):
        rgb = rand_rgb(rng, 10, 12)
        out, toned = tonemap_image(rgb, mode="local")
        assert out.data.shape == rgb.data.shape

    def test_unknown_mode(self, rng):
        with pytest.raises(ValueError):
            tonemap_image(rand_rgb(rng, 2, 2), mode="fancy")

    def test_deterministic_across_runs_and_threads(self, rng):
        rgb = rand_rgb(rng, 24, 20)
        grid = LocalHistogramGrid(tile_w=5, tile_h=6, strength=0.8)
        ref = None
        for threads in (1, 2, 8):
            out, toned = tonemap_image(rgb, mode="local", grid=grid, threads=threads)
            blob = out.data.tobytes() + toned.data.tobytes()
            if ref is None:
                ref = blob
            assert blob == ref
