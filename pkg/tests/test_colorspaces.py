"""Baseline extractors and CIELAB conversion tests."""

import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from warmgray import (
    LabColor,
    PlanarImage,
    available_backends,
    decolor_pixel,
    delta_e76,
    hsv_v,
    lab_image,
    lab_lightness,
    luma_weighted,
    luminance_image,
    rgb_to_lab,
)
from conftest import rand_rgb

channels = st.floats(0.0, 1.0, allow_nan=False, allow_infinity=False, width=64)
pixels = st.tuples(channels, channels, channels)
lab_coord = st.floats(-128.0, 128.0, allow_nan=False, allow_infinity=False, width=64)
labs = st.builds(LabColor, l_star=st.floats(0, 100, width=64), a_star=lab_coord, b_star=lab_coord)


class TestWeightedLuma:
    def test_fixtures(self):
        assert luma_weighted((1, 0, 0)) == pytest.approx(0.2989, abs=1e-12)
        assert luma_weighted((0, 0, 0)) == 0.0
        assert luma_weighted((1, 1, 1)) == pytest.approx(0.9999, abs=1e-12)

    @given(pix=pixels)
    def test_range(self, pix):
        assert 0.0 <= luma_weighted(pix) <= 1.0


class TestHsvValue:
    def test_fixtures(self):
        assert hsv_v((0.2, 0.5, 0.3)) == 0.5
        assert hsv_v((0, 0, 1)) == 1.0

    @given(v=channels)
    def test_gray_axis(self, v):
        assert hsv_v((v, v, v)) == v


class TestRgbToLab:
    def test_white(self):
        lab = rgb_to_lab((1, 1, 1))
        assert lab.l_star == pytest.approx(100.0, abs=1e-4)
        assert abs(lab.a_star) < 1e-4
        assert abs(lab.b_star) < 1e-4

    def test_black(self):
        lab = rgb_to_lab((0, 0, 0))
        assert lab.l_star == pytest.approx(0.0, abs=1e-9)
        assert lab.a_star == pytest.approx(0.0, abs=1e-9)
        assert lab.b_star == pytest.approx(0.0, abs=1e-9)

    def test_pure_red_reference(self):
        # frozen from the standard sRGB (D65) to Lab computation
        assert rgb_to_lab((1, 0, 0)).l_star == pytest.approx(53.2408, abs=1e-3)

    @given(v1=channels, v2=channels)
    def test_gray_axis_monotone(self, v1, v2):
        assume(abs(v1 - v2) > 1e-6)
        lo, hi = sorted((v1, v2))
        assert lab_lightness((lo, lo, lo)) < lab_lightness((hi, hi, hi))

    @given(pix=pixels)
    def test_lightness_in_unit_range(self, pix):
        assert 0.0 <= lab_lightness(pix) <= 1.0


class TestDeltaE:
    def test_identical_zero(self):
        c = rgb_to_lab((0.3, 0.7, 0.2))
        assert delta_e76(c, c) == 0.0

    def test_axis_aligned(self):
        assert delta_e76(LabColor(50, 0, 0), LabColor(60, 0, 0)) == pytest.approx(10.0)

    def test_white_vs_black(self):
        d = delta_e76(rgb_to_lab((1, 1, 1)), rgb_to_lab((0, 0, 0)))
        assert d == pytest.approx(100.0, abs=1e-3)

    @given(a=labs, b=labs)
    def test_symmetry(self, a, b):
        assert delta_e76(a, b) == delta_e76(b, a)

    @given(a=labs, b=labs, c=labs)
    def test_triangle_inequality(self, a, b, c):
        assert delta_e76(a, c) <= delta_e76(a, b) + delta_e76(b, c) + 1e-9

    @given(a=labs, b=labs)
    def test_nonnegative_zero_iff_equal(self, a, b):
        d = delta_e76(a, b)
        assert d >= 0.0
        if a == b:
            assert d == 0.0
        elif d == 0.0:
            assert (a.l_star, a.a_star, a.b_star) == (b.l_star, b.a_star, b.b_star)


class TestImageDrivers:
    @pytest.mark.parametrize("backend", available_backends())
    def test_methods_match_scalar_oracles(self, rng, backend):
        img = rand_rgb(rng, 6, 7)
        oracles = {
            "ours": decolor_pixel,
            "y": luma_weighted,
            "weighted": luma_weighted,
            "v": hsv_v,
            "lab": lab_lightness,
        }
        for method, oracle in oracles.items():
            out = luminance_image(img, method=method, backend=backend)
            ref = np.array(
                [
                    [oracle(tuple(img.data[y, x])) for x in range(img.width)]
                    for y in range(img.height)
                ]
            )
            assert np.abs(out.data - ref).max() <= 1e-6, method

    def test_lab_image_matches_scalar(self, rng):
        img = rand_rgb(rng, 5, 4)
        arr = lab_image(img)
        ref = rgb_to_lab(tuple(img.data[2, 3]))
        assert arr[2, 3, 0] == pytest.approx(ref.l_star, abs=1e-9)
        assert arr[2, 3, 1] == pytest.approx(ref.a_star, abs=1e-9)
        assert arr[2, 3, 2] == pytest.approx(ref.b_star, abs=1e-9)

    def test_unknown_method(self, rng):
        with pytest.raises(ValueError):
            luminance_image(rand_rgb(rng, 2, 2), method="nope")

    def test_rejects_luminance_input(self, rng):
        with pytest.raises(ValueError):
            luminance_image(PlanarImage(rng.random((3, 3))), method="y")
        with pytest.raises(ValueError):
            lab_image(PlanarImage(rng.random((3, 3))))
