import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seedseg import (
    FormatError,
    ImageRGB,
    LabelMap,
    PixelCoord,
    Rgb,
    load_ppm,
    overlay_mask,
    parse_labels,
    parse_mask,
    render_contours,
    save_ppm,
    serialize_labels,
    serialize_mask,
)

from conftest import make_image, random_image


class TestLoadPpm:
    def test_minimal_one_pixel(self):
        img = load_ppm(b"P6\n1 1\n255\n" + bytes([10, 20, 30]))
        assert (img.width, img.height) == (1, 1)
        assert img.get(0, 0) == Rgb(10, 20, 30)

    def test_rejects_p5(self):
        with pytest.raises(FormatError, match="magic"):
            load_ppm(b"P5\n1 1\n255\n\x00")

    def test_row_major_layout(self):
        # Byte k of a 2x2 payload is channel k%3 of pixel k//3 in row-major
        # order, so pixel (x=1, y=0) starts at byte 3.
        img = load_ppm(b"P6\n2 2\n255\n" + bytes(range(12)))
        assert img.get(1, 0) == Rgb(3, 4, 5)
        assert img.get(0, 1) == Rgb(6, 7, 8)

    def test_layout_matches_reference_reader(self):
        from PIL import Image

        img = random_image(7, 5, seed=123)
        data = save_ppm(img)
        ref = np.asarray(Image.open(io.BytesIO(data)).convert("RGB"))
        assert np.array_equal(ref, img.pixels)

    def test_reads_reference_writer_output(self):
        from PIL import Image

        rng = np.random.default_rng(7)
        arr = rng.integers(0, 256, (4, 6, 3), dtype=np.uint8)
        buf = io.BytesIO()
        Image.fromarray(arr, "RGB").save(buf, format="PPM")
        img = load_ppm(buf.getvalue())
        assert np.array_equal(img.pixels, arr)

    def test_header_comments_and_whitespace(self):
        data = b"P6 # a comment\n  2\t1 # another\n255\n" + bytes(6)
        img = load_ppm(data)
        assert (img.width, img.height) == (2, 1)

    @pytest.mark.parametrize(
        "data,msg",
        [
            (b"P6\n1 1\n254\n\x00\x00\x00", "maxval"),
            (b"P6\n0 2\n255\n", "dimensions"),
            (b"P6\n-1 2\n255\n", "dimensions"),
            (b"P6\n2 2\n255\n" + bytes(11), "truncated"),
            (b"P6\n2 2\n255", "whitespace"),
            (b"P6\n2\n", "truncated header"),
            (b"P6\nabc 1\n255\n", "integer"),
        ],
    )
    def test_malformed(self, data, msg):
        with pytest.raises(FormatError, match=msg):
            load_ppm(data)

    def test_ignores_trailing_bytes(self):
        img = load_ppm(b"P6\n1 1\n255\n" + bytes([1, 2, 3]) + b"\n")
        assert img.get(0, 0) == Rgb(1, 2, 3)


class TestSavePpm:
    def test_black_pixel(self):
        img = make_image([[[0, 0, 0]]])
        assert save_ppm(img) == b"P6\n1 1\n255\n\x00\x00\x00"

    def test_two_pixels_enumerated(self):
        img = make_image([[[255, 0, 0], [0, 255, 0]]])
        assert save_ppm(img) == b"P6\n2 1\n255\n" + bytes([255, 0, 0, 0, 255, 0])

    def test_round_trip_random_8x8(self):
        img = random_image(8, 8, seed=99)
        assert load_ppm(save_ppm(img)) == img

    @settings(max_examples=40)
    @given(st.integers(1, 16), st.integers(1, 16), st.integers(0, 2**32 - 1))
    def test_round_trip_property(self, width, height, seed):
        img = random_image(width, height, seed)
        assert load_ppm(save_ppm(img)) == img


class TestRenderContours:
    def test_uniform_labels_unchanged(self):
        img = random_image(5, 4, seed=1)
        lm = LabelMap(np.ones((4, 5), dtype=np.int32), max_label=1)
        assert render_contours(img, lm) == img

    def test_single_pixel_unchanged(self):
        img = make_image([[[9, 9, 9]]])
        lm = LabelMap(np.array([[1]], dtype=np.int32), max_label=1)
        assert render_contours(img, lm) == img

    def test_boundary_pair_marked(self):
        img = make_image([[[10, 10, 10], [20, 20, 20], [30, 30, 30], [40, 40, 40]]])
        lm = LabelMap(np.array([[1, 1, 2, 2]], dtype=np.int32), max_label=2)
        out = render_contours(img, lm)
        assert out.get(0, 0) == Rgb(10, 10, 10)
        assert out.get(1, 0) == Rgb(255, 0, 0)
        assert out.get(2, 0) == Rgb(255, 0, 0)
        assert out.get(3, 0) == Rgb(40, 40, 40)

    def test_interior_pixels_untouched(self):
        img = random_image(6, 6, seed=2)
        labels = np.ones((6, 6), dtype=np.int32)
        labels[:, 3:] = 2
        lm = LabelMap(labels, max_label=2)
        out = render_contours(img, lm)
        # Strictly interior to segment 1: columns 0..1; to segment 2: 4..5.
        assert np.array_equal(out.pixels[:, :2], img.pixels[:, :2])
        assert np.array_equal(out.pixels[:, 4:], img.pixels[:, 4:])

    def test_dimension_mismatch(self):
        img = random_image(3, 3, seed=3)
        lm = LabelMap(np.ones((2, 3), dtype=np.int32), max_label=1)
        with pytest.raises(ValueError, match="mismatch"):
            render_contours(img, lm)

    def test_zero_label_rejected(self):
        img = random_image(2, 2, seed=4)
        lm = LabelMap(np.array([[1, 1], [1, 0]], dtype=np.int32), max_label=1)
        with pytest.raises(ValueError, match="zero"):
            render_contours(img, lm)


class TestOverlayMask:
    def test_alpha_zero_identity(self):
        img = random_image(4, 4, seed=5)
        out = overlay_mask(img, {PixelCoord(1, 1)}, Rgb(255, 255, 255), 0.0)
        assert out == img

    def test_alpha_one_paints_exact_color(self):
        img = random_image(4, 4, seed=6)
        out = overlay_mask(img, {PixelCoord(2, 3), PixelCoord(0, 0)}, Rgb(7, 8, 9), 1.0)
        assert out.get(2, 3) == Rgb(7, 8, 9)
        assert out.get(0, 0) == Rgb(7, 8, 9)
        assert out.get(1, 1) == img.get(1, 1)

    def test_midpoint_blend(self):
        img = make_image([[[100, 100, 100]]])
        out = overlay_mask(img, {PixelCoord(0, 0)}, Rgb(200, 200, 200), 0.5)
        assert out.get(0, 0) == Rgb(150, 150, 150)

    def test_empty_mask_identity(self):
        img = random_image(3, 3, seed=7)
        assert overlay_mask(img, set(), Rgb(1, 2, 3), 0.8) == img

    def test_out_of_bounds_coordinate(self):
        img = random_image(3, 3, seed=8)
        with pytest.raises(ValueError, match="bounds"):
            overlay_mask(img, {PixelCoord(3, 0)}, Rgb(0, 0, 0), 0.5)

    def test_alpha_out_of_range(self):
        img = random_image(2, 2, seed=9)
        with pytest.raises(ValueError, match="alpha"):
            overlay_mask(img, set(), Rgb(0, 0, 0), 1.5)


class TestLabelMapFormat:
    def test_round_trip(self):
        labels = np.array([[1, 1, 2], [3, 2, 2]], dtype=np.int32)
        lm = LabelMap(labels, max_label=3)
        assert parse_labels(serialize_labels(lm)) == lm

    def test_exact_layout(self):
        lm = LabelMap(np.array([[1, 2]], dtype=np.int32), max_label=2)
        assert serialize_labels(lm) == b"SEEDSEG-LABELS 1\n2 1 2\n1 2\n"

    @pytest.mark.parametrize(
        "data,msg",
        [
            (b"SEEDSEG-LABELS 2\n1 1 1\n1\n", "magic"),
            (b"SEEDSEG-LABELS 1\n1 1\n1\n", "3 fields"),
            (b"SEEDSEG-LABELS 1\n2 1 1\n1\n", "labels"),
            (b"SEEDSEG-LABELS 1\n1 2 1\n1\n", "rows"),
            (b"SEEDSEG-LABELS 1\n1 1 1\nx\n", "non-numeric"),
            (b"SEEDSEG-LABELS 1\n1 1 1\n2\n", "outside"),
            (b"SEEDSEG-LABELS 1\n2 1 5\n1 2\n", "highest label"),
        ],
    )
    def test_malformed(self, data, msg):
        with pytest.raises(FormatError, match=msg):
            parse_labels(data)


class TestMaskFormat:
    def test_round_trip_small(self):
        mask = {PixelCoord(0, 0), PixelCoord(2, 1)}
        data = serialize_mask(3, 2, mask)
        assert parse_mask(data) == (3, 2, mask)

    def test_round_trip_wide(self):
        # Wider than the 64-char line wrap.
        mask = {PixelCoord(x, 0) for x in range(0, 100, 3)}
        data = serialize_mask(100, 2, mask)
        for line in data.decode().splitlines():
            assert len(line) <= 70
        assert parse_mask(data) == (100, 2, mask)

    def test_is_p1(self):
        data = serialize_mask(2, 1, {PixelCoord(1, 0)})
        assert data.startswith(b"P1\n2 1\n")
        assert parse_mask(b"P1\n# comment\n2 1\n0 1\n") == (2, 1, {PixelCoord(1, 0)})

    def test_malformed(self):
        with pytest.raises(FormatError, match="magic"):
            parse_mask(b"P4\n1 1\n0")
        with pytest.raises(FormatError, match="truncated"):
            parse_mask(b"P1\n2 2\n0 1 0")
        with pytest.raises(FormatError, match="unexpected"):
            parse_mask(b"P1\n1 1\n7")


class TestValidation:
    def test_image_needs_uint8(self):
        with pytest.raises(ValueError, match="uint8"):
            ImageRGB(np.zeros((2, 2, 3), dtype=np.int32))

    def test_image_needs_three_channels(self):
        with pytest.raises(ValueError, match="shape"):
            ImageRGB(np.zeros((2, 2), dtype=np.uint8))

    def test_label_map_rejects_negative(self):
        with pytest.raises(ValueError, match="non-negative"):
            LabelMap(np.array([[-1]], dtype=np.int32), max_label=1)

    def test_label_map_rejects_exceeding_max(self):
        with pytest.raises(ValueError, match="exceeds"):
            LabelMap(np.array([[5]], dtype=np.int32), max_label=3)
