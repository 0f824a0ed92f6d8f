"""RGB image and label-map types plus their on-disk formats.

Formats handled here:

- binary PPM (``P6``, maxval 255) for images; the one canonical image format
  of this toolkit,
- a plain-text label-map format (``.smap``): ``SEEDSEG-LABELS 1`` header,
  dimensions plus segment count, then one row of labels per line,
- plain-text PBM (``P1``) for single-segment masks, ``1`` = pixel in segment.

Coordinates are ``(x=column, y=row)`` with the origin at the top-left corner.
Pixel storage is a ``(height, width, 3)`` uint8 array, so ``pixels[y, x]``
is the ``(r, g, b)`` triple at column x, row y.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

PALETTE_DEPTH = 256
CONTOUR_COLOR = (255, 0, 0)

# 8-connectivity offsets as (dy, dx), scanned in row-major order. Both the
# training-set builder and the region grower iterate neighbors in this order,
# which pins down their deterministic behavior.
NEIGHBORS_8 = (
    (-1, -1), (-1, 0), (-1, 1),
    (0, -1), (0, 1),
    (1, -1), (1, 0), (1, 1),
)

_LABELS_MAGIC = "SEEDSEG-LABELS 1"


class FormatError(ValueError):
    """Malformed image, model, label-map, or mask data."""


class Rgb(NamedTuple):
    r: int
    g: int
    b: int


class PixelCoord(NamedTuple):
    x: int
    y: int


@dataclass(eq=False)
class ImageRGB:
    """A width x height grid of 8-bit RGB pixels."""

    pixels: np.ndarray

    def __post_init__(self):
        px = np.asarray(self.pixels)
        if px.dtype != np.uint8:
            raise ValueError(f"pixels must be uint8, got {px.dtype}")
        if px.ndim != 3 or px.shape[2] != 3:
            raise ValueError(f"pixels must have shape (H, W, 3), got {px.shape}")
        if px.shape[0] < 1 or px.shape[1] < 1:
            raise ValueError("image dimensions must be at least 1x1")
        self.pixels = np.ascontiguousarray(px)

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def palette_depth(self) -> int:
        return PALETTE_DEPTH

    def get(self, x: int, y: int) -> Rgb:
        r, g, b = self.pixels[y, x]
        return Rgb(int(r), int(g), int(b))

    def in_bounds(self, x: int, y: int) -> bool:
        return 0 <= x < self.width and 0 <= y < self.height

    def copy(self) -> "ImageRGB":
        return ImageRGB(self.pixels.copy())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ImageRGB):
            return NotImplemented
        return self.pixels.shape == other.pixels.shape and np.array_equal(
            self.pixels, other.pixels
        )


@dataclass(eq=False)
class LabelMap:
    """Per-pixel segment labels; 0 marks a not-yet-processed pixel."""

    labels: np.ndarray
    max_label: int = 0

    def __post_init__(self):
        lab = np.asarray(self.labels)
        if lab.ndim != 2:
            raise ValueError(f"labels must be 2-D, got shape {lab.shape}")
        if lab.shape[0] < 1 or lab.shape[1] < 1:
            raise ValueError("label map dimensions must be at least 1x1")
        if not np.issubdtype(lab.dtype, np.integer):
            raise ValueError(f"labels must be integers, got {lab.dtype}")
        lo, hi = int(lab.min()), int(lab.max())
        if lo < 0:
            raise ValueError("labels must be non-negative")
        if hi > self.max_label:
            raise ValueError(
                f"label {hi} exceeds declared max_label {self.max_label}"
            )
        self.labels = np.ascontiguousarray(lab.astype(np.int32, copy=False))

    @classmethod
    def zeros(cls, width: int, height: int) -> "LabelMap":
        return cls(np.zeros((height, width), dtype=np.int32), max_label=0)

    @property
    def width(self) -> int:
        return self.labels.shape[1]

    @property
    def height(self) -> int:
        return self.labels.shape[0]

    def get(self, x: int, y: int) -> int:
        return int(self.labels[y, x])

    def __eq__(self, other) -> bool:
        if not isinstance(other, LabelMap):
            return NotImplemented
        return self.max_label == other.max_label and np.array_equal(
            self.labels, other.labels
        )


class _HeaderScanner:
    """Tokenizer for PNM headers: whitespace-separated, '#' starts a comment."""

    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def _skip_space(self) -> None:
        d, n = self.data, len(self.data)
        while self.pos < n:
            c = d[self.pos]
            if c in b" \t\r\n\x0b\x0c":
                self.pos += 1
            elif c == ord("#"):
                while self.pos < n and d[self.pos] not in b"\r\n":
                    self.pos += 1
            else:
                return

    def next_token(self) -> bytes:
        self._skip_space()
        start = self.pos
        d, n = self.data, len(self.data)
        while self.pos < n and d[self.pos] not in b" \t\r\n\x0b\x0c#":
            self.pos += 1
        if self.pos == start:
            raise FormatError("truncated header")
        return d[start : self.pos]

    def next_int(self) -> int:
        tok = self.next_token()
        try:
            return int(tok)
        except ValueError:
            raise FormatError(f"expected integer in header, got {tok!r}") from None


def load_ppm(data: bytes) -> ImageRGB:
    """Parse binary PPM (P6, maxval 255) bytes into an image.

    Channel values are taken verbatim; no color transformation is applied.
    Trailing bytes after the pixel payload are ignored.
    """
    scan = _HeaderScanner(data)
    magic = scan.next_token()
    if magic != b"P6":
        raise FormatError(f"bad magic: expected P6, got {magic!r}")
    width = scan.next_int()
    height = scan.next_int()
    if width <= 0 or height <= 0:
        raise FormatError(f"non-positive dimensions {width}x{height}")
    maxval = scan.next_int()
    if maxval != 255:
        raise FormatError(f"unsupported maxval {maxval}, only 255 is handled")
    # Exactly one whitespace byte separates the header from the pixel payload.
    if scan.pos >= len(data) or data[scan.pos] not in b" \t\r\n\x0b\x0c":
        raise FormatError("missing whitespace after maxval")
    start = scan.pos + 1
    need = width * height * 3
    payload = data[start : start + need]
    if len(payload) < need:
        raise FormatError(
            f"truncated pixel data: expected {need} bytes, got {len(payload)}"
        )
    px = np.frombuffer(payload, dtype=np.uint8).reshape(height, width, 3)
    return ImageRGB(px.copy())


def save_ppm(img: ImageRGB) -> bytes:
    """Serialize an image as binary PPM. Inverse of :func:`load_ppm`."""
    header = f"P6\n{img.width} {img.height}\n255\n".encode("ascii")
    return header + img.pixels.tobytes()


def render_contours(img: ImageRGB, lm: LabelMap) -> ImageRGB:
    """Paint segment boundaries onto a copy of the image.

    A pixel is a boundary pixel when any 4-neighbor carries a different
    label; boundary pixels become CONTOUR_COLOR, all others keep their
    original value. Requires a fully labeled map (no zeros).
    """
    if (lm.height, lm.width) != (img.height, img.width):
        raise ValueError(
            f"dimension mismatch: image {img.width}x{img.height}, "
            f"labels {lm.width}x{lm.height}"
        )
    if np.any(lm.labels == 0):
        raise ValueError("label map contains unprocessed (zero) labels")
    lab = lm.labels
    boundary = np.zeros(lab.shape, dtype=bool)
    horiz = lab[:, 1:] != lab[:, :-1]
    boundary[:, 1:] |= horiz
    boundary[:, :-1] |= horiz
    vert = lab[1:, :] != lab[:-1, :]
    boundary[1:, :] |= vert
    boundary[:-1, :] |= vert
    out = img.pixels.copy()
    out[boundary] = CONTOUR_COLOR
    return ImageRGB(out)


def overlay_mask(
    img: ImageRGB, mask: Iterable[PixelCoord], color: Rgb, alpha: float
) -> ImageRGB:
    """Alpha-blend `color` over the masked pixels.

    Each masked channel becomes round((1 - alpha) * original + alpha * color)
    with round-half-to-even; unmasked pixels are untouched.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must be in [0, 1], got {alpha}")
    for c in color:
        if not 0 <= c <= 255:
            raise ValueError(f"color channel {c} outside [0, 255]")
    coords = list(mask)
    out = img.pixels.copy()
    if not coords:
        return ImageRGB(out)
    xs = np.array([c[0] for c in coords], dtype=np.int64)
    ys = np.array([c[1] for c in coords], dtype=np.int64)
    if (
        xs.min() < 0
        or ys.min() < 0
        or xs.max() >= img.width
        or ys.max() >= img.height
    ):
        raise ValueError("mask coordinate out of bounds")
    orig = out[ys, xs].astype(np.float64)
    tint = np.array(color, dtype=np.float64)
    blended = np.rint((1.0 - alpha) * orig + alpha * tint)
    out[ys, xs] = blended.astype(np.uint8)
    return ImageRGB(out)


def serialize_labels(lm: LabelMap) -> bytes:
    """Write a label map in the .smap text format."""
    lines = [_LABELS_MAGIC, f"{lm.width} {lm.height} {lm.max_label}"]
    for row in lm.labels:
        lines.append(" ".join(str(int(v)) for v in row))
    return ("\n".join(lines) + "\n").encode("ascii")


def parse_labels(data: bytes) -> LabelMap:
    """Inverse of :func:`serialize_labels`, with full validation."""
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError:
        raise FormatError("label map file is not ASCII text") from None
    lines = [ln for ln in text.splitlines()]
    if not lines or lines[0].strip() != _LABELS_MAGIC:
        got = lines[0].strip() if lines else ""
        raise FormatError(f"bad label-map magic: {got!r}")
    if len(lines) < 2:
        raise FormatError("missing dimension line")
    dims = lines[1].split()
    if len(dims) != 3:
        raise FormatError(f"dimension line needs 3 fields, got {len(dims)}")
    try:
        width, height, k = (int(v) for v in dims)
    except ValueError:
        raise FormatError(f"non-numeric dimension line: {lines[1]!r}") from None
    if width < 1 or height < 1:
        raise FormatError(f"non-positive dimensions {width}x{height}")
    rows = [ln for ln in lines[2:] if ln.strip()]
    if len(rows) != height:
        raise FormatError(f"expected {height} label rows, got {len(rows)}")
    grid = np.empty((height, width), dtype=np.int32)
    for y, row in enumerate(rows):
        vals = row.split()
        if len(vals) != width:
            raise FormatError(f"row {y} has {len(vals)} labels, expected {width}")
        try:
            grid[y] = [int(v) for v in vals]
        except ValueError:
            raise FormatError(f"non-numeric label in row {y}") from None
    hi = int(grid.max())
    if int(grid.min()) < 0 or hi > k:
        raise FormatError(f"label values outside [0, {k}]")
    if hi != k and not (hi == 0 and k == 0):
        raise FormatError(f"declared segment count {k} != highest label {hi}")
    return LabelMap(grid, max_label=k)


def serialize_mask(width: int, height: int, mask: Iterable[PixelCoord]) -> bytes:
    """Write a pixel set as a text PBM (P1); 1 = pixel in segment."""
    grid = np.zeros((height, width), dtype=np.uint8)
    for x, y in mask:
        if not (0 <= x < width and 0 <= y < height):
            raise ValueError(f"mask coordinate ({x}, {y}) out of bounds")
        grid[y, x] = 1
    out = [f"P1\n{width} {height}\n"]
    for row in grid:
        bits = "".join("1" if v else "0" for v in row)
        # PBM lines should stay under 70 characters.
        for i in range(0, len(bits), 64):
            out.append(bits[i : i + 64] + "\n")
    return "".join(out).encode("ascii")


def parse_mask(data: bytes) -> tuple[int, int, set[PixelCoord]]:
    """Read a P1 mask; returns (width, height, pixel set)."""
    scan = _HeaderScanner(data)
    magic = scan.next_token()
    if magic != b"P1":
        raise FormatError(f"bad magic: expected P1, got {magic!r}")
    width = scan.next_int()
    height = scan.next_int()
    if width <= 0 or height <= 0:
        raise FormatError(f"non-positive dimensions {width}x{height}")
    bits = []
    d, n = data, len(data)
    pos = scan.pos
    while pos < n and len(bits) < width * height:
        c = d[pos]
        if c in b"01":
            bits.append(c - ord("0"))
            pos += 1
        elif c in b" \t\r\n\x0b\x0c":
            pos += 1
        elif c == ord("#"):
            while pos < n and d[pos] not in b"\r\n":
                pos += 1
        else:
            raise FormatError(f"unexpected byte {bytes([c])!r} in P1 payload")
    if len(bits) != width * height:
        raise FormatError(
            f"truncated mask: expected {width * height} bits, got {len(bits)}"
        )
    mask = set()
    for i, bit in enumerate(bits):
        if bit:
            mask.add(PixelCoord(i % width, i // width))
    return width, height, mask
