"""Shared fixtures and independent oracles used across the suite.

The flood-fill oracle here is deliberately written from scratch (plain BFS
over an explicit neighbor list) so segmentation results can be checked
against an implementation that shares no code with the library.
"""
from collections import deque

import numpy as np
import pytest

from seedseg import Decision, ImageRGB


def make_image(arr) -> ImageRGB:
    return ImageRGB(np.asarray(arr, dtype=np.uint8))


def two_region_image(width, height, left_color, right_color) -> ImageRGB:
    """Vertical split: columns [0, width/2) get left_color, the rest right_color."""
    px = np.zeros((height, width, 3), dtype=np.uint8)
    px[:, : width // 2] = left_color
    px[:, width // 2 :] = right_color
    return ImageRGB(px)


def random_image(width, height, seed, palette=None) -> ImageRGB:
    rng = np.random.default_rng(seed)
    if palette is None:
        px = rng.integers(0, 256, (height, width, 3), dtype=np.uint8)
    else:
        choices = np.asarray(palette, dtype=np.uint8)
        px = choices[rng.integers(0, len(choices), (height, width))]
    return ImageRGB(px)


def threshold_decider(max_diff_channels):
    """Symmetric decider: join iff every |channel difference| <= threshold.

    The threshold is given on the 0..255 scale; inputs arrive normalized.
    """
    limit = max_diff_channels / 255.0 + 1e-12

    def decider(pair):
        return (
            Decision.JOIN
            if np.max(np.abs(pair[:3] - pair[3:])) <= limit
            else Decision.REJECT
        )

    return decider


def always_join(pair):
    return Decision.JOIN


def always_reject(pair):
    return Decision.REJECT


def hash_decider(salt, join_one_in=2):
    """Deterministic pseudo-random decider keyed by the input bytes."""
    import zlib

    def decider(pair):
        digest = zlib.crc32(pair.tobytes() + salt.to_bytes(8, "little"))
        return Decision.JOIN if digest % join_one_in == 0 else Decision.REJECT

    return decider


def flood_fill_oracle(img: ImageRGB, seed_xy, join_predicate):
    """Brute-force 8-connected component of `seed_xy` under a symmetric predicate.

    `join_predicate(color_a, color_b)` takes two raw (r, g, b) uint8 triples.
    """
    width, height = img.width, img.height
    sx, sy = seed_xy
    seen = {(sx, sy)}
    queue = deque([(sx, sy)])
    px = img.pixels
    while queue:
        x, y = queue.popleft()
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                if dx == 0 and dy == 0:
                    continue
                nx, ny = x + dx, y + dy
                if 0 <= nx < width and 0 <= ny < height and (nx, ny) not in seen:
                    if join_predicate(px[y, x], px[ny, nx]):
                        seen.add((nx, ny))
                        queue.append((nx, ny))
    return seen


def channels_within(threshold):
    """Raw-scale symmetric predicate matching threshold_decider."""

    def predicate(a, b):
        return int(np.max(np.abs(a.astype(np.int32) - b.astype(np.int32)))) <= threshold

    return predicate


@pytest.fixture
def tmp_ppm(tmp_path):
    """Write an image to a temp .ppm and return the path."""
    from seedseg import save_ppm

    def write(img, name="img.ppm"):
        path = tmp_path / name
        path.write_bytes(save_ppm(img))
        return path

    return write
