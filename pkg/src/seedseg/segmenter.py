"""Region growing over an image, driven by a join/reject pair decider.

The grower keeps an explicit FIFO work queue instead of recursing: the seed
is labeled and enqueued, and each dequeued pixel offers the segment's label
to its still-unlabeled 8-neighbors, asking the decider about the pair
(segment pixel first, candidate second). A joined candidate is enqueued in
turn. Every labeled pixel is dequeued exactly once, so each ordered adjacent
pair is evaluated at most once and a full segmentation makes at most
8 * width * height decider calls.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Union

import numpy as np

from .image import NEIGHBORS_8, ImageRGB, LabelMap, PixelCoord
from .perceptron import Decision, Mlp
from .rng import seeded_rng

# A pair decider maps the 6-component normalized color-pair vector of
# (segment pixel, candidate pixel) to a Join/Reject decision. It must be
# deterministic; any truthy return counts as Join.
PairDecider = Callable[[np.ndarray], Union[Decision, bool]]


@dataclass
class GrowStats:
    """Instrumentation for growing runs."""

    evaluations: int = 0
    segments: int = 0
    sizes: dict[int, int] = field(default_factory=dict)


class MlpDecider:
    """Pair decider backed by a trained model (ties resolve to Reject)."""

    def __init__(self, mlp: Mlp):
        self._w1 = mlp.w1.copy()
        self._b1 = mlp.b1.copy()
        self._w2 = mlp.w2.copy()
        self._b2 = mlp.b2.copy()

    def __call__(self, pair: np.ndarray) -> Decision:
        from . import _sgd

        out_join, out_reject = _sgd.forward_pair(
            self._w1, self._b1, self._w2, self._b2, pair
        )
        return Decision.JOIN if out_join > out_reject else Decision.REJECT


def _normalized(img: ImageRGB) -> np.ndarray:
    return img.pixels.astype(np.float64) / 255.0


def _grow(
    normed: np.ndarray,
    labels: np.ndarray,
    seed: PixelCoord,
    label: int,
    decider: PairDecider,
    stats: GrowStats,
) -> int:
    height, width = labels.shape
    labels[seed.y, seed.x] = label
    queue = deque([(seed.x, seed.y)])
    count = 1
    evaluations = 0
    while queue:
        vx, vy = queue.popleft()
        vcol = normed[vy, vx]
        for dy, dx in NEIGHBORS_8:
            ux, uy = vx + dx, vy + dy
            if 0 <= ux < width and 0 <= uy < height and labels[uy, ux] == 0:
                pair = np.empty(6)
                pair[:3] = vcol
                pair[3:] = normed[uy, ux]
                evaluations += 1
                if decider(pair):
                    labels[uy, ux] = label
                    count += 1
                    queue.append((ux, uy))
    stats.evaluations += evaluations
    return count


def grow_segment(
    img: ImageRGB,
    lm: LabelMap,
    seed: PixelCoord,
    label: int,
    decider: PairDecider,
    stats: GrowStats,
) -> int:
    """Grow one segment from `seed`, writing `label` into the map.

    `label` must be the next fresh label (max_label + 1) and the seed must
    be unlabeled. Returns the number of pixels labeled.
    """
    if (lm.height, lm.width) != (img.height, img.width):
        raise ValueError(
            f"dimension mismatch: image {img.width}x{img.height}, "
            f"labels {lm.width}x{lm.height}"
        )
    if not img.in_bounds(seed.x, seed.y):
        raise ValueError(f"seed {tuple(seed)} out of bounds")
    if lm.labels[seed.y, seed.x] != 0:
        raise ValueError(f"seed {tuple(seed)} already labeled")
    if label != lm.max_label + 1:
        raise ValueError(f"label must be {lm.max_label + 1}, got {label}")
    count = _grow(_normalized(img), lm.labels, seed, label, decider, stats)
    lm.max_label = label
    stats.segments += 1
    stats.sizes[label] = count
    return count


def segment_auto(
    img: ImageRGB, decider: PairDecider, rng_seed: int
) -> tuple[LabelMap, GrowStats]:
    """Segment the whole image: grow from random unlabeled seeds until done.

    Seeds are drawn uniformly among the currently unlabeled pixels with a
    seeded generator, so the result is reproducible. Labels come out
    contiguous, 1..k.
    """
    width, height = img.width, img.height
    labels = np.zeros((height, width), dtype=np.int32)
    normed = _normalized(img)
    rng = seeded_rng(rng_seed)
    stats = GrowStats()
    # Candidate pool with lazy deletion: picking uniformly from `alive` and
    # discarding already-labeled hits is an exact uniform draw over the
    # unlabeled pixels, and every pixel is discarded at most once.
    alive = np.arange(width * height, dtype=np.int64)
    alive_n = alive.shape[0]
    flat = labels.reshape(-1)
    k = 0
    while alive_n > 0:
        i = int(rng.integers(alive_n))
        f = alive[i]
        if flat[f] != 0:
            alive_n -= 1
            alive[i] = alive[alive_n]
            continue
        k += 1
        count = _grow(
            normed, labels, PixelCoord(int(f % width), int(f // width)),
            k, decider, stats,
        )
        stats.sizes[k] = count
    stats.segments = k
    return LabelMap(labels, max_label=k), stats


def segment_from_point(
    img: ImageRGB, decider: PairDecider, at: PixelCoord
) -> tuple[set[PixelCoord], GrowStats]:
    """Grow the single segment containing `at` on a fresh label map."""
    if not img.in_bounds(at.x, at.y):
        raise ValueError(f"point {tuple(at)} out of bounds")
    labels = np.zeros((img.height, img.width), dtype=np.int32)
    stats = GrowStats()
    count = _grow(_normalized(img), labels, at, 1, decider, stats)
    stats.segments = 1
    stats.sizes[1] = count
    ys, xs = np.nonzero(labels)
    mask = {PixelCoord(int(x), int(y)) for x, y in zip(xs, ys)}
    return mask, stats


def segment_stats(lm: LabelMap) -> dict[int, int]:
    """Pixel count per label, including label 0 when present."""
    values, counts = np.unique(lm.labels, return_counts=True)
    return {int(v): int(c) for v, c in zip(values, counts)}
