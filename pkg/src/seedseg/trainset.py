"""Impulse-noise corruption and training-set synthesis from a single image.

The training signal comes from artificially damaged pixels: a damaged pixel
gets every channel replaced by a value from the opposite half of the palette,
so it cannot plausibly belong to the same region as its neighbors. Each
(damaged pixel, neighbor) pair contributes two Reject samples built from the
corrupted image and, as the mirrored counterpart, two Join samples built from
the original values at the same locations.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .image import NEIGHBORS_8, ImageRGB, PixelCoord
from .perceptron import Decision, Sample
from .rng import seeded_rng

# Salt separating the final shuffle stream from the per-run corruption streams.
_SHUFFLE_SALT = 0x5EED5E65

HALF_PALETTE = 128


@dataclass(frozen=True)
class NoiseConfig:
    """Impulse-noise parameters: percentage, repetition count, seed."""

    p: float
    runs: int = 100
    rng_seed: int = 0

    def __post_init__(self):
        if not (self.p > 0.0 and math.isfinite(self.p)):
            raise ValueError(f"noise percentage must be > 0, got {self.p}")
        if self.p > 10.0:
            warnings.warn(
                f"noise percentage {self.p} exceeds the recommended maximum of 10",
                stacklevel=3,
            )
        if self.runs < 1:
            raise ValueError(f"runs must be >= 1, got {self.runs}")


@dataclass(eq=False)
class CorruptionResult:
    corrupted: ImageRGB
    damaged: list[PixelCoord]


@dataclass(eq=False)
class SampleSet:
    """Training samples in bulk: inputs (N, 6) floats in [0, 1], targets (N,) uint8.

    Target 1 means Join, 0 means Reject. Indexing yields `Sample` objects;
    the arrays feed the trainer directly. The builder stores float32: full
    noise schedules reach tens of millions of rows, where the halved
    footprint matters and channel values only need 1/255 resolution.
    """

    inputs: np.ndarray
    targets: np.ndarray

    def __post_init__(self):
        if self.inputs.ndim != 2 or self.inputs.shape[1] != 6:
            raise ValueError(f"inputs must be (N, 6), got {self.inputs.shape}")
        if self.targets.shape != (self.inputs.shape[0],):
            raise ValueError("targets length must match inputs")

    def __len__(self) -> int:
        return self.inputs.shape[0]

    def __getitem__(self, i: int) -> Sample:
        return Sample(
            input=tuple(float(v) for v in self.inputs[i]),
            target=Decision.JOIN if self.targets[i] else Decision.REJECT,
        )


def damage_count(p: float, width: int, height: int) -> int:
    """Number of pixels a single noise run damages: floor(p * W * H / 100)."""
    return int(math.floor(p * width * height / 100.0))


def corrupt_impulse(img: ImageRGB, cfg: NoiseConfig, run_index: int) -> CorruptionResult:
    """Damage floor(p*W*H/100) distinct pixels, chosen uniformly.

    Every channel of a damaged pixel is redrawn from the palette half
    opposite its original value: values above 128 map into [0, 127], values
    at or below 128 map into [129, 255]. `run_index` salts the seeded
    generator, so each run of a repeated-noise schedule differs while the
    whole schedule stays reproducible.
    """
    if run_index < 0:
        raise ValueError(f"run_index must be >= 0, got {run_index}")
    w, h = img.width, img.height
    count = damage_count(cfg.p, w, h)
    if count == 0:
        raise ValueError(
            f"p={cfg.p} damages zero pixels of a {w}x{h} image; "
            "increase p or use a larger image"
        )
    if count > w * h:
        raise ValueError(f"cannot damage {count} of {w * h} pixels")
    rng = seeded_rng(cfg.rng_seed, run_index)
    flat = rng.permutation(w * h)[:count]
    old = img.pixels.reshape(-1, 3)[flat]
    u = rng.random((count, 3))
    high = old > HALF_PALETTE
    replacement = np.where(
        high,
        np.floor(u * HALF_PALETTE),
        HALF_PALETTE + 1 + np.floor(u * (HALF_PALETTE - 1)),
    ).astype(np.uint8)
    corrupted = img.pixels.copy()
    corrupted.reshape(-1, 3)[flat] = replacement
    damaged = [PixelCoord(int(f % w), int(f // w)) for f in flat]
    return CorruptionResult(corrupted=ImageRGB(corrupted), damaged=damaged)


def build_training_set(img: ImageRGB, cfg: NoiseConfig) -> SampleSet:
    """Run the corruption schedule and expand damaged pixels into samples.

    Per run and per (damaged pixel d, in-bounds 8-neighbor u), four samples
    are emitted: Reject (u, d) and (d, u) from the corrupted image, Join
    (u, d) and (d, u) from the original. Channels are normalized to [0, 1].
    The concatenated set is shuffled once with the seeded generator.
    """
    w, h = img.width, img.height
    if w * h < 2:
        raise ValueError("training needs an image with at least 2 pixels")
    dys = np.array([dy for dy, _ in NEIGHBORS_8], dtype=np.int64)
    dxs = np.array([dx for _, dx in NEIGHBORS_8], dtype=np.int64)
    orig = img.pixels.reshape(-1, 3)

    # Pass 1: corruption and pair geometry per run. Kept as indices so the
    # final sample array can be allocated once at its exact size.
    per_run: list[tuple[np.ndarray, np.ndarray, np.ndarray]] = []
    total_pairs = 0
    for run in range(cfg.runs):
        result = corrupt_impulse(img, cfg, run)
        corr = result.corrupted.pixels.reshape(-1, 3)
        xs = np.array([c.x for c in result.damaged], dtype=np.int64)
        ys = np.array([c.y for c in result.damaged], dtype=np.int64)
        nx = xs[:, None] + dxs[None, :]
        ny = ys[:, None] + dys[None, :]
        valid = (nx >= 0) & (nx < w) & (ny >= 0) & (ny < h)
        d_flat = np.broadcast_to((ys * w + xs)[:, None], valid.shape)[valid]
        u_flat = (ny * w + nx)[valid]
        per_run.append((d_flat, u_flat, corr))
        total_pairs += d_flat.shape[0]

    # Pass 2: write each run's block straight into the preallocated arrays.
    inputs = np.empty((total_pairs * 4, 6), dtype=np.float32)
    targets = np.empty(total_pairs * 4, dtype=np.uint8)
    # Reject, Reject, Join, Join for the four per-pair orderings.
    pattern = np.array([0, 0, 1, 1], dtype=np.uint8)
    offset = 0
    for d_flat, u_flat, corr in per_run:
        k = d_flat.shape[0]
        block = inputs[offset : offset + k * 4].reshape(k, 4, 6)
        block[:, 0, :3] = corr[u_flat]
        block[:, 0, 3:] = corr[d_flat]
        block[:, 1, :3] = corr[d_flat]
        block[:, 1, 3:] = corr[u_flat]
        block[:, 2, :3] = orig[u_flat]
        block[:, 2, 3:] = orig[d_flat]
        block[:, 3, :3] = orig[d_flat]
        block[:, 3, 3:] = orig[u_flat]
        block /= np.float32(255.0)
        targets[offset : offset + k * 4] = np.tile(pattern, k)
        offset += k * 4
    del per_run

    perm = seeded_rng(cfg.rng_seed, _SHUFFLE_SALT).permutation(inputs.shape[0])
    return SampleSet(inputs=inputs[perm], targets=targets[perm])


def dump_tsv(samples: SampleSet) -> bytes:
    """Debug dump: one line per sample, six inputs then 'J' or 'R'."""
    lines = []
    for row, target in zip(samples.inputs, samples.targets):
        vals = "\t".join(f"{v:.9g}" for v in row)
        lines.append(f"{vals}\t{'J' if target else 'R'}")
    return ("\n".join(lines) + "\n").encode("ascii") if lines else b""
