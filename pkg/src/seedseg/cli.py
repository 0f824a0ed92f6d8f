"""Command-line interface.

Subcommands: train, auto, grow, corrupt, stats, serve. Exit codes: 0 on
success, 2 on usage errors (click's default), 1 on processing errors.
"""
from __future__ import annotations

import contextlib
import sys
import time
from pathlib import Path

import click

from .image import (
    FormatError,
    ImageRGB,
    PixelCoord,
    load_ppm,
    parse_labels,
    render_contours,
    save_ppm,
    serialize_labels,
    serialize_mask,
)
from .perceptron import Mlp, TrainConfig, parse_model, serialize_model
from .pipeline import PipelineConfig, run_training
from .segmenter import MlpDecider, segment_auto, segment_from_point, segment_stats
from .trainset import NoiseConfig, build_training_set, corrupt_impulse, dump_tsv


def _read_image(path: str) -> ImageRGB:
    return load_ppm(Path(path).read_bytes())


def _read_model(path: str) -> Mlp:
    return parse_model(Path(path).read_bytes())


def _parse_at(ctx, param, value: str) -> PixelCoord:
    parts = value.split(",")
    if len(parts) != 2:
        raise click.BadParameter("expected x,y")
    try:
        return PixelCoord(int(parts[0]), int(parts[1]))
    except ValueError:
        raise click.BadParameter(f"expected integers, got {value!r}") from None


@contextlib.contextmanager
def processing_errors():
    """Map domain errors to exit code 1 with a clean message."""
    try:
        yield
    except (FormatError, ValueError, OSError) as e:
        raise click.ClickException(str(e)) from e


@click.group()
def main():
    """Single-image neural segmentation.

    Train a pixel-pair decider on impulse-noise corruptions of one image,
    then segment that image by region growing.
    """


@main.command(name="train")
@click.option("-i", "--image", "image_path", required=True,
              type=click.Path(exists=True, dir_okay=False), help="Input PPM image.")
@click.option("-o", "--output", "model_path", required=True,
              type=click.Path(dir_okay=False), help="Output model file (.msf).")
@click.option("--noise-p", default=10.0, show_default=True,
              help="Percent of pixels damaged per noise run.")
@click.option("--noise-runs", default=100, show_default=True,
              help="How many times the noise generation is repeated.")
@click.option("--hidden", default=50, show_default=True, help="Hidden layer size.")
@click.option("--epochs", default=30, show_default=True, help="Training epochs.")
@click.option("--lr", default=0.1, show_default=True, help="SGD learning rate.")
@click.option("--seed", default=42, show_default=True,
              help="RNG seed for noise, weight init, and shuffling.")
@click.option("--dump-samples", "dump_path", default=None,
              type=click.Path(dir_okay=False), help="Also write the sample set as TSV.")
def train_cmd(image_path, model_path, noise_p, noise_runs, hidden, epochs, lr, seed,
              dump_path):
    """Build the training set from IMAGE and train a model."""
    with processing_errors():
        img = _read_image(image_path)
        cfg = PipelineConfig(
            noise=NoiseConfig(p=noise_p, runs=noise_runs, rng_seed=seed),
            train=TrainConfig(epochs=epochs, learning_rate=lr, shuffle_seed=seed),
            hidden_size=hidden,
            init_seed=seed,
        )
        t0 = time.perf_counter()
        model, report = run_training(img, cfg)
        seconds = time.perf_counter() - t0
        Path(model_path).write_bytes(serialize_model(model))
        if dump_path is not None:
            Path(dump_path).write_bytes(dump_tsv(build_training_set(img, cfg.noise)))
    click.echo(
        f"trained on {report.samples} samples in {seconds:.1f}s, "
        f"final mean loss {report.final_mean_loss:.6f} -> {model_path}"
    )


@main.command(name="auto")
@click.option("-i", "--image", "image_path", required=True,
              type=click.Path(exists=True, dir_okay=False), help="Input PPM image.")
@click.option("-m", "--model", "model_path", required=True,
              type=click.Path(exists=True, dir_okay=False), help="Trained model file.")
@click.option("-o", "--output", "labels_path", required=True,
              type=click.Path(dir_okay=False), help="Output label map (.smap).")
@click.option("--contours", "contours_path", default=None,
              type=click.Path(dir_okay=False), help="Also write a contour render (PPM).")
@click.option("--seed", default=0, show_default=True, help="Seed-pixel selection RNG seed.")
def auto_cmd(image_path, model_path, labels_path, contours_path, seed):
    """Segment IMAGE fully automatically."""
    with processing_errors():
        img = _read_image(image_path)
        model = _read_model(model_path)
        lm, stats = segment_auto(img, MlpDecider(model), seed)
        Path(labels_path).write_bytes(serialize_labels(lm))
        if contours_path is not None:
            Path(contours_path).write_bytes(save_ppm(render_contours(img, lm)))
    click.echo(f"{stats.segments} segments, {stats.evaluations} pair evaluations -> {labels_path}")


@main.command(name="grow")
@click.option("-i", "--image", "image_path", required=True,
              type=click.Path(exists=True, dir_okay=False), help="Input PPM image.")
@click.option("-m", "--model", "model_path", required=True,
              type=click.Path(exists=True, dir_okay=False), help="Trained model file.")
@click.option("--at", "at", required=True, callback=_parse_at, metavar="X,Y",
              help="Seed point, 0-based.")
@click.option("-o", "--output", "mask_path", required=True,
              type=click.Path(dir_okay=False), help="Output mask (PBM P1).")
def grow_cmd(image_path, model_path, at, mask_path):
    """Extract the single segment containing a point."""
    with processing_errors():
        img = _read_image(image_path)
        model = _read_model(model_path)
        mask, stats = segment_from_point(img, MlpDecider(model), at)
        Path(mask_path).write_bytes(serialize_mask(img.width, img.height, mask))
    click.echo(f"segment of {len(mask)} pixels from ({at.x},{at.y}) -> {mask_path}")


@main.command(name="corrupt")
@click.option("-i", "--image", "image_path", required=True,
              type=click.Path(exists=True, dir_okay=False), help="Input PPM image.")
@click.option("-o", "--output", "out_path", required=True,
              type=click.Path(dir_okay=False), help="Output noisy PPM.")
@click.option("--noise-p", default=10.0, show_default=True,
              help="Percent of pixels to damage.")
@click.option("--seed", default=42, show_default=True, help="Noise RNG seed.")
@click.option("--run-index", default=0, show_default=True,
              help="Which run of the noise schedule to reproduce.")
def corrupt_cmd(image_path, out_path, noise_p, seed, run_index):
    """Write an impulse-noise corrupted copy of IMAGE."""
    with processing_errors():
        img = _read_image(image_path)
        result = corrupt_impulse(img, NoiseConfig(p=noise_p, runs=1, rng_seed=seed), run_index)
        Path(out_path).write_bytes(save_ppm(result.corrupted))
    click.echo(f"damaged {len(result.damaged)} pixels -> {out_path}")


@main.command(name="stats")
@click.option("-i", "--input", "labels_path", required=True,
              type=click.Path(exists=True, dir_okay=False), help="Label map (.smap).")
def stats_cmd(labels_path):
    """Print the segment-size histogram of a label map."""
    with processing_errors():
        lm = parse_labels(Path(labels_path).read_bytes())
        sizes = segment_stats(lm)
    for label in sorted(sizes):
        click.echo(f"{label}\t{sizes[label]}")
    click.echo(f"# {lm.max_label} segments, {lm.width}x{lm.height} pixels", err=False)


@main.command(name="serve")
@click.option("-i", "--image", "image_path", default=None,
              type=click.Path(exists=True, dir_okay=False),
              help="Optional image to preload as a session.")
@click.option("--port", default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
def serve_cmd(image_path, port, host):
    """Start the interactive HTTP service (and web UI)."""
    from .server import serve_http

    with processing_errors():
        img = _read_image(image_path) if image_path else None
        serve_http(img, port, host=host)


if __name__ == "__main__":
    sys.exit(main())
