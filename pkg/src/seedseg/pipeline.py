"""End-to-end training pipeline shared by the CLI and the HTTP service."""
from __future__ import annotations

from dataclasses import dataclass

from .image import ImageRGB
from .perceptron import Mlp, TrainConfig, TrainReport, init_mlp, train
from .trainset import NoiseConfig, build_training_set


@dataclass(frozen=True)
class PipelineConfig:
    """Everything a full training run needs."""

    noise: NoiseConfig
    train: TrainConfig
    hidden_size: int = 50
    init_seed: int = 42
    auto_seed: int = 0


def run_training(img: ImageRGB, cfg: PipelineConfig) -> tuple[Mlp, TrainReport]:
    """Build the noise-derived training set and train a fresh model on it."""
    samples = build_training_set(img, cfg.noise)
    model = init_mlp(cfg.hidden_size, cfg.init_seed)
    return train(model, samples, cfg.train)
