"""seedseg: single-image neural segmentation.

Synthesizes a training set from one image via impulse-noise corruption,
trains a small join/reject perceptron on pixel pairs, and segments the image
by region growing, either fully automatically or interactively from a chosen
seed point.
"""
from .image import (
    CONTOUR_COLOR,
    NEIGHBORS_8,
    PALETTE_DEPTH,
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
from .perceptron import (
    Decision,
    Mlp,
    Sample,
    TrainConfig,
    TrainReport,
    decide,
    forward,
    init_mlp,
    parse_model,
    sample_gradients,
    sample_loss,
    serialize_model,
    train,
)
from .pipeline import PipelineConfig, run_training
from .segmenter import (
    GrowStats,
    MlpDecider,
    PairDecider,
    grow_segment,
    segment_auto,
    segment_from_point,
    segment_stats,
)
from .trainset import (
    CorruptionResult,
    NoiseConfig,
    SampleSet,
    build_training_set,
    corrupt_impulse,
    damage_count,
    dump_tsv,
)

__version__ = "0.1.0"

__all__ = [
    "CONTOUR_COLOR",
    "NEIGHBORS_8",
    "PALETTE_DEPTH",
    "FormatError",
    "ImageRGB",
    "LabelMap",
    "PixelCoord",
    "Rgb",
    "load_ppm",
    "overlay_mask",
    "parse_labels",
    "parse_mask",
    "render_contours",
    "save_ppm",
    "serialize_labels",
    "serialize_mask",
    "Decision",
    "Mlp",
    "Sample",
    "TrainConfig",
    "TrainReport",
    "decide",
    "forward",
    "init_mlp",
    "parse_model",
    "sample_gradients",
    "sample_loss",
    "serialize_model",
    "train",
    "PipelineConfig",
    "run_training",
    "GrowStats",
    "MlpDecider",
    "PairDecider",
    "grow_segment",
    "segment_auto",
    "segment_from_point",
    "segment_stats",
    "CorruptionResult",
    "NoiseConfig",
    "SampleSet",
    "build_training_set",
    "corrupt_impulse",
    "damage_count",
    "dump_tsv",
]
