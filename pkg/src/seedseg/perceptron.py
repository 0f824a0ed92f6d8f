"""The 6-H-2 join/reject perceptron.

Both layers use the logistic sigmoid. Output neuron 0 votes "join", neuron 1
votes "reject"; training targets are the one-hot vectors (1, 0) and (0, 1)
and the per-sample loss is half the summed squared output error. Training is
plain per-sample gradient descent, reshuffling the sample order each epoch
with a seeded generator, so a fixed (model, samples, config) triple always
produces the same trained model.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Sequence, Union

import numpy as np

from .image import FormatError
from .rng import seeded_rng

MODEL_MAGIC = "SEEDSEG-MLP 1"
INPUT_SIZE = 6
OUTPUT_SIZE = 2
DEFAULT_NORM = 255.0


class Decision(IntEnum):
    """Pair decision: join the candidate pixel to the segment, or not."""

    REJECT = 0
    JOIN = 1


@dataclass(frozen=True)
class Sample:
    """One training example: a normalized pixel-pair vector and its decision."""

    input: tuple[float, ...]
    target: Decision

    def __post_init__(self):
        if len(self.input) != INPUT_SIZE:
            raise ValueError(f"sample input needs {INPUT_SIZE} components")
        for v in self.input:
            if not (0.0 <= v <= 1.0):
                raise ValueError(f"sample component {v} outside [0, 1]")


@dataclass(frozen=True)
class TrainConfig:
    epochs: int
    learning_rate: float
    shuffle_seed: int = 0

    def __post_init__(self):
        if self.epochs < 1:
            raise ValueError(f"epochs must be >= 1, got {self.epochs}")
        if not (self.learning_rate > 0.0 and np.isfinite(self.learning_rate)):
            raise ValueError(f"learning_rate must be positive, got {self.learning_rate}")


@dataclass(frozen=True)
class TrainReport:
    epochs_run: int
    final_mean_loss: float
    samples: int


@dataclass(eq=False)
class Mlp:
    """Weights of the three-layer perceptron, all float64.

    Shapes: w1 (H, 6), b1 (H,), w2 (2, H), b2 (2,). `norm` records the
    channel divisor the model expects its inputs to be normalized by.
    """

    w1: np.ndarray
    b1: np.ndarray
    w2: np.ndarray
    b2: np.ndarray
    norm: float = DEFAULT_NORM

    def __post_init__(self):
        self.w1 = np.ascontiguousarray(self.w1, dtype=np.float64)
        self.b1 = np.ascontiguousarray(self.b1, dtype=np.float64)
        self.w2 = np.ascontiguousarray(self.w2, dtype=np.float64)
        self.b2 = np.ascontiguousarray(self.b2, dtype=np.float64)
        hidden = self.w1.shape[0] if self.w1.ndim == 2 else 0
        if hidden < 1 or self.w1.shape != (hidden, INPUT_SIZE):
            raise ValueError(f"w1 must be (H, {INPUT_SIZE}) with H >= 1, got {self.w1.shape}")
        if self.b1.shape != (hidden,):
            raise ValueError(f"b1 must be ({hidden},), got {self.b1.shape}")
        if self.w2.shape != (OUTPUT_SIZE, hidden):
            raise ValueError(f"w2 must be ({OUTPUT_SIZE}, {hidden}), got {self.w2.shape}")
        if self.b2.shape != (OUTPUT_SIZE,):
            raise ValueError(f"b2 must be ({OUTPUT_SIZE},), got {self.b2.shape}")
        for name, arr in (("w1", self.w1), ("b1", self.b1), ("w2", self.w2), ("b2", self.b2)):
            if not np.all(np.isfinite(arr)):
                raise ValueError(f"{name} contains non-finite values")
        if not (np.isfinite(self.norm) and self.norm > 0):
            raise ValueError(f"norm must be positive and finite, got {self.norm}")

    @property
    def hidden_size(self) -> int:
        return self.w1.shape[0]

    def copy(self) -> "Mlp":
        return Mlp(self.w1.copy(), self.b1.copy(), self.w2.copy(), self.b2.copy(), self.norm)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mlp):
            return NotImplemented
        return (
            self.norm == other.norm
            and self.w1.shape == other.w1.shape
            and np.array_equal(self.w1, other.w1)
            and np.array_equal(self.b1, other.b1)
            and np.array_equal(self.w2, other.w2)
            and np.array_equal(self.b2, other.b2)
        )


def init_mlp(hidden_size: int, rng_seed: int) -> Mlp:
    """Fresh model with weights and biases uniform in [-0.5, 0.5], seeded."""
    if hidden_size < 1:
        raise ValueError(f"hidden_size must be >= 1, got {hidden_size}")
    rng = seeded_rng(rng_seed)
    w1 = rng.uniform(-0.5, 0.5, (hidden_size, INPUT_SIZE))
    b1 = rng.uniform(-0.5, 0.5, hidden_size)
    w2 = rng.uniform(-0.5, 0.5, (OUTPUT_SIZE, hidden_size))
    b2 = rng.uniform(-0.5, 0.5, OUTPUT_SIZE)
    return Mlp(w1, b1, w2, b2)


def _sigmoid(z: np.ndarray) -> np.ndarray:
    # Split form avoids overflow warnings for large |z|.
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def _check_input(input: Sequence[float]) -> np.ndarray:
    x = np.asarray(input, dtype=np.float64)
    if x.shape != (INPUT_SIZE,):
        raise ValueError(f"input must have {INPUT_SIZE} components, got shape {x.shape}")
    if not np.all(np.isfinite(x)):
        raise ValueError("input contains non-finite values")
    return x


def forward(mlp: Mlp, input: Sequence[float]) -> tuple[float, float]:
    """Run the network; returns (out_join, out_reject), each in (0, 1)."""
    x = _check_input(input)
    hidden = _sigmoid(mlp.w1 @ x + mlp.b1)
    out = _sigmoid(mlp.w2 @ hidden + mlp.b2)
    return float(out[0]), float(out[1])


def decide(mlp: Mlp, input: Sequence[float]) -> Decision:
    """Join iff the join output strictly exceeds the reject output."""
    out_join, out_reject = forward(mlp, input)
    return Decision.JOIN if out_join > out_reject else Decision.REJECT


def _target_vector(target: Decision) -> np.ndarray:
    return np.array([1.0, 0.0]) if target == Decision.JOIN else np.array([0.0, 1.0])


def sample_loss(mlp: Mlp, sample: Sample) -> float:
    """Per-sample loss: half the summed squared output error."""
    x = _check_input(sample.input)
    hidden = _sigmoid(mlp.w1 @ x + mlp.b1)
    out = _sigmoid(mlp.w2 @ hidden + mlp.b2)
    err = out - _target_vector(sample.target)
    return float(0.5 * np.dot(err, err))


def sample_gradients(
    mlp: Mlp, sample: Sample
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Analytic gradients of :func:`sample_loss` w.r.t. (w1, b1, w2, b2)."""
    x = _check_input(sample.input)
    hidden = _sigmoid(mlp.w1 @ x + mlp.b1)
    out = _sigmoid(mlp.w2 @ hidden + mlp.b2)
    err = out - _target_vector(sample.target)
    d_out = err * out * (1.0 - out)
    gw2 = np.outer(d_out, hidden)
    gb2 = d_out
    d_hid = (mlp.w2.T @ d_out) * hidden * (1.0 - hidden)
    gw1 = np.outer(d_hid, x)
    gb1 = d_hid
    return gw1, gb1, gw2, gb2


def _sample_arrays(
    samples: Union["SampleArrays", Iterable[Sample]],
) -> tuple[np.ndarray, np.ndarray]:
    """Normalize any accepted sample collection to (inputs, targets) arrays."""
    inputs = getattr(samples, "inputs", None)
    targets = getattr(samples, "targets", None)
    if inputs is not None and targets is not None:
        # float32 sample stores pass through untouched: full-image noise
        # schedules are large enough that a float64 copy costs real memory.
        if inputs.dtype not in (np.float32, np.float64):
            inputs = inputs.astype(np.float64)
        inputs = np.ascontiguousarray(inputs)
        targets = np.ascontiguousarray(targets, dtype=np.uint8)
    else:
        listed = list(samples)
        inputs = np.empty((len(listed), INPUT_SIZE), dtype=np.float64)
        targets = np.empty(len(listed), dtype=np.uint8)
        for i, s in enumerate(listed):
            inputs[i] = s.input
            targets[i] = 1 if s.target == Decision.JOIN else 0
    if inputs.ndim != 2 or inputs.shape[1] != INPUT_SIZE:
        raise ValueError(f"sample inputs must be (N, {INPUT_SIZE}), got {inputs.shape}")
    if targets.shape != (inputs.shape[0],):
        raise ValueError("sample target count does not match input count")
    if inputs.size and (inputs.min() < 0.0 or inputs.max() > 1.0):
        raise ValueError("sample inputs must lie in [0, 1]")
    return inputs, targets


class SampleArrays:
    """Structural protocol for bulk sample storage: .inputs (N, 6), .targets (N,)."""

    inputs: np.ndarray
    targets: np.ndarray


def train(
    mlp: Mlp,
    samples: Union[SampleArrays, Iterable[Sample]],
    cfg: TrainConfig,
) -> tuple[Mlp, TrainReport]:
    """Per-sample SGD over `cfg.epochs` passes; returns a new trained model.

    Sample order is reshuffled every epoch by a generator seeded with
    cfg.shuffle_seed, so results are fully deterministic. The reported loss
    is the mean pre-update per-sample loss over the final epoch. An empty
    sample collection returns the model unchanged.
    """
    inputs, targets = _sample_arrays(samples)
    n = inputs.shape[0]
    if n == 0:
        return mlp.copy(), TrainReport(epochs_run=0, final_mean_loss=0.0, samples=0)

    from . import _sgd

    trained = mlp.copy()
    rng = seeded_rng(cfg.shuffle_seed)
    mean_loss = 0.0
    for _ in range(cfg.epochs):
        order = rng.permutation(n)
        mean_loss = _sgd.sgd_epoch(
            trained.w1, trained.b1, trained.w2, trained.b2,
            inputs.take(order, axis=0), targets.take(order), cfg.learning_rate,
        )
    return trained, TrainReport(
        epochs_run=cfg.epochs, final_mean_loss=float(mean_loss), samples=n
    )


def serialize_model(mlp: Mlp) -> bytes:
    """Text model file; numbers carry 17 significant digits (bit-exact parse).

    Layout: magic line, then "dims 6 <H> 2 norm <norm>", then H w1 rows,
    one b1 row, two w2 rows, one b2 row.
    """
    def fmt(row: np.ndarray) -> str:
        return " ".join(f"{v:.17g}" for v in row)

    lines = [MODEL_MAGIC, f"dims {INPUT_SIZE} {mlp.hidden_size} {OUTPUT_SIZE} norm {mlp.norm:.17g}"]
    lines.extend(fmt(row) for row in mlp.w1)
    lines.append(fmt(mlp.b1))
    lines.extend(fmt(row) for row in mlp.w2)
    lines.append(fmt(mlp.b2))
    return ("\n".join(lines) + "\n").encode("ascii")


def parse_model(data: bytes) -> Mlp:
    """Inverse of :func:`serialize_model`, with full validation."""
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError:
        raise FormatError("model file is not ASCII text") from None
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].strip() != MODEL_MAGIC:
        got = lines[0].strip() if lines else ""
        raise FormatError(f"bad model magic/version: {got!r}, expected {MODEL_MAGIC!r}")
    if len(lines) < 2:
        raise FormatError("missing dims line")
    dims = lines[1].split()
    if len(dims) != 6 or dims[0] != "dims" or dims[4] != "norm":
        raise FormatError(f"malformed dims line: {lines[1]!r}")
    try:
        n_in, hidden, n_out = int(dims[1]), int(dims[2]), int(dims[3])
        norm = float(dims[5])
    except ValueError:
        raise FormatError(f"non-numeric dims line: {lines[1]!r}") from None
    if n_in != INPUT_SIZE or n_out != OUTPUT_SIZE:
        raise FormatError(f"unsupported layer sizes {n_in}-{hidden}-{n_out}")
    if hidden < 1:
        raise FormatError(f"hidden size must be >= 1, got {hidden}")
    expected = hidden + 1 + OUTPUT_SIZE + 1
    body = lines[2:]
    if len(body) != expected:
        raise FormatError(f"expected {expected} weight lines, got {len(body)}")

    def parse_row(line: str, count: int, what: str) -> np.ndarray:
        vals = line.split()
        if len(vals) != count:
            raise FormatError(f"{what} line has {len(vals)} entries, expected {count}")
        try:
            return np.array([float(v) for v in vals], dtype=np.float64)
        except ValueError:
            raise FormatError(f"non-numeric token in {what} line") from None

    w1 = np.stack([parse_row(body[i], INPUT_SIZE, "w1") for i in range(hidden)])
    b1 = parse_row(body[hidden], hidden, "b1")
    w2 = np.stack(
        [parse_row(body[hidden + 1 + k], hidden, "w2") for k in range(OUTPUT_SIZE)]
    )
    b2 = parse_row(body[hidden + 1 + OUTPUT_SIZE], OUTPUT_SIZE, "b2")
    try:
        return Mlp(w1, b1, w2, b2, norm=norm)
    except ValueError as e:
        raise FormatError(str(e)) from None
