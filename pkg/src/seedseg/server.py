"""HTTP session service for the interactive mode.

Sessions live in memory only. Each session holds one uploaded image and,
after /train, a model; operations within a session are serialized by a
per-session lock while distinct sessions proceed concurrently. Masks travel
as run-length triples [y, x_start, length] over the wire.
"""
from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import PlainTextResponse, Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .image import (
    FormatError,
    ImageRGB,
    LabelMap,
    PixelCoord,
    load_ppm,
    render_contours,
    save_ppm,
)
from .perceptron import Mlp, TrainConfig
from .pipeline import PipelineConfig, run_training
from .segmenter import MlpDecider, segment_auto, segment_from_point
from .trainset import NoiseConfig

MAX_UPLOAD_BYTES = 16 * 1024 * 1024

PPM_MEDIA_TYPE = "image/x-portable-pixmap"


@dataclass
class Session:
    id: str
    image: ImageRGB
    created_at: float
    model: Optional[Mlp] = None
    labels: Optional[LabelMap] = None
    lock: threading.Lock = field(default_factory=threading.Lock)


class TrainRequest(BaseModel):
    noise_p: float = 10.0
    noise_runs: int = 100
    hidden: int = 50
    epochs: int = 30
    learning_rate: float = 0.1
    rng_seed: int = 42


class SegmentRequest(BaseModel):
    x: int
    y: int


def mask_to_runs(mask: Iterable[PixelCoord]) -> list[list[int]]:
    """Row-wise run-length encoding: [y, x_start, length] triples."""
    by_row: dict[int, list[int]] = {}
    for x, y in mask:
        by_row.setdefault(y, []).append(x)
    runs = []
    for y in sorted(by_row):
        xs = sorted(by_row[y])
        start = xs[0]
        length = 1
        for x in xs[1:]:
            if x == start + length:
                length += 1
            else:
                runs.append([y, start, length])
                start, length = x, 1
        runs.append([y, start, length])
    return runs


def runs_to_mask(runs: Iterable[Iterable[int]]) -> set[PixelCoord]:
    """Inverse of :func:`mask_to_runs`."""
    mask = set()
    for y, x_start, length in runs:
        for x in range(x_start, x_start + length):
            mask.add(PixelCoord(x, y))
    return mask


def create_app(initial_image: Optional[ImageRGB] = None) -> FastAPI:
    app = FastAPI(title="seedseg", docs_url=None, redoc_url=None)
    sessions: dict[str, Session] = {}

    def new_session(img: ImageRGB) -> Session:
        sess = Session(id=uuid.uuid4().hex, image=img, created_at=time.time())
        sessions[sess.id] = sess
        return sess

    def get_session(sid: str) -> Session:
        sess = sessions.get(sid)
        if sess is None:
            raise HTTPException(status_code=404, detail="unknown session id")
        return sess

    if initial_image is not None:
        preloaded = new_session(initial_image)
        print(f"preloaded session {preloaded.id} "
              f"({preloaded.image.width}x{preloaded.image.height})")

    @app.post("/api/session")
    async def create_session(request: Request):
        body = await request.body()
        if len(body) > MAX_UPLOAD_BYTES:
            raise HTTPException(status_code=413, detail="upload exceeds 16 MiB")
        try:
            img = load_ppm(body)
        except FormatError as e:
            raise HTTPException(status_code=400, detail=str(e)) from None
        sess = new_session(img)
        return {"id": sess.id, "width": img.width, "height": img.height}

    @app.get("/api/session/{sid}/image")
    def get_image(sid: str):
        sess = get_session(sid)
        return Response(content=save_ppm(sess.image), media_type=PPM_MEDIA_TYPE)

    @app.post("/api/session/{sid}/train")
    def train_session(sid: str, req: TrainRequest):
        sess = get_session(sid)
        with sess.lock:
            t0 = time.perf_counter()
            try:
                cfg = PipelineConfig(
                    noise=NoiseConfig(
                        p=req.noise_p, runs=req.noise_runs, rng_seed=req.rng_seed
                    ),
                    train=TrainConfig(
                        epochs=req.epochs, learning_rate=req.learning_rate,
                        shuffle_seed=req.rng_seed,
                    ),
                    hidden_size=req.hidden,
                    init_seed=req.rng_seed,
                )
                model, report = run_training(sess.image, cfg)
            except ValueError as e:
                raise HTTPException(status_code=400, detail=str(e)) from None
            sess.model = model
            return {
                "status": "trained",
                "pairs": report.samples,
                "final_mean_loss": report.final_mean_loss,
                "seconds": time.perf_counter() - t0,
            }

    @app.post("/api/session/{sid}/segment")
    def segment_session(sid: str, req: SegmentRequest):
        sess = get_session(sid)
        with sess.lock:
            if sess.model is None:
                raise HTTPException(status_code=409, detail="model not trained")
            try:
                mask, _ = segment_from_point(
                    sess.image, MlpDecider(sess.model), PixelCoord(req.x, req.y)
                )
            except ValueError as e:
                raise HTTPException(status_code=400, detail=str(e)) from None
            return {"size": len(mask), "runs": mask_to_runs(mask)}

    @app.get("/api/session/{sid}/auto")
    def auto_session(sid: str, rng_seed: int = 0):
        sess = get_session(sid)
        with sess.lock:
            if sess.model is None:
                raise HTTPException(status_code=409, detail="model not trained")
            lm, stats = segment_auto(sess.image, MlpDecider(sess.model), rng_seed)
            sess.labels = lm
            return {
                "segments": stats.segments,
                "sizes": {str(label): count for label, count in stats.sizes.items()},
            }

    @app.get("/api/session/{sid}/contours.ppm")
    def contours_session(sid: str):
        sess = get_session(sid)
        with sess.lock:
            if sess.labels is None:
                raise HTTPException(
                    status_code=409, detail="no automatic segmentation run yet"
                )
            rendered = render_contours(sess.image, sess.labels)
            return Response(content=save_ppm(rendered), media_type=PPM_MEDIA_TYPE)

    static_dir = Path(__file__).parent / "webui_static"
    if static_dir.is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    else:
        @app.get("/")
        def index():
            return PlainTextResponse(
                "seedseg API is running; the web UI bundle is not installed.\n"
            )

    return app


def serve_http(image: Optional[ImageRGB], port: int, host: str = "127.0.0.1") -> None:
    """Run the service until interrupted."""
    import uvicorn

    uvicorn.run(create_app(image), host=host, port=port, log_level="info")
