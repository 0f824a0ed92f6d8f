/**
 * Interactive segmentation client.
 *
 * Upload a PPM, train the session's model, then click points on the image;
 * each click fetches the segment containing that point and draws it as a
 * translucent overlay. The page is a pure client of the session API.
 */
import {
  ApiError,
  DEFAULT_TRAIN_PARAMS,
  TrainParams,
  createSession,
  segmentAt,
  trainSession,
} from "./api.js";
import { ZOOM_LEVELS, clientToPixel, inBounds, nextZoom } from "./coords.js";
import { OVERLAY_ALPHA, hexToRgb, paletteColor } from "./palette.js";
import { parsePpm, rgbToRgba } from "./ppm.js";
import type { RawImage } from "./ppm.js";
import { SerialQueue, UiSession } from "./state.js";

const API_BASE = "";

function element<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

const fileInput = element<HTMLInputElement>("file");
const banner = element<HTMLDivElement>("banner");
const statusLine = element<HTMLSpanElement>("status");
const reportLine = element<HTMLSpanElement>("report");
const trainButton = element<HTMLButtonElement>("train");
const clearButton = element<HTMLButtonElement>("clear");
const zoomOut = element<HTMLButtonElement>("zoom-out");
const zoomIn = element<HTMLButtonElement>("zoom-in");
const zoomLabel = element<HTMLSpanElement>("zoom-label");
const stage = element<HTMLDivElement>("stage");
const imageCanvas = element<HTMLCanvasElement>("image");
const overlayCanvas = element<HTMLCanvasElement>("overlays");
const segmentList = element<HTMLUListElement>("segments");
const hint = element<HTMLParagraphElement>("hint");

let session: UiSession | null = null;
let zoom = 1;
const clicks = new SerialQueue();

function showError(message: string): void {
  banner.textContent = message;
  banner.hidden = false;
}

function clearError(): void {
  banner.hidden = true;
  banner.textContent = "";
}

function setStatus(): void {
  if (!session) {
    statusLine.textContent = "no image";
    hint.textContent = "Upload a binary PPM (P6) image to begin.";
  } else {
    statusLine.textContent = session.status;
    hint.textContent =
      session.status === "trained"
        ? "Click the image to extract the segment under the cursor."
        : "Train the model to enable segment clicks.";
  }
  trainButton.disabled = !session || !session.canTrain;
  clearButton.disabled = !session || session.overlays.length === 0;
  stage.classList.toggle("clickable", !!session && session.canSegment);
}

function applyZoom(): void {
  if (!session) return;
  const cssWidth = `${session.width * zoom}px`;
  const cssHeight = `${session.height * zoom}px`;
  for (const canvas of [imageCanvas, overlayCanvas]) {
    canvas.style.width = cssWidth;
    canvas.style.height = cssHeight;
  }
  zoomLabel.textContent = `${zoom}x`;
  zoomOut.disabled = zoom === ZOOM_LEVELS[0];
  zoomIn.disabled = zoom === ZOOM_LEVELS[ZOOM_LEVELS.length - 1];
}

function drawImage(img: RawImage): void {
  imageCanvas.width = overlayCanvas.width = img.width;
  imageCanvas.height = overlayCanvas.height = img.height;
  const ctx = imageCanvas.getContext("2d");
  if (!ctx) throw new Error("2d context unavailable");
  ctx.putImageData(new ImageData(rgbToRgba(img), img.width, img.height), 0, 0);
}

function redrawOverlays(): void {
  if (!session) return;
  const ctx = overlayCanvas.getContext("2d");
  if (!ctx) throw new Error("2d context unavailable");
  ctx.clearRect(0, 0, overlayCanvas.width, overlayCanvas.height);
  ctx.globalAlpha = OVERLAY_ALPHA;
  for (const overlay of session.overlays) {
    ctx.fillStyle = paletteColor(overlay.colorIndex);
    for (const [y, xStart, length] of overlay.runs) {
      ctx.fillRect(xStart, y, length, 1);
    }
  }
  ctx.globalAlpha = 1;
}

function renderSegmentList(): void {
  segmentList.textContent = "";
  if (!session) return;
  for (const overlay of session.overlays) {
    const item = document.createElement("li");
    const swatch = document.createElement("span");
    swatch.className = "swatch";
    const { r, g, b } = hexToRgb(paletteColor(overlay.colorIndex));
    swatch.style.backgroundColor = `rgba(${r}, ${g}, ${b}, ${OVERLAY_ALPHA})`;
    item.appendChild(swatch);
    item.appendChild(
      document.createTextNode(` (${overlay.x}, ${overlay.y}) - ${overlay.size} px`),
    );
    segmentList.appendChild(item);
  }
}

function readTrainParams(): TrainParams {
  const numberValue = (id: string, fallback: number): number => {
    const raw = element<HTMLInputElement>(id).value.trim();
    const parsed = Number(raw);
    return raw === "" || Number.isNaN(parsed) ? fallback : parsed;
  };
  return {
    noise_p: numberValue("noise-p", DEFAULT_TRAIN_PARAMS.noise_p),
    noise_runs: numberValue("noise-runs", DEFAULT_TRAIN_PARAMS.noise_runs),
    hidden: numberValue("hidden", DEFAULT_TRAIN_PARAMS.hidden),
    epochs: numberValue("epochs", DEFAULT_TRAIN_PARAMS.epochs),
    learning_rate: numberValue("lr", DEFAULT_TRAIN_PARAMS.learning_rate),
    rng_seed: numberValue("seed", DEFAULT_TRAIN_PARAMS.rng_seed),
  };
}

fileInput.addEventListener("change", async () => {
  const file = fileInput.files?.[0];
  if (!file) return;
  clearError();
  const bytes = new Uint8Array(await file.arrayBuffer());
  let parsed: RawImage;
  try {
    parsed = parsePpm(bytes);
  } catch (err) {
    showError(`not a usable PPM: ${(err as Error).message}`);
    return;
  }
  try {
    // Bytes go to the server exactly as read from disk.
    const info = await createSession(API_BASE, bytes);
    session = new UiSession(info.id, info.width, info.height);
  } catch (err) {
    showError(`upload failed: ${(err as Error).message}`);
    return;
  }
  drawImage(parsed);
  redrawOverlays();
  renderSegmentList();
  reportLine.textContent = "";
  applyZoom();
  setStatus();
});

trainButton.addEventListener("click", async () => {
  if (!session || !session.canTrain) return;
  clearError();
  session.beginTraining();
  setStatus();
  try {
    const outcome = await trainSession(API_BASE, session.id, readTrainParams());
    session.finishTraining(true);
    reportLine.textContent =
      `${outcome.pairs} pairs, mean loss ${outcome.final_mean_loss.toExponential(3)}, ` +
      `${outcome.seconds.toFixed(1)}s`;
  } catch (err) {
    session.finishTraining(false);
    showError(`training failed: ${(err as Error).message}`);
  }
  setStatus();
});

overlayCanvas.addEventListener("click", (event) => {
  if (!session || !session.canSegment) return;
  const rect = overlayCanvas.getBoundingClientRect();
  const { x, y } = clientToPixel(event.clientX - rect.left, event.clientY - rect.top, zoom);
  if (!inBounds(x, y, session.width, session.height)) return;
  const active = session;
  clicks
    .enqueue(async () => {
      const outcome = await segmentAt(API_BASE, active.id, x, y);
      if (session !== active) return; // replaced by a new upload meanwhile
      active.addOverlay(x, y, outcome.runs, outcome.size);
      redrawOverlays();
      renderSegmentList();
      setStatus();
    })
    .catch((err) => {
      if (err instanceof ApiError) showError(`segmentation failed: ${err.message}`);
      else showError(`segmentation failed: ${(err as Error).message}`);
    });
});

clearButton.addEventListener("click", () => {
  if (!session) return;
  session.clearOverlays();
  redrawOverlays();
  renderSegmentList();
  setStatus();
});

zoomIn.addEventListener("click", () => {
  zoom = nextZoom(zoom, 1);
  applyZoom();
});

zoomOut.addEventListener("click", () => {
  zoom = nextZoom(zoom, -1);
  applyZoom();
});

setStatus();
