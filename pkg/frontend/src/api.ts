/**
 * Thin client for the segmentation session API. All segmentation semantics
 * live server-side; this module only moves bytes and JSON.
 */
import type { Run } from "./rle.js";

export interface SessionInfo {
  id: string;
  width: number;
  height: number;
}

export interface TrainParams {
  noise_p: number;
  noise_runs: number;
  hidden: number;
  epochs: number;
  learning_rate: number;
  rng_seed: number;
}

export const DEFAULT_TRAIN_PARAMS: TrainParams = {
  noise_p: 10,
  noise_runs: 100,
  hidden: 50,
  epochs: 30,
  learning_rate: 0.1,
  rng_seed: 42,
};

export interface TrainOutcome {
  status: string;
  pairs: number;
  final_mean_loss: number;
  seconds: number;
}

export interface SegmentOutcome {
  size: number;
  runs: Run[];
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

async function throwOnError(resp: Response): Promise<void> {
  if (resp.ok) return;
  let detail = `HTTP ${resp.status}`;
  try {
    const body = await resp.json();
    if (body && typeof body.detail === "string") detail = body.detail;
  } catch {
    // non-JSON error body; keep the generic message
  }
  throw new ApiError(resp.status, detail);
}

export async function createSession(
  base: string,
  ppmBytes: Uint8Array<ArrayBuffer>,
): Promise<SessionInfo> {
  const resp = await fetch(`${base}/api/session`, {
    method: "POST",
    headers: { "Content-Type": "application/octet-stream" },
    body: ppmBytes,
  });
  await throwOnError(resp);
  return (await resp.json()) as SessionInfo;
}

export async function fetchImage(base: string, id: string): Promise<Uint8Array> {
  const resp = await fetch(`${base}/api/session/${id}/image`);
  await throwOnError(resp);
  return new Uint8Array(await resp.arrayBuffer());
}

export async function trainSession(
  base: string,
  id: string,
  params: TrainParams,
): Promise<TrainOutcome> {
  const resp = await fetch(`${base}/api/session/${id}/train`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(params),
  });
  await throwOnError(resp);
  return (await resp.json()) as TrainOutcome;
}

export async function segmentAt(
  base: string,
  id: string,
  x: number,
  y: number,
): Promise<SegmentOutcome> {
  const resp = await fetch(`${base}/api/session/${id}/segment`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify({ x, y }),
  });
  await throwOnError(resp);
  return (await resp.json()) as SegmentOutcome;
}
