/**
 * UI session state, kept free of DOM so the guards are unit-testable.
 *
 * Rules enforced here: segment clicks only while trained, no double
 * training submits, overlay colors cycle through the palette, and at most
 * one segment request in flight (later clicks queue in arrival order).
 */
import type { Run } from "./rle.js";

export type TrainingStatus = "idle" | "training" | "trained";

export interface Overlay {
  x: number;
  y: number;
  runs: Run[];
  size: number;
  colorIndex: number;
}

export class UiSession {
  status: TrainingStatus = "idle";
  overlays: Overlay[] = [];
  private colorCounter = 0;

  constructor(
    readonly id: string,
    readonly width: number,
    readonly height: number,
  ) {}

  get canTrain(): boolean {
    return this.status !== "training";
  }

  get canSegment(): boolean {
    return this.status === "trained";
  }

  beginTraining(): void {
    if (!this.canTrain) throw new Error("training already in progress");
    this.status = "training";
  }

  finishTraining(ok: boolean): void {
    this.status = ok ? "trained" : "idle";
  }

  addOverlay(x: number, y: number, runs: Run[], size: number): Overlay {
    const overlay: Overlay = { x, y, runs, size, colorIndex: this.colorCounter++ };
    this.overlays.push(overlay);
    return overlay;
  }

  clearOverlays(): void {
    this.overlays = [];
    this.colorCounter = 0;
  }
}

/** Runs async jobs strictly one at a time, in enqueue order. */
export class SerialQueue {
  private tail: Promise<void> = Promise.resolve();
  private pending = 0;

  get size(): number {
    return this.pending;
  }

  enqueue<T>(job: () => Promise<T>): Promise<T> {
    this.pending++;
    const result = this.tail.then(job).finally(() => {
      this.pending--;
    });
    // keep the chain alive regardless of job outcome
    this.tail = result.then(
      () => undefined,
      () => undefined,
    );
    return result;
  }
}
