export class UiSession {
    constructor(id, width, height) {
        this.id = id;
        this.width = width;
        this.height = height;
        this.status = "idle";
        this.overlays = [];
        this.colorCounter = 0;
    }
    get canTrain() {
        return this.status !== "training";
    }
    get canSegment() {
        return this.status === "trained";
    }
    beginTraining() {
        if (!this.canTrain)
            throw new Error("training already in progress");
        this.status = "training";
    }
    finishTraining(ok) {
        this.status = ok ? "trained" : "idle";
    }
    addOverlay(x, y, runs, size) {
        const overlay = { x, y, runs, size, colorIndex: this.colorCounter++ };
        this.overlays.push(overlay);
        return overlay;
    }
    clearOverlays() {
        this.overlays = [];
        this.colorCounter = 0;
    }
}
/** Runs async jobs strictly one at a time, in enqueue order. */
export class SerialQueue {
    constructor() {
        this.tail = Promise.resolve();
        this.pending = 0;
    }
    get size() {
        return this.pending;
    }
    enqueue(job) {
        this.pending++;
        const result = this.tail.then(job).finally(() => {
            this.pending--;
        });
        // keep the chain alive regardless of job outcome
        this.tail = result.then(() => undefined, () => undefined);
        return result;
    }
}
