export const DEFAULT_TRAIN_PARAMS = {
    noise_p: 10,
    noise_runs: 100,
    hidden: 50,
    epochs: 30,
    learning_rate: 0.1,
    rng_seed: 42,
};
export class ApiError extends Error {
    constructor(status, message) {
        super(message);
        this.status = status;
    }
}
async function throwOnError(resp) {
    if (resp.ok)
        return;
    let detail = `HTTP ${resp.status}`;
    try {
        const body = await resp.json();
        if (body && typeof body.detail === "string")
            detail = body.detail;
    }
    catch {
        // non-JSON error body; keep the generic message
    }
    throw new ApiError(resp.status, detail);
}
export async function createSession(base, ppmBytes) {
    const resp = await fetch(`${base}/api/session`, {
        method: "POST",
        headers: { "Content-Type": "application/octet-stream" },
        body: ppmBytes,
    });
    await throwOnError(resp);
    return (await resp.json());
}
export async function fetchImage(base, id) {
    const resp = await fetch(`${base}/api/session/${id}/image`);
    await throwOnError(resp);
    return new Uint8Array(await resp.arrayBuffer());
}
export async function trainSession(base, id, params) {
    const resp = await fetch(`${base}/api/session/${id}/train`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(params),
    });
    await throwOnError(resp);
    return (await resp.json());
}
export async function segmentAt(base, id, x, y) {
    const resp = await fetch(`${base}/api/session/${id}/segment`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({ x, y }),
    });
    await throwOnError(resp);
    return (await resp.json());
}
