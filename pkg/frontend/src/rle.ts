/**
 * Mask run-length decoding.
 *
 * The segmentation service returns masks as [y, xStart, length] triples.
 * Pixels are tracked as packed integer keys so sets of them compare fast.
 */

export type Run = [number, number, number];

const X_BITS = 16;

export function pixelKey(x: number, y: number): number {
  return (y << X_BITS) | x;
}

export function keyToXY(key: number): { x: number; y: number } {
  return { x: key & ((1 << X_BITS) - 1), y: key >>> X_BITS };
}

/** Expand RLE runs into the exact pixel set they cover. */
export function runsToPixels(runs: Run[]): Set<number> {
  const pixels = new Set<number>();
  for (const [y, xStart, length] of runs) {
    for (let x = xStart; x < xStart + length; x++) {
      pixels.add(pixelKey(x, y));
    }
  }
  return pixels;
}

export function runsSize(runs: Run[]): number {
  let total = 0;
  for (const run of runs) total += run[2];
  return total;
}

/**
 * Paint runs into an RGBA buffer (row-major, 4 bytes per pixel).
 *
 * Painted pixels get the given color with `alpha` (0..1) scaled to 0..255;
 * everything else stays fully transparent. The non-transparent pixel set of
 * the result is exactly runsToPixels(runs).
 */
export function paintRuns(
  runs: Run[],
  width: number,
  height: number,
  color: { r: number; g: number; b: number },
  alpha: number,
  out?: Uint8ClampedArray<ArrayBuffer>,
): Uint8ClampedArray<ArrayBuffer> {
  const buffer = out ?? new Uint8ClampedArray(width * height * 4);
  const a = Math.round(alpha * 255);
  for (const [y, xStart, length] of runs) {
    if (y < 0 || y >= height) {
      throw new RangeError(`run row ${y} outside 0..${height - 1}`);
    }
    if (xStart < 0 || xStart + length > width) {
      throw new RangeError(`run [${y},${xStart},${length}] exceeds width ${width}`);
    }
    let offset = (y * width + xStart) * 4;
    for (let i = 0; i < length; i++) {
      buffer[offset] = color.r;
      buffer[offset + 1] = color.g;
      buffer[offset + 2] = color.b;
      buffer[offset + 3] = a;
      offset += 4;
    }
  }
  return buffer;
}
