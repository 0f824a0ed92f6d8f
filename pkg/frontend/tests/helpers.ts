/** Test-side helpers: PPM generation and PBM (P1) parsing for comparisons. */
import { pixelKey } from "../src/rle.js";

/** Build a two-region P6 image: left half dark, right half bright. */
export function twoRegionPpm(width: number, height: number): Uint8Array<ArrayBuffer> {
  const header = new TextEncoder().encode(`P6\n${width} ${height}\n255\n`);
  const body = new Uint8Array(width * height * 3);
  for (let y = 0; y < height; y++) {
    for (let x = 0; x < width; x++) {
      const value = x < width / 2 ? 30 : 220;
      const offset = (y * width + x) * 3;
      body[offset] = body[offset + 1] = body[offset + 2] = value;
    }
  }
  const out = new Uint8Array(header.length + body.length);
  out.set(header);
  out.set(body, header.length);
  return out;
}

/** Parse a text PBM mask; returns the set of pixels whose bit is 1. */
export function parsePbm(text: string): { width: number; height: number; pixels: Set<number> } {
  const withoutComments = text.replace(/#[^\n]*/g, " ");
  const tokens = withoutComments.split(/\s+/).filter((t) => t.length > 0);
  if (tokens[0] !== "P1") throw new Error(`expected P1, got "${tokens[0]}"`);
  const width = parseInt(tokens[1], 10);
  const height = parseInt(tokens[2], 10);
  const bits = tokens.slice(3).join("");
  if (bits.length !== width * height) {
    throw new Error(`expected ${width * height} bits, got ${bits.length}`);
  }
  const pixels = new Set<number>();
  for (let i = 0; i < bits.length; i++) {
    if (bits[i] === "1") pixels.add(pixelKey(i % width, Math.floor(i / width)));
    else if (bits[i] !== "0") throw new Error(`unexpected "${bits[i]}" in payload`);
  }
  return { width, height, pixels };
}
