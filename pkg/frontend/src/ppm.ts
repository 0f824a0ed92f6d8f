/**
 * Binary PPM (P6, maxval 255) decoding.
 *
 * Browsers cannot display PPM natively, so the client parses the bytes it
 * uploads (and the bytes the service serves back) into raw RGB for canvas
 * rendering. The upload itself always forwards the original bytes verbatim.
 */

export interface RawImage {
  width: number;
  height: number;
  /** Row-major RGB, 3 bytes per pixel. */
  rgb: Uint8Array<ArrayBuffer>;
}

export class PpmError extends Error {}

const WHITESPACE = new Set([0x20, 0x09, 0x0a, 0x0d, 0x0b, 0x0c]);
const HASH = 0x23;

class Scanner {
  pos = 0;

  constructor(private readonly data: Uint8Array) {}

  private skipSpace(): void {
    while (this.pos < this.data.length) {
      const c = this.data[this.pos];
      if (WHITESPACE.has(c)) {
        this.pos++;
      } else if (c === HASH) {
        while (this.pos < this.data.length && this.data[this.pos] !== 0x0a) {
          this.pos++;
        }
      } else {
        return;
      }
    }
  }

  token(): string {
    this.skipSpace();
    const start = this.pos;
    while (
      this.pos < this.data.length &&
      !WHITESPACE.has(this.data[this.pos]) &&
      this.data[this.pos] !== HASH
    ) {
      this.pos++;
    }
    if (this.pos === start) throw new PpmError("truncated header");
    let out = "";
    for (let i = start; i < this.pos; i++) out += String.fromCharCode(this.data[i]);
    return out;
  }

  integer(): number {
    const tok = this.token();
    if (!/^[0-9]+$/.test(tok)) throw new PpmError(`expected integer, got "${tok}"`);
    return parseInt(tok, 10);
  }
}

export function parsePpm(data: Uint8Array): RawImage {
  const scan = new Scanner(data);
  const magic = scan.token();
  if (magic !== "P6") throw new PpmError(`expected P6, got "${magic}"`);
  const width = scan.integer();
  const height = scan.integer();
  if (width < 1 || height < 1) throw new PpmError(`bad dimensions ${width}x${height}`);
  const maxval = scan.integer();
  if (maxval !== 255) throw new PpmError(`unsupported maxval ${maxval}`);
  if (scan.pos >= data.length || !WHITESPACE.has(data[scan.pos])) {
    throw new PpmError("missing whitespace after maxval");
  }
  const start = scan.pos + 1;
  const need = width * height * 3;
  if (data.length - start < need) {
    throw new PpmError(`truncated pixel data: need ${need} bytes`);
  }
  return { width, height, rgb: data.slice(start, start + need) };
}

/** Expand to RGBA (alpha 255) for ImageData consumption. */
export function rgbToRgba(img: RawImage): Uint8ClampedArray<ArrayBuffer> {
  const out = new Uint8ClampedArray(img.width * img.height * 4);
  for (let i = 0, j = 0; i < img.rgb.length; i += 3, j += 4) {
    out[j] = img.rgb[i];
    out[j + 1] = img.rgb[i + 1];
    out[j + 2] = img.rgb[i + 2];
    out[j + 3] = 255;
  }
  return out;
}
