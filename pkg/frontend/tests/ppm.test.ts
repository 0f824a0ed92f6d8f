import { describe, expect, it } from "vitest";

import { PpmError, parsePpm, rgbToRgba } from "../src/ppm.js";

function ppmBytes(header: string, pixels: number[]): Uint8Array {
  const head = new TextEncoder().encode(header);
  const out = new Uint8Array(head.length + pixels.length);
  out.set(head);
  out.set(pixels, head.length);
  return out;
}

describe("parsePpm", () => {
  it("reads a minimal image", () => {
    const img = parsePpm(ppmBytes("P6\n1 1\n255\n", [10, 20, 30]));
    expect(img.width).toBe(1);
    expect(img.height).toBe(1);
    expect([...img.rgb]).toEqual([10, 20, 30]);
  });

  it("is row-major", () => {
    const img = parsePpm(ppmBytes("P6\n2 2\n255\n", [...Array(12).keys()]));
    // pixel (x=1, y=0) starts at byte 3
    expect([...img.rgb.slice(3, 6)]).toEqual([3, 4, 5]);
    expect([...img.rgb.slice(6, 9)]).toEqual([6, 7, 8]);
  });

  it("handles comments and odd whitespace", () => {
    const img = parsePpm(ppmBytes("P6 # c\n 2\t1 # d\n255\n", [0, 0, 0, 0, 0, 0]));
    expect(img.width).toBe(2);
    expect(img.height).toBe(1);
  });

  it.each([
    ["P5\n1 1\n255\n\0", /expected P6/],
    ["P6\n0 1\n255\n", /dimensions/],
    ["P6\n1 1\n254\n\0\0\0", /maxval/],
    ["P6\n2 2\n255\n\0\0\0", /truncated pixel data/],
    ["P6\n1 1\n255", /whitespace/],
    ["P6\n1\n", /truncated header/],
    ["P6\nx 1\n255\n", /expected integer/],
  ])("rejects %j", (header, pattern) => {
    expect(() => parsePpm(new TextEncoder().encode(header))).toThrow(pattern);
    expect(() => parsePpm(new TextEncoder().encode(header))).toThrow(PpmError);
  });
});

describe("rgbToRgba", () => {
  it("expands with opaque alpha", () => {
    const img = { width: 2, height: 1, rgb: new Uint8Array([1, 2, 3, 4, 5, 6]) };
    expect([...rgbToRgba(img)]).toEqual([1, 2, 3, 255, 4, 5, 6, 255]);
  });
});
