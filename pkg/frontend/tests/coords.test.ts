import { describe, expect, it } from "vitest";

import { ZOOM_LEVELS, clientToPixel, inBounds, nextZoom, pixelBox } from "../src/coords.js";

describe("clientToPixel", () => {
  it("maps 1:1 at zoom 1", () => {
    expect(clientToPixel(5, 9, 1)).toEqual({ x: 5, y: 9 });
    expect(clientToPixel(5.9, 9.1, 1)).toEqual({ x: 5, y: 9 });
  });

  it("round-trips through pixelBox at every zoom level", () => {
    for (const zoom of ZOOM_LEVELS) {
      for (const [x, y] of [
        [0, 0],
        [1, 0],
        [7, 3],
        [127, 95],
      ]) {
        const box = pixelBox(x, y, zoom);
        // every client point strictly inside the box maps back to the pixel
        for (const [dx, dy] of [
          [0, 0],
          [box.size / 2, box.size / 2],
          [box.size - 0.001, box.size - 0.001],
        ]) {
          expect(clientToPixel(box.left + dx, box.top + dy, zoom)).toEqual({ x, y });
        }
      }
    }
  });
});

describe("inBounds", () => {
  it("accepts interior, rejects edges beyond size", () => {
    expect(inBounds(0, 0, 4, 4)).toBe(true);
    expect(inBounds(3, 3, 4, 4)).toBe(true);
    expect(inBounds(4, 0, 4, 4)).toBe(false);
    expect(inBounds(0, 4, 4, 4)).toBe(false);
    expect(inBounds(-1, 0, 4, 4)).toBe(false);
  });
});

describe("nextZoom", () => {
  it("steps through the fixed levels and clamps", () => {
    expect(nextZoom(1, 1)).toBe(2);
    expect(nextZoom(2, 1)).toBe(3);
    expect(nextZoom(8, 1)).toBe(8);
    expect(nextZoom(1, -1)).toBe(1);
    expect(nextZoom(6, -1)).toBe(4);
  });
});
