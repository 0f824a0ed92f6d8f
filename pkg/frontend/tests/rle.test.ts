import { describe, expect, it } from "vitest";

import { Run, keyToXY, paintRuns, pixelKey, runsSize, runsToPixels } from "../src/rle.js";

describe("pixel keys", () => {
  it("round-trip", () => {
    for (const [x, y] of [
      [0, 0],
      [255, 0],
      [0, 255],
      [511, 300],
      [65535, 65535],
    ]) {
      expect(keyToXY(pixelKey(x, y))).toEqual({ x, y });
    }
  });
});

describe("runsToPixels", () => {
  it("expands runs to exactly their pixels", () => {
    const runs: Run[] = [
      [0, 0, 3],
      [0, 4, 1],
      [2, 1, 2],
    ];
    const pixels = runsToPixels(runs);
    const expected = new Set(
      [
        [0, 0],
        [1, 0],
        [2, 0],
        [4, 0],
        [1, 2],
        [2, 2],
      ].map(([x, y]) => pixelKey(x, y)),
    );
    expect(pixels).toEqual(expected);
    expect(runsSize(runs)).toBe(6);
  });

  it("empty runs give an empty set", () => {
    expect(runsToPixels([]).size).toBe(0);
    expect(runsSize([])).toBe(0);
  });
});

describe("paintRuns", () => {
  it("painted pixel set equals the decoded RLE set exactly", () => {
    const runs: Run[] = [
      [1, 2, 4],
      [3, 0, 1],
      [3, 5, 3],
    ];
    const width = 8;
    const height = 5;
    const buffer = paintRuns(runs, width, height, { r: 230, g: 25, b: 75 }, 0.5);
    const painted = new Set<number>();
    for (let y = 0; y < height; y++) {
      for (let x = 0; x < width; x++) {
        if (buffer[(y * width + x) * 4 + 3] > 0) painted.add(pixelKey(x, y));
      }
    }
    expect(painted).toEqual(runsToPixels(runs));
  });

  it("applies the color and scaled alpha", () => {
    const buffer = paintRuns([[0, 0, 1]], 1, 1, { r: 10, g: 20, b: 30 }, 0.5);
    expect([...buffer]).toEqual([10, 20, 30, 128]);
  });

  it("rejects out-of-range runs", () => {
    expect(() => paintRuns([[5, 0, 1]], 4, 4, { r: 0, g: 0, b: 0 }, 1)).toThrow(RangeError);
    expect(() => paintRuns([[0, 3, 2]], 4, 4, { r: 0, g: 0, b: 0 }, 1)).toThrow(RangeError);
  });
});
