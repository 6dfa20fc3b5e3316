import { describe, expect, it } from "vitest";

import {
  LEVEL_COUNT,
  LEVEL_PALETTE,
  MAX_FLAG_HEIGHT,
  MAX_NODE_RADIUS,
  fitPositions,
  flagHeight,
  levelColor,
  nodeRadius,
} from "../src/encoding.js";

describe("level palette", () => {
  it("has one distinct color per level", () => {
    expect(LEVEL_COUNT).toBe(8);
    expect(new Set(LEVEL_PALETTE).size).toBe(8);
    for (const color of LEVEL_PALETTE) {
      expect(color).toMatch(/^#[0-9a-f]{6}$/);
    }
  });

  it("maps levels 1..8 onto the palette in order", () => {
    for (let level = 1; level <= 8; level++) {
      expect(levelColor(level)).toBe(LEVEL_PALETTE[level - 1]);
    }
  });

  it.each([0, 9, 1.5, NaN])("rejects level %s", (level) => {
    expect(() => levelColor(level as number)).toThrow(RangeError);
  });
});

describe("size encodings", () => {
  it("scales node radius linearly with importance", () => {
    expect(nodeRadius(1)).toBe(MAX_NODE_RADIUS);
    expect(nodeRadius(0.5)).toBeCloseTo(MAX_NODE_RADIUS / 2, 10);
    expect(nodeRadius(0.25)).toBeCloseTo(MAX_NODE_RADIUS / 4, 10);
  });

  it("preserves importance ratios exactly", () => {
    expect(nodeRadius(0.8) / nodeRadius(0.4)).toBeCloseTo(2, 10);
    expect(flagHeight(0.9) / flagHeight(0.3)).toBeCloseTo(3, 10);
  });

  it("clamps out-of-range importance instead of exploding", () => {
    expect(nodeRadius(1.7)).toBe(MAX_NODE_RADIUS);
    expect(nodeRadius(-2)).toBe(0);
    expect(flagHeight(5)).toBe(MAX_FLAG_HEIGHT);
  });

  it("rejects non-finite importance", () => {
    expect(() => nodeRadius(Infinity)).toThrow(RangeError);
    expect(() => flagHeight(NaN)).toThrow(RangeError);
  });
});

describe("fitPositions", () => {
  const box = { width: 100, height: 60, margin: 10 };

  it("stretches positions to the inner box corners", () => {
    const fitted = fitPositions({ a: [0, 0], b: [2, 4] }, box);
    expect(fitted.a).toEqual([10, 10]);
    expect(fitted.b).toEqual([90, 50]);
  });

  it("keeps relative order along each axis", () => {
    const fitted = fitPositions({ a: [0, 3], b: [1, 1], c: [5, 2] }, box);
    expect(fitted.a[0]).toBeLessThan(fitted.b[0]);
    expect(fitted.b[0]).toBeLessThan(fitted.c[0]);
    expect(fitted.b[1]).toBeLessThan(fitted.c[1]);
    expect(fitted.c[1]).toBeLessThan(fitted.a[1]);
  });

  it("centers a degenerate axis", () => {
    const fitted = fitPositions({ a: [3, 0], b: [3, 9] }, box);
    expect(fitted.a[0]).toBe(50);
    expect(fitted.b[0]).toBe(50);
  });

  it("handles a single node and an empty map", () => {
    expect(fitPositions({ only: [7, 7] }, box).only).toEqual([50, 30]);
    expect(fitPositions({}, box)).toEqual({});
  });
});
