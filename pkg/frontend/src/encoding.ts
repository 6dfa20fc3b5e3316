/**
 * Visual encodings shared by every view.
 *
 * All mappings here are pure functions of (level, importance) so the
 * mind-map, the path timeline, and the question panel stay consistent.
 */

/** Okabe-Ito ordinal palette, one color per learning level 1..8. */
export const LEVEL_PALETTE: readonly string[] = [
  "#e69f00", // 1 orange
  "#56b4e9", // 2 sky blue
  "#009e73", // 3 bluish green
  "#f0e442", // 4 yellow
  "#0072b2", // 5 blue
  "#d55e00", // 6 vermillion
  "#cc79a7", // 7 reddish purple
  "#999999", // 8 gray
];

export const LEVEL_COUNT = LEVEL_PALETTE.length;

export function levelColor(level: number): string {
  if (!Number.isInteger(level) || level < 1 || level > LEVEL_COUNT) {
    throw new RangeError(`learning level must be 1..${LEVEL_COUNT}, got ${level}`);
  }
  return LEVEL_PALETTE[level - 1];
}

export const MAX_NODE_RADIUS = 26;

/** Node radius grows linearly with importance; importance is clamped to (0, 1]. */
export function nodeRadius(importance: number): number {
  return MAX_NODE_RADIUS * clampImportance(importance);
}

export const MAX_FLAG_HEIGHT = 96;

/** Milestone flag height on the timeline, proportional to importance. */
export function flagHeight(importance: number): number {
  return MAX_FLAG_HEIGHT * clampImportance(importance);
}

function clampImportance(importance: number): number {
  if (!Number.isFinite(importance)) {
    throw new RangeError(`importance must be a finite number, got ${importance}`);
  }
  return Math.min(1, Math.max(0, importance));
}

export interface Box {
  width: number;
  height: number;
  margin: number;
}

/**
 * Map layout positions into pixel space, preserving aspect-free relative
 * placement per axis. Degenerate axes (all positions equal) center.
 */
export function fitPositions(
  positions: Record<string, [number, number]>,
  box: Box,
): Record<string, [number, number]> {
  const ids = Object.keys(positions);
  const fitted: Record<string, [number, number]> = {};
  if (ids.length === 0) return fitted;

  let minX = Infinity;
  let maxX = -Infinity;
  let minY = Infinity;
  let maxY = -Infinity;
  for (const id of ids) {
    const [x, y] = positions[id];
    minX = Math.min(minX, x);
    maxX = Math.max(maxX, x);
    minY = Math.min(minY, y);
    maxY = Math.max(maxY, y);
  }

  const innerW = box.width - 2 * box.margin;
  const innerH = box.height - 2 * box.margin;
  const spanX = maxX - minX;
  const spanY = maxY - minY;
  for (const id of ids) {
    const [x, y] = positions[id];
    const px = spanX === 0 ? box.width / 2 : box.margin + ((x - minX) / spanX) * innerW;
    const py = spanY === 0 ? box.height / 2 : box.margin + ((y - minY) / spanY) * innerH;
    fitted[id] = [px, py];
  }
  return fitted;
}
