/**
 * Learning-path timeline: milestone flags on a relative time axis plus
 * before/after stacked bars from the revision snapshot.
 *
 * Flag color encodes level and flag height encodes importance via the
 * shared encoding module; reinforce milestones get a visually distinct
 * marker class.
 */

import { flagHeight, levelColor } from "./encoding.js";
import type { MilestoneRecord, PathPayload, StatsPayload } from "./types.js";

export interface PathHandlers {
  onReset?(): void;
  onComplete?(nodeId: string): void;
  onRevise?(): void;
}

export function renderLearningPath(
  container: HTMLElement,
  path: PathPayload,
  stats: StatsPayload | null,
  handlers: PathHandlers = {},
): void {
  container.replaceChildren();

  if (path.milestones.length === 0) {
    const hint = document.createElement("div");
    hint.className = "empty-hint";
    hint.textContent = "No learning path yet. Pick a goal on the map to plan one.";
    container.append(hint);
    return;
  }

  const header = document.createElement("div");
  header.className = "path-header";
  header.textContent = `Cycle ${path.cycle} — ${path.stage.replace("_", " ")}`;
  container.append(header);

  const timeline = document.createElement("div");
  timeline.className = "timeline";
  // Repeated nodes get an occurrence index so flags stay distinguishable.
  const seen = new Map<string, number>();
  for (const milestone of path.milestones) {
    const occurrence = seen.get(milestone.node) ?? 0;
    seen.set(milestone.node, occurrence + 1);
    timeline.append(flagElement(milestone, occurrence, handlers));
  }
  container.append(timeline);

  const controls = document.createElement("div");
  controls.className = "path-controls";
  const reset = document.createElement("button");
  reset.type = "button";
  reset.className = "path-reset";
  reset.textContent = "Reset path";
  reset.addEventListener("click", () => handlers.onReset?.());
  const revise = document.createElement("button");
  revise.type = "button";
  revise.className = "path-revise";
  revise.textContent = "Revise from results";
  revise.addEventListener("click", () => handlers.onRevise?.());
  controls.append(reset, revise);
  container.append(controls);

  if (stats) {
    container.append(statsElement(stats));
  }
}

function flagElement(
  milestone: MilestoneRecord,
  occurrence: number,
  handlers: PathHandlers,
): HTMLElement {
  const flag = document.createElement("div");
  flag.className = `flag status-${milestone.status}`;
  if (milestone.status === "reinforce") flag.classList.add("reinforce");
  flag.dataset.node = milestone.node;
  flag.dataset.occurrence = String(occurrence);
  flag.dataset.status = milestone.status;
  flag.dataset.level = String(milestone.level);
  flag.style.left = `${(milestone.time_pos * 100).toFixed(2)}%`;

  const pole = document.createElement("div");
  pole.className = "flag-pole";
  pole.style.height = `${flagHeight(milestone.importance)}px`;

  const banner = document.createElement("div");
  banner.className = "flag-banner";
  banner.style.background = levelColor(milestone.level);
  banner.textContent = milestone.name;
  banner.title = `${milestone.name} — level ${milestone.level}, importance ${milestone.importance.toFixed(2)}, ${milestone.status}`;

  if (milestone.status === "pending") {
    banner.addEventListener("click", () => handlers.onComplete?.(milestone.node));
  }

  flag.append(pole, banner);
  return flag;
}

/** Stacked before/after level histograms, one segment per nonzero level. */
export function statsElement(stats: StatsPayload): HTMLElement {
  const wrap = document.createElement("div");
  wrap.className = "path-stats";
  wrap.append(stackedBar("before", stats.before), stackedBar("after", stats.after));
  return wrap;
}

const SEGMENT_UNIT = 14; // px per milestone in a bar segment

function stackedBar(label: string, histogram: Record<string, number>): HTMLElement {
  const column = document.createElement("div");
  column.className = `stacked-bar bar-${label}`;
  column.dataset.phase = label;

  const bar = document.createElement("div");
  bar.className = "bar-segments";
  let total = 0;
  const levels = Object.keys(histogram)
    .map(Number)
    .sort((a, b) => a - b);
  for (const level of levels) {
    const count = histogram[String(level)];
    if (count === 0) continue;
    total += count;
    const segment = document.createElement("div");
    segment.className = "bar-segment";
    segment.dataset.level = String(level);
    segment.dataset.count = String(count);
    segment.style.height = `${count * SEGMENT_UNIT}px`;
    segment.style.background = levelColor(level);
    segment.title = `level ${level}: ${count}`;
    bar.append(segment);
  }

  const caption = document.createElement("div");
  caption.className = "bar-caption";
  caption.textContent = `${label} (${total})`;

  column.append(bar, caption);
  return column;
}
