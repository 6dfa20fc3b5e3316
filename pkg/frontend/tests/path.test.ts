import { beforeEach, describe, expect, it, vi } from "vitest";

import { flagHeight, levelColor } from "../src/encoding.js";
import { renderLearningPath, statsElement } from "../src/path.js";
import { pathFixture, statsFixture } from "./helpers.js";

let container: HTMLElement;

beforeEach(() => {
  document.body.innerHTML = "";
  container = document.createElement("div");
  document.body.append(container);
});

describe("renderLearningPath", () => {
  it("plants one flag per milestone at its time position", () => {
    renderLearningPath(container, pathFixture(), null);
    const flags = container.querySelectorAll<HTMLElement>(".flag");
    expect(flags).toHaveLength(4);
    expect(flags[0].style.left).toBe("25.00%");
    expect(flags[3].style.left).toBe("100.00%");
  });

  it("encodes level as banner color and importance as pole height", () => {
    renderLearningPath(container, pathFixture(), null);
    const flag = container.querySelector<HTMLElement>('.flag[data-node="groups"]')!;
    const banner = flag.querySelector<HTMLElement>(".flag-banner")!;
    const pole = flag.querySelector<HTMLElement>(".flag-pole")!;
    expect(banner.style.background).toBe(levelColor(3));
    expect(pole.style.height).toBe(`${flagHeight(0.85)}px`);
  });

  it("marks reinforce milestones distinctly", () => {
    renderLearningPath(container, pathFixture(), null);
    const reinforced = container.querySelectorAll(".flag.reinforce");
    expect(reinforced).toHaveLength(1);
    expect((reinforced[0] as HTMLElement).dataset.status).toBe("reinforce");
    // The same node's earlier occurrence stays a plain flag.
    const occurrences = container.querySelectorAll('.flag[data-node="rings"]');
    expect(occurrences).toHaveLength(2);
    expect((occurrences[0] as HTMLElement).classList.contains("reinforce")).toBe(false);
  });

  it("shows a single flag for a one-milestone path at the axis end", () => {
    const path = pathFixture();
    path.milestones = [
      { node: "sets", name: "Sets", level: 1, importance: 1, time_pos: 1, status: "pending" },
    ];
    renderLearningPath(container, path, null);
    const flags = container.querySelectorAll<HTMLElement>(".flag");
    expect(flags).toHaveLength(1);
    expect(flags[0].style.left).toBe("100.00%");
  });

  it("shows an empty hint when there is no path", () => {
    renderLearningPath(container, { ...pathFixture(), milestones: [] }, null);
    expect(container.querySelector(".timeline")).toBeNull();
    expect(container.querySelector(".empty-hint")?.textContent).toMatch(/no learning path/i);
  });

  it("wires reset and revise controls, and complete on pending flags", () => {
    const onReset = vi.fn();
    const onRevise = vi.fn();
    const onComplete = vi.fn();
    renderLearningPath(container, pathFixture(), null, { onReset, onRevise, onComplete });

    container.querySelector<HTMLButtonElement>(".path-reset")!.click();
    container.querySelector<HTMLButtonElement>(".path-revise")!.click();
    container
      .querySelector<HTMLElement>('.flag[data-node="groups"] .flag-banner')!
      .click();
    expect(onReset).toHaveBeenCalledTimes(1);
    expect(onRevise).toHaveBeenCalledTimes(1);
    expect(onComplete).toHaveBeenCalledWith("groups");

    // Done milestones are not clickable into complete.
    container.querySelector<HTMLElement>('.flag[data-node="sets"] .flag-banner')!.click();
    expect(onComplete).toHaveBeenCalledTimes(1);
  });
});

describe("statsElement", () => {
  it("builds one segment per nonzero level with the payload count", () => {
    const stats = statsFixture();
    const element = statsElement(stats);

    for (const phase of ["before", "after"] as const) {
      const bar = element.querySelector(`.bar-${phase}`)!;
      const segments = [...bar.querySelectorAll<HTMLElement>(".bar-segment")];
      const fromDom = Object.fromEntries(
        segments.map((s) => [s.dataset.level, Number(s.dataset.count)]),
      );
      const expected = Object.fromEntries(
        Object.entries(stats[phase]).filter(([, count]) => count > 0),
      );
      expect(fromDom).toEqual(expected);
    }
  });

  it("colors segments by level and sizes them by count", () => {
    const element = statsElement(statsFixture());
    const after4 = element.querySelector<HTMLElement>(
      '.bar-after .bar-segment[data-level="4"]',
    )!;
    expect(after4.style.background).toBe(levelColor(4));
    expect(after4.style.height).toBe(`${2 * 14}px`);
  });

  it("captions each bar with its total", () => {
    const element = statsElement(statsFixture());
    expect(element.querySelector(".bar-before .bar-caption")!.textContent).toBe("before (3)");
    expect(element.querySelector(".bar-after .bar-caption")!.textContent).toBe("after (4)");
  });

  it("appears under the timeline when stats are provided", () => {
    renderLearningPath(container, pathFixture(), statsFixture());
    expect(container.querySelector(".path-stats")).not.toBeNull();
    renderLearningPath(container, pathFixture(), null);
    expect(container.querySelector(".path-stats")).toBeNull();
  });

  it("bar totals tally with the milestone counts of the fixture", () => {
    // after = the revised path: 4 milestones in pathFixture.
    const element = statsElement(statsFixture());
    const sum = [...element.querySelectorAll<HTMLElement>(".bar-after .bar-segment")]
      .map((s) => Number(s.dataset.count))
      .reduce((a, b) => a + b, 0);
    expect(sum).toBe(pathFixture().milestones.length);
  });
});
