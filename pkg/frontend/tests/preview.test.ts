import { beforeEach, describe, expect, it, vi } from "vitest";

import { levelColor } from "../src/encoding.js";
import { renderPreview } from "../src/preview.js";
import type { MaterialPayload } from "../src/types.js";

const MATERIAL: MaterialPayload = {
  document: "d1",
  title: "Algebra",
  format: "markdown",
  sections: 3,
  tree: {
    format: "srltutor-tree",
    version: 1,
    roots: [
      {
        name: "Algebra",
        level: 1,
        importance: 1,
        children: [
          { name: "Groups", level: 2, importance: 0.8, children: [] },
          { name: "Rings", level: 3, importance: 0.6, children: [] },
        ],
      },
    ],
  },
  cards: {
    format: "srltutor-cards",
    version: 1,
    cards: [
      {
        node: "Groups",
        significance: "Groups capture symmetry.",
        application: "Used in cryptography and physics.",
        question_stub: "What makes a set with an operation a group?",
      },
    ],
  },
};

let container: HTMLElement;

beforeEach(() => {
  document.body.innerHTML = "";
  container = document.createElement("div");
  document.body.append(container);
});

describe("renderPreview", () => {
  it("shows the document title and section count", () => {
    renderPreview(container, MATERIAL);
    expect(container.querySelector("h3")!.textContent).toBe("Algebra");
    expect(container.querySelector(".material-meta")!.textContent).toBe("markdown, 3 sections");
  });

  it("nests the tree and colors level dots", () => {
    renderPreview(container, MATERIAL);
    const root = container.querySelector<HTMLElement>(".preview-tree > .tree-node")!;
    expect(root.querySelector(".tree-name")!.textContent).toBe("Algebra");
    const children = root.querySelectorAll(":scope > ul > .tree-node");
    expect(children).toHaveLength(2);
    const dot = children[1].querySelector<HTMLElement>(".level-dot")!;
    expect(dot.style.background).toBe(levelColor(3));
  });

  it("renders knowledge cards with their three parts", () => {
    renderPreview(container, MATERIAL);
    const card = container.querySelector<HTMLElement>(".knowledge-card")!;
    expect(card.dataset.node).toBe("Groups");
    expect(card.querySelector(".card-significance")!.textContent).toContain("symmetry");
    expect(card.querySelector(".card-application")!.textContent).toContain("cryptography");
    expect(card.querySelector(".card-question")!.textContent).toContain("group");
  });

  it("adopts the previewed document on the adopt button", () => {
    const onAdopt = vi.fn();
    renderPreview(container, MATERIAL, { onAdopt });
    container.querySelector<HTMLButtonElement>(".adopt-tree")!.click();
    expect(onAdopt).toHaveBeenCalledWith("d1");
  });

  it("copies a card through the copy control", () => {
    const onCopyCard = vi.fn();
    renderPreview(container, MATERIAL, { onCopyCard });
    container.querySelector<HTMLButtonElement>(".copy-card")!.click();
    expect(onCopyCard).toHaveBeenCalledWith(MATERIAL.cards.cards[0]);
  });

  it("omits the card list when there are no cards", () => {
    renderPreview(container, {
      ...MATERIAL,
      sections: 1,
      cards: { ...MATERIAL.cards, cards: [] },
    });
    expect(container.querySelector(".card-list")).toBeNull();
    expect(container.querySelector(".material-meta")!.textContent).toBe("markdown, 1 section");
  });
});
