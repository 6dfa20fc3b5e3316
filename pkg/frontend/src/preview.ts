/**
 * File preview: the extracted knowledge tree beside its knowledge cards,
 * shown after an upload so the learner can inspect before adopting the
 * tree into the map.
 */

import { levelColor } from "./encoding.js";
import type { CardPayload, MaterialPayload, TreeNodePayload } from "./types.js";

export interface PreviewHandlers {
  /** Adopt the previewed tree into the session graph. */
  onAdopt?(docId: string): void;
  onCopyCard?(card: CardPayload): void;
}

export function renderPreview(
  container: HTMLElement,
  material: MaterialPayload,
  handlers: PreviewHandlers = {},
): void {
  container.replaceChildren();

  const heading = document.createElement("h3");
  heading.textContent = material.title;
  container.append(heading);

  const meta = document.createElement("div");
  meta.className = "material-meta";
  meta.textContent = `${material.format}, ${material.sections} section${material.sections === 1 ? "" : "s"}`;
  container.append(meta);

  const tree = document.createElement("ul");
  tree.className = "preview-tree";
  for (const root of material.tree.roots) {
    tree.append(treeItem(root));
  }
  container.append(tree);

  const adopt = document.createElement("button");
  adopt.type = "button";
  adopt.className = "adopt-tree";
  adopt.textContent = "Add to mind map";
  adopt.addEventListener("click", () => handlers.onAdopt?.(material.document));
  container.append(adopt);

  if (material.cards.cards.length > 0) {
    const cardList = document.createElement("div");
    cardList.className = "card-list";
    for (const card of material.cards.cards) {
      cardList.append(cardElement(card, handlers));
    }
    container.append(cardList);
  }
}

function treeItem(node: TreeNodePayload): HTMLLIElement {
  const item = document.createElement("li");
  item.className = "tree-node";
  item.dataset.level = String(node.level);

  const dot = document.createElement("span");
  dot.className = "level-dot";
  dot.style.background = levelColor(node.level);
  const name = document.createElement("span");
  name.className = "tree-name";
  name.textContent = node.name;
  item.append(dot, name);

  if (node.children.length > 0) {
    const children = document.createElement("ul");
    for (const child of node.children) {
      children.append(treeItem(child));
    }
    item.append(children);
  }
  return item;
}

function cardElement(card: CardPayload, handlers: PreviewHandlers): HTMLElement {
  const box = document.createElement("div");
  box.className = "knowledge-card";
  box.dataset.node = card.node;

  const name = document.createElement("h4");
  name.textContent = card.node;

  const significance = document.createElement("p");
  significance.className = "card-significance";
  significance.textContent = card.significance;

  const application = document.createElement("p");
  application.className = "card-application";
  application.textContent = card.application;

  const stub = document.createElement("p");
  stub.className = "card-question";
  stub.textContent = card.question_stub;

  const copy = document.createElement("button");
  copy.type = "button";
  copy.className = "copy-card";
  copy.textContent = "Copy";
  copy.addEventListener("click", () => handlers.onCopyCard?.(card));

  box.append(name, significance, application, stub, copy);
  return box;
}
