/**
 * Editable knowledge mind-map: a node-link SVG view over the server graph
 * and a server-computed layout.
 *
 * Node color encodes learning level, node size encodes importance, both
 * through the shared encoding module. The view itself never mutates the
 * graph; context actions and the layout toggle hand intents back to the
 * caller, which talks to the API and re-renders.
 */

import { fitPositions, levelColor, nodeRadius } from "./encoding.js";
import type { GraphDocument, GraphNodeRecord, LayoutPayload, LayoutStyle } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface MindMapHandlers {
  onRecommendQuestions?(nodeId: string): void;
  onSetGoal?(nodeId: string): void;
  onTakeNote?(nodeId: string): void;
  onToggleLayout?(style: LayoutStyle): void;
}

export interface MindMapOptions {
  width?: number;
  height?: number;
  margin?: number;
}

export function renderMindMap(
  container: HTMLElement,
  graph: GraphDocument,
  layout: LayoutPayload,
  handlers: MindMapHandlers = {},
  options: MindMapOptions = {},
): void {
  container.replaceChildren();
  try {
    build(container, graph, layout, handlers, options);
  } catch (err) {
    container.replaceChildren();
    const fallback = document.createElement("div");
    fallback.className = "render-error";
    fallback.textContent = "Could not render the mind map.";
    fallback.title = err instanceof Error ? err.message : String(err);
    container.append(fallback);
  }
}

function build(
  container: HTMLElement,
  graph: GraphDocument,
  layout: LayoutPayload,
  handlers: MindMapHandlers,
  options: MindMapOptions,
): void {
  if (!Array.isArray(graph.nodes) || !Array.isArray(graph.edges)) {
    throw new Error("graph document is malformed");
  }

  container.append(toggleButton(layout.style, handlers));

  if (graph.nodes.length === 0) {
    const hint = document.createElement("div");
    hint.className = "empty-hint";
    hint.textContent = "The map is empty. Upload material or add a concept to begin.";
    container.append(hint);
    return;
  }

  const width = options.width ?? 800;
  const height = options.height ?? 520;
  const margin = options.margin ?? 48;
  const fitted = fitPositions(layout.positions, { width, height, margin });
  for (const node of graph.nodes) {
    if (!(node.id in fitted)) {
      throw new Error(`layout has no position for node ${node.id}`);
    }
  }

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("class", "mindmap");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("width", String(width));
  svg.setAttribute("height", String(height));

  const edgeGroup = document.createElementNS(SVG_NS, "g");
  edgeGroup.setAttribute("class", "edges");
  for (const edge of graph.edges) {
    const from = fitted[edge.source];
    const to = fitted[edge.target];
    if (!from || !to) {
      throw new Error(`edge ${edge.source}->${edge.target} references a missing node`);
    }
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("class", `edge edge-${edge.kind}`);
    line.setAttribute("x1", String(from[0]));
    line.setAttribute("y1", String(from[1]));
    line.setAttribute("x2", String(to[0]));
    line.setAttribute("y2", String(to[1]));
    line.setAttribute("stroke", levelColor(edge.level));
    line.dataset.source = edge.source;
    line.dataset.target = edge.target;
    line.dataset.kind = edge.kind;
    edgeGroup.append(line);
  }
  svg.append(edgeGroup);

  const nodeGroup = document.createElementNS(SVG_NS, "g");
  nodeGroup.setAttribute("class", "nodes");
  const taxonomy = graph.taxonomy ?? [];
  for (const node of graph.nodes) {
    nodeGroup.append(nodeElement(node, fitted[node.id], taxonomy, container, handlers));
  }
  svg.append(nodeGroup);
  container.append(svg);
}

function nodeElement(
  node: GraphNodeRecord,
  position: [number, number],
  taxonomy: string[],
  container: HTMLElement,
  handlers: MindMapHandlers,
): SVGGElement {
  const [x, y] = position;
  const group = document.createElementNS(SVG_NS, "g");
  group.setAttribute("class", "node");
  group.dataset.nodeId = node.id;

  const circle = document.createElementNS(SVG_NS, "circle");
  circle.setAttribute("cx", String(x));
  circle.setAttribute("cy", String(y));
  circle.setAttribute("r", String(nodeRadius(node.importance)));
  circle.setAttribute("fill", levelColor(node.level));

  const title = document.createElementNS(SVG_NS, "title");
  const levelLabel = taxonomy[node.level - 1] ?? `level ${node.level}`;
  title.textContent = `${node.name} — ${levelLabel}, importance ${node.importance.toFixed(2)}`;
  circle.append(title);

  const label = document.createElementNS(SVG_NS, "text");
  label.setAttribute("x", String(x));
  label.setAttribute("y", String(y + nodeRadius(node.importance) + 14));
  label.setAttribute("text-anchor", "middle");
  label.setAttribute("class", "node-label");
  label.textContent = node.name;

  group.append(circle, label);
  group.addEventListener("click", (event) => {
    event.stopPropagation();
    openContextMenu(container, node.id, handlers);
  });
  return group;
}

function toggleButton(current: string, handlers: MindMapHandlers): HTMLButtonElement {
  const other: LayoutStyle = current === "concentric" ? "layered" : "concentric";
  const button = document.createElement("button");
  button.className = "layout-toggle";
  button.type = "button";
  button.dataset.next = other;
  button.textContent = `Switch to ${other} layout`;
  button.addEventListener("click", () => handlers.onToggleLayout?.(other));
  return button;
}

function openContextMenu(
  container: HTMLElement,
  nodeId: string,
  handlers: MindMapHandlers,
): void {
  container.querySelector(".context-menu")?.remove();
  const menu = document.createElement("div");
  menu.className = "context-menu";
  menu.dataset.nodeId = nodeId;

  const actions: [string, string, ((id: string) => void) | undefined][] = [
    ["recommend-questions", "Recommended questions", handlers.onRecommendQuestions],
    ["set-goal", "Set as goal", handlers.onSetGoal],
    ["take-note", "Take a note", handlers.onTakeNote],
  ];
  for (const [action, label, handler] of actions) {
    const item = document.createElement("button");
    item.type = "button";
    item.className = "context-action";
    item.dataset.action = action;
    item.textContent = label;
    item.addEventListener("click", () => {
      menu.remove();
      handler?.(nodeId);
    });
    menu.append(item);
  }
  container.append(menu);
}
