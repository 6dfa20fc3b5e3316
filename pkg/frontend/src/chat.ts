/**
 * Chat view: user turns, structured tutor replies with four sectioned
 * answer parts, highlighted connectives, and actionable relation buttons.
 */

import { DEFAULT_CONNECTIVES, markConnectives } from "./connectives.js";
import type { ChatPayload, RelationRecord, SectionName } from "./types.js";

export interface ChatHandlers {
  onRelationAccept?(suggestion: RelationRecord): void;
  onCopy?(text: string): void;
}

export interface ChatOptions {
  connectives?: readonly string[];
}

const SECTION_ORDER: [SectionName, string][] = [
  ["interpretation", "Interpretation"],
  ["key_points", "Key Points"],
  ["example", "Example"],
  ["summary", "Summary"],
];

export function renderUserTurn(log: HTMLElement, text: string): void {
  const bubble = document.createElement("div");
  bubble.className = "bubble user";
  bubble.textContent = text;
  log.append(bubble);
}

/** Append one tutor reply to the chat log. */
export function renderReply(
  log: HTMLElement,
  reply: ChatPayload,
  handlers: ChatHandlers = {},
  options: ChatOptions = {},
): void {
  const bubble = document.createElement("div");
  bubble.className = "bubble assistant";

  const present = SECTION_ORDER.filter(([key]) => reply.sections[key] !== undefined);
  if (present.length === 0) {
    // No recognizable structure: show the raw text as-is.
    bubble.classList.add("raw");
    bubble.textContent = reply.raw;
    log.append(bubble);
    return;
  }

  const lexicon = options.connectives ?? DEFAULT_CONNECTIVES;
  for (const [key, heading] of present) {
    const section = document.createElement("section");
    section.className = `answer-section answer-${key}`;
    const head = document.createElement("h4");
    head.textContent = heading;
    const body = document.createElement("p");
    for (const segment of markConnectives(reply.sections[key] ?? "", lexicon)) {
      if (segment.connective) {
        const mark = document.createElement("span");
        mark.className = "connective";
        mark.textContent = segment.text;
        body.append(mark);
      } else {
        body.append(segment.text);
      }
    }
    section.append(head, body);
    bubble.append(section);
  }

  if (reply.relation_suggestions.length > 0) {
    bubble.append(suggestionRow(reply.relation_suggestions, handlers));
  }
  log.append(bubble);
}

function suggestionRow(
  suggestions: RelationRecord[],
  handlers: ChatHandlers,
): HTMLElement {
  const row = document.createElement("div");
  row.className = "suggestions";
  for (const suggestion of suggestions) {
    const button = document.createElement("button");
    button.type = "button";
    button.className = "relation-suggestion";
    button.dataset.source = suggestion.source;
    button.dataset.target = suggestion.target;
    button.dataset.kind = suggestion.kind;
    button.dataset.level = String(suggestion.level);
    button.textContent = `${suggestion.source} → ${suggestion.target} (${suggestion.kind}, L${suggestion.level})`;
    button.addEventListener("click", () => {
      // One click, one edge mutation: the button disarms itself so a
      // double-click cannot post the same relation twice.
      button.disabled = true;
      handlers.onRelationAccept?.(suggestion);
    });
    row.append(button);
  }
  return row;
}
