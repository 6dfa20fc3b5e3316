/**
 * Question recommendation panel: one group per learning level, colored by
 * the shared palette, with ask and copy actions per question.
 */

import { levelColor } from "./encoding.js";
import type { QuestionPayload } from "./types.js";

export interface QuestionHandlers {
  /** Post the question as the next user turn. */
  onAsk?(text: string): void;
  onCopy?(text: string): void;
}

export function renderQuestionPanel(
  container: HTMLElement,
  payload: QuestionPayload,
  taxonomy: string[],
  handlers: QuestionHandlers = {},
): void {
  container.replaceChildren();
  const heading = document.createElement("h3");
  heading.textContent = `Recommended questions: ${payload.node}`;
  container.append(heading);

  if (payload.questions.length === 0) {
    const hint = document.createElement("div");
    hint.className = "empty-hint";
    hint.textContent = "No questions recommended yet.";
    container.append(hint);
    return;
  }

  const byLevel = new Map<number, string[]>();
  for (const item of payload.questions) {
    const bucket = byLevel.get(item.level) ?? [];
    bucket.push(item.text);
    byLevel.set(item.level, bucket);
  }

  for (const level of [...byLevel.keys()].sort((a, b) => a - b)) {
    const group = document.createElement("div");
    group.className = "question-group";
    group.dataset.level = String(level);

    const label = document.createElement("h4");
    label.textContent = taxonomy[level - 1] ?? `Level ${level}`;
    label.style.color = levelColor(level);
    group.append(label);

    for (const text of byLevel.get(level) ?? []) {
      group.append(questionRow(text, handlers));
    }
    container.append(group);
  }
}

function questionRow(text: string, handlers: QuestionHandlers): HTMLElement {
  const row = document.createElement("div");
  row.className = "question";

  const ask = document.createElement("button");
  ask.type = "button";
  ask.className = "ask-question";
  ask.textContent = text;
  ask.addEventListener("click", () => handlers.onAsk?.(text));

  const copy = document.createElement("button");
  copy.type = "button";
  copy.className = "copy-question";
  copy.textContent = "Copy";
  copy.addEventListener("click", () => handlers.onCopy?.(text));

  row.append(ask, copy);
  return row;
}
