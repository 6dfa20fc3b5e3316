/** Logical-connective highlighting for tutor replies. */

export const DEFAULT_CONNECTIVES: readonly string[] = [
  "For instance",
  "For example",
  "In summary",
  "First",
  "Second",
  "Therefore",
  "In contrast",
  "As a result",
];

export interface TextSegment {
  text: string;
  connective: boolean;
}

/**
 * Split text into plain and connective segments. Longer lexicon entries win
 * over shorter prefixes ("For instance" before "For"), and matches must sit
 * on word boundaries so "Firstly" is left alone.
 */
export function markConnectives(
  text: string,
  lexicon: readonly string[] = DEFAULT_CONNECTIVES,
): TextSegment[] {
  if (!text) return [];
  const terms = [...lexicon].filter(Boolean).sort((a, b) => b.length - a.length);
  if (terms.length === 0) return [{ text, connective: false }];

  const pattern = new RegExp(`\\b(?:${terms.map(escapeRegExp).join("|")})\\b`, "g");
  const segments: TextSegment[] = [];
  let cursor = 0;
  for (const match of text.matchAll(pattern)) {
    const start = match.index ?? 0;
    if (start > cursor) {
      segments.push({ text: text.slice(cursor, start), connective: false });
    }
    segments.push({ text: match[0], connective: true });
    cursor = start + match[0].length;
  }
  if (cursor < text.length) {
    segments.push({ text: text.slice(cursor), connective: false });
  }
  return segments;
}

function escapeRegExp(term: string): string {
  return term.replace(/[.*+?^${}()|[\]\\]/g, "\\$&");
}
