import { describe, expect, it } from "vitest";

import { DEFAULT_CONNECTIVES, markConnectives } from "../src/connectives.js";

describe("markConnectives", () => {
  it("splits text around lexicon hits", () => {
    const segments = markConnectives("For instance, rings. Therefore, fields.");
    expect(segments).toEqual([
      { text: "For instance", connective: true },
      { text: ", rings. ", connective: false },
      { text: "Therefore", connective: true },
      { text: ", fields.", connective: false },
    ]);
  });

  it("reassembles to the original text", () => {
    const text = "First one thing. Second another. In summary, both.";
    const joined = markConnectives(text)
      .map((s) => s.text)
      .join("");
    expect(joined).toBe(text);
  });

  it("prefers the longest lexicon entry at a position", () => {
    const segments = markConnectives("For instance things happen.", [
      "For",
      "For instance",
    ]);
    expect(segments[0]).toEqual({ text: "For instance", connective: true });
  });

  it("requires word boundaries", () => {
    const segments = markConnectives("Firstly, nothing matches.", ["First"]);
    expect(segments.every((s) => !s.connective)).toBe(true);
  });

  it("handles empty text and empty lexicon", () => {
    expect(markConnectives("")).toEqual([]);
    expect(markConnectives("plain", [])).toEqual([{ text: "plain", connective: false }]);
  });

  it("ships the default lexicon the tutor prompt advertises", () => {
    expect(DEFAULT_CONNECTIVES).toContain("For instance");
    expect(DEFAULT_CONNECTIVES).toContain("In summary");
  });
});
