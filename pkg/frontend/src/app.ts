/**
 * Composition root: wires the panels to the API client.
 *
 * The app holds no domain state of its own. Every mutation goes through
 * the API and every panel re-renders from the server's acknowledged
 * state, so the view can never drift ahead of the backend.
 */

import { ApiClient, ApiError } from "./api.js";
import { renderReply, renderUserTurn } from "./chat.js";
import { renderMindMap } from "./mindmap.js";
import { renderLearningPath } from "./path.js";
import { renderPreview } from "./preview.js";
import { renderQuestionPanel } from "./questions.js";
import type { LayoutStyle, RelationRecord, StatsPayload } from "./types.js";

export interface AppPanels {
  mindmap: HTMLElement;
  chatLog: HTMLElement;
  path: HTMLElement;
  questions: HTMLElement;
  preview: HTMLElement;
}

export class TutorApp {
  layoutStyle: LayoutStyle = "layered";
  private goals: string[] = [];
  private taxonomy: string[] = [];

  constructor(
    readonly api: ApiClient,
    readonly panels: AppPanels,
  ) {}

  async start(): Promise<void> {
    await this.api.createSession();
    await this.refreshMindMap();
    await this.refreshPath();
  }

  // -- mind map ---------------------------------------------------------

  async refreshMindMap(): Promise<void> {
    const [graphPayload, layout] = await Promise.all([
      this.api.getGraph(),
      this.api.getLayout(this.layoutStyle),
    ]);
    this.taxonomy = graphPayload.graph.taxonomy;
    renderMindMap(this.panels.mindmap, graphPayload.graph, layout, {
      onToggleLayout: (style) => void this.switchLayout(style),
      onRecommendQuestions: (nodeId) => void this.showQuestions(nodeId),
      onSetGoal: (nodeId) => void this.addGoal(nodeId),
      onTakeNote: (nodeId) => void this.openNote(nodeId),
    });
  }

  async switchLayout(style: LayoutStyle): Promise<void> {
    this.layoutStyle = style;
    await this.refreshMindMap();
  }

  /** Goals accumulate locally until planPath posts them in one generate call. */
  async addGoal(nodeId: string): Promise<void> {
    if (!this.goals.includes(nodeId)) this.goals.push(nodeId);
  }

  async planPath(): Promise<void> {
    await this.api.generatePath(this.goals);
    this.goals = [];
    await this.refreshPath();
  }

  /** Hook point for a note editor; the default posts the text straight through. */
  async openNote(nodeId: string, text?: string): Promise<void> {
    if (text === undefined) return;
    await this.api.saveNote(nodeId, text);
    await this.refreshMindMap();
  }

  // -- chat -------------------------------------------------------------

  async ask(question: string): Promise<void> {
    renderUserTurn(this.panels.chatLog, question);
    const reply = await this.api.chat(question);
    renderReply(this.panels.chatLog, reply, {
      onRelationAccept: (suggestion) => void this.acceptRelation(suggestion),
    });
  }

  /** The relation button's action: one edge mutation, then a map refresh. */
  async acceptRelation(suggestion: RelationRecord): Promise<void> {
    await this.api.addEdge(suggestion);
    await this.refreshMindMap();
  }

  async showQuestions(nodeId: string, levels?: number[]): Promise<void> {
    const payload = await this.api.getQuestions(nodeId, levels);
    renderQuestionPanel(this.panels.questions, payload, this.taxonomy, {
      onAsk: (text) => void this.ask(text),
    });
  }

  // -- materials --------------------------------------------------------

  async upload(filename: string, content: string): Promise<void> {
    const material = await this.api.uploadMaterial(filename, content);
    renderPreview(this.panels.preview, material, {
      onAdopt: (docId) => void this.adopt(docId),
    });
  }

  async adopt(docId: string): Promise<void> {
    await this.api.adoptTree(docId);
    await this.refreshMindMap();
  }

  // -- learning path ----------------------------------------------------

  async refreshPath(): Promise<void> {
    const path = await this.api.getPath();
    let stats: StatsPayload | null = null;
    try {
      stats = await this.api.getPathStats();
    } catch (err) {
      // No snapshot before the first self-reflection; the timeline still renders.
      if (!(err instanceof ApiError && err.code === "NoSnapshot")) throw err;
    }
    renderLearningPath(this.panels.path, path, stats, {
      onReset: () => void this.planPath(),
      onComplete: (nodeId) => void this.complete(nodeId),
      onRevise: () => void this.revise(),
    });
  }

  async complete(nodeId: string): Promise<void> {
    await this.api.completeMilestone(nodeId);
    await this.refreshPath();
  }

  async revise(): Promise<void> {
    await this.api.revisePath();
    await this.refreshPath();
  }
}
