/**
 * Typed client for the srltutor /v1 API.
 *
 * The client owns the session id and token once createSession resolves;
 * every mutation carries the token in X-Session-Token. fetch is injectable
 * so tests can intercept the network layer.
 */

import type {
  ApiErrorBody,
  AssessmentResultBody,
  ChatPayload,
  GraphDocument,
  GraphPayload,
  LayoutPayload,
  LayoutStyle,
  MaterialPayload,
  NotePayload,
  PathPayload,
  QuestionPayload,
  RelationRecord,
  SessionPayload,
  Stage,
  StatsPayload,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    readonly detail: string,
    readonly body: ApiErrorBody,
  ) {
    super(`${code}: ${detail}`);
    this.name = "ApiError";
  }
}

export interface ApiClientOptions {
  fetchFn?: FetchLike;
}

interface RequestOptions {
  body?: Record<string, unknown>;
  query?: Record<string, string>;
}

export class ApiClient {
  private readonly fetchFn: FetchLike;
  private token: string | null = null;
  sessionId: string | null = null;

  constructor(
    readonly baseUrl: string = "",
    options: ApiClientOptions = {},
  ) {
    this.fetchFn = options.fetchFn ?? ((url, init) => fetch(url, init));
  }

  // -- session ----------------------------------------------------------

  async createSession(): Promise<SessionPayload> {
    const body = await this.request<SessionPayload>("POST", "/v1/sessions");
    this.sessionId = body.session;
    this.token = body.token ?? null;
    return body;
  }

  /** Attach to an existing session instead of creating one. */
  resume(sessionId: string, token: string): void {
    this.sessionId = sessionId;
    this.token = token;
  }

  getSession(): Promise<SessionPayload> {
    return this.request("GET", this.sessionPath(""));
  }

  // -- materials --------------------------------------------------------

  uploadMaterial(
    filename: string,
    content: string,
    requestId?: string,
  ): Promise<MaterialPayload> {
    const body: Record<string, unknown> = { filename, content };
    if (requestId) body.request_id = requestId;
    return this.request("POST", this.sessionPath("/materials"), { body });
  }

  listMaterials(): Promise<{ documents: MaterialPayload[] }> {
    return this.request("GET", this.sessionPath("/materials"));
  }

  getMaterial(docId: string): Promise<MaterialPayload> {
    return this.request("GET", this.sessionPath(`/materials/${docId}`));
  }

  // -- graph ------------------------------------------------------------

  getGraph(): Promise<GraphPayload> {
    return this.request("GET", this.sessionPath("/graph"));
  }

  adoptTree(docId: string, requestId?: string): Promise<GraphPayload> {
    const body: Record<string, unknown> = { adopt_tree: docId };
    if (requestId) body.request_id = requestId;
    return this.request("POST", this.sessionPath("/graph"), { body });
  }

  replaceGraph(graph: GraphDocument, requestId?: string): Promise<GraphPayload> {
    const body: Record<string, unknown> = { graph };
    if (requestId) body.request_id = requestId;
    return this.request("POST", this.sessionPath("/graph"), { body });
  }

  mutateNode(
    op: "add" | "edit" | "remove",
    fields: Record<string, unknown>,
    requestId?: string,
  ): Promise<GraphPayload> {
    const body: Record<string, unknown> = { op, ...fields };
    if (requestId) body.request_id = requestId;
    return this.request("POST", this.sessionPath("/graph/nodes"), { body });
  }

  addEdge(relation: RelationRecord, requestId?: string): Promise<GraphPayload> {
    const body: Record<string, unknown> = { op: "add", ...relation };
    if (requestId) body.request_id = requestId;
    return this.request("POST", this.sessionPath("/graph/edges"), { body });
  }

  mutateEdge(
    op: "add" | "edit" | "remove",
    fields: Record<string, unknown>,
    requestId?: string,
  ): Promise<GraphPayload> {
    const body: Record<string, unknown> = { op, ...fields };
    if (requestId) body.request_id = requestId;
    return this.request("POST", this.sessionPath("/graph/edges"), { body });
  }

  getLayout(style: LayoutStyle): Promise<LayoutPayload> {
    return this.request("GET", this.sessionPath("/graph/layout"), {
      query: { style },
    });
  }

  // -- chat and questions -----------------------------------------------

  chat(question: string, material?: string): Promise<ChatPayload> {
    const body: Record<string, unknown> = { question };
    if (material !== undefined) body.material = material;
    return this.request("POST", this.sessionPath("/chat"), { body });
  }

  getQuestions(node: string, levels?: number[]): Promise<QuestionPayload> {
    const query: Record<string, string> = { node };
    if (levels && levels.length > 0) query.levels = levels.join(",");
    return this.request("GET", this.sessionPath("/questions"), { query });
  }

  // -- learning path ----------------------------------------------------

  getPath(): Promise<PathPayload> {
    return this.request("GET", this.sessionPath("/path"));
  }

  generatePath(
    goals: (string | { node: string; target_level?: number })[],
    requestId?: string,
  ): Promise<PathPayload> {
    const body: Record<string, unknown> = { op: "generate", goals };
    if (requestId) body.request_id = requestId;
    return this.request("POST", this.sessionPath("/path"), { body });
  }

  completeMilestone(node: string, requestId?: string): Promise<PathPayload> {
    const body: Record<string, unknown> = { op: "complete", node };
    if (requestId) body.request_id = requestId;
    return this.request("POST", this.sessionPath("/path"), { body });
  }

  revisePath(requestId?: string): Promise<PathPayload> {
    const body: Record<string, unknown> = { op: "revise" };
    if (requestId) body.request_id = requestId;
    return this.request("POST", this.sessionPath("/path"), { body });
  }

  advanceStage(stage: Stage, requestId?: string): Promise<{ stage: Stage; cycle: number }> {
    const body: Record<string, unknown> = { stage };
    if (requestId) body.request_id = requestId;
    return this.request("POST", this.sessionPath("/stage"), { body });
  }

  recordAssessment(
    results: AssessmentResultBody[],
    requestId?: string,
  ): Promise<{ recorded: number; total: number }> {
    const body: Record<string, unknown> = { results };
    if (requestId) body.request_id = requestId;
    return this.request("POST", this.sessionPath("/assessment"), { body });
  }

  getPathStats(): Promise<StatsPayload> {
    return this.request("GET", this.sessionPath("/path/stats"));
  }

  // -- notes ------------------------------------------------------------

  saveNote(nodeId: string, text: string, requestId?: string): Promise<NotePayload> {
    const body: Record<string, unknown> = { text };
    if (requestId) body.request_id = requestId;
    return this.request("POST", this.sessionPath(`/nodes/${nodeId}/note`), { body });
  }

  // -- plumbing ---------------------------------------------------------

  private sessionPath(suffix: string): string {
    if (!this.sessionId) {
      throw new Error("no session: call createSession() or resume() first");
    }
    return `/v1/sessions/${this.sessionId}${suffix}`;
  }

  private async request<T>(
    method: "GET" | "POST",
    path: string,
    options: RequestOptions = {},
  ): Promise<T> {
    let url = this.baseUrl + path;
    if (options.query) {
      url += `?${new URLSearchParams(options.query)}`;
    }
    const init: RequestInit = { method, headers: {} };
    const headers = init.headers as Record<string, string>;
    if (method === "POST") {
      if (this.token) headers["X-Session-Token"] = this.token;
      headers["Content-Type"] = "application/json";
      init.body = JSON.stringify(options.body ?? {});
    }
    const response = await this.fetchFn(url, init);
    const payload = await response.json();
    if (!response.ok) {
      const body = payload as ApiErrorBody;
      throw new ApiError(
        response.status,
        body.error ?? "UnknownError",
        body.detail ?? response.statusText,
        body,
      );
    }
    return payload as T;
  }
}
