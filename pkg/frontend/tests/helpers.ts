/** Fetch-level fake backend: routes, canned payloads, and call recording. */

import type { FetchLike } from "../src/api.js";
import type {
  ChatPayload,
  GraphDocument,
  LayoutPayload,
  PathPayload,
  StatsPayload,
} from "../src/types.js";

export interface RecordedCall {
  method: string;
  path: string;
  query: URLSearchParams;
  body: any;
  headers: Record<string, string>;
}

export type RouteReply = { status: number; body: unknown };

export type RouteHandler = (call: RecordedCall) => RouteReply | unknown;

interface Route {
  method: string;
  matcher: RegExp;
  handler: RouteHandler;
}

export class FakeBackend {
  calls: RecordedCall[] = [];
  private routes: Route[] = [];

  /** Register a handler; string patterns match the whole path exactly. */
  route(method: string, pattern: string | RegExp, handler: RouteHandler): this {
    const matcher =
      typeof pattern === "string"
        ? new RegExp(`^${pattern.replace(/[.*+?^${}()|[\]\\]/g, "\\$&")}$`)
        : pattern;
    this.routes.push({ method: method.toUpperCase(), matcher, handler });
    return this;
  }

  callsTo(method: string, pattern: string | RegExp): RecordedCall[] {
    const matcher =
      typeof pattern === "string"
        ? new RegExp(`^${pattern.replace(/[.*+?^${}()|[\]\\]/g, "\\$&")}$`)
        : pattern;
    return this.calls.filter(
      (c) => c.method === method.toUpperCase() && matcher.test(c.path),
    );
  }

  fetch: FetchLike = async (url, init) => {
    const parsed = new URL(url, "http://fake");
    const method = (init?.method ?? "GET").toUpperCase();
    const headers: Record<string, string> = {};
    for (const [key, value] of Object.entries(init?.headers ?? {})) {
      headers[key.toLowerCase()] = value as string;
    }
    const call: RecordedCall = {
      method,
      path: parsed.pathname,
      query: parsed.searchParams,
      body: init?.body ? JSON.parse(init.body as string) : undefined,
      headers,
    };
    this.calls.push(call);

    const route = this.routes.find(
      (r) => r.method === method && r.matcher.test(parsed.pathname),
    );
    if (!route) {
      return jsonResponse(404, { error: "NotFound", detail: `no route for ${method} ${parsed.pathname}` });
    }
    const result = route.handler(call);
    const reply: RouteReply =
      result && typeof result === "object" && "status" in (result as any) && "body" in (result as any)
        ? (result as RouteReply)
        : { status: 200, body: result };
    return jsonResponse(reply.status, reply.body);
  };
}

function jsonResponse(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

// -- canned payloads ----------------------------------------------------

export const TAXONOMY = [
  "recall",
  "comprehension",
  "application",
  "analysis",
  "synthesis",
  "evaluation",
  "transfer",
  "creation",
];

export const RELATION_KINDS = ["prerequisite", "part_of", "applies_to", "contrasts_with"];

export const SESSION_BODY = {
  session: "ab12cd34ef56ab12",
  stage: "forethought",
  cycle: 1,
  graph_version: 0,
  documents: [],
  goals: [],
  created: 1700000000.0,
  updated: 1700000000.0,
  token: "f00dfeedf00dfeedf00dfeedf00dfeed",
};

export function graphDocument(
  nodes: GraphDocument["nodes"],
  edges: GraphDocument["edges"],
): GraphDocument {
  return {
    format: "srltutor-graph",
    version: 1,
    taxonomy: TAXONOMY,
    relation_kinds: RELATION_KINDS,
    nodes,
    edges,
  };
}

/** Ten nodes spanning all eight levels with distinct importances. */
export function tenNodeGraph(): GraphDocument {
  return graphDocument(
    [
      { id: "sets", name: "Sets", level: 1, importance: 1.0 },
      { id: "maps", name: "Maps", level: 2, importance: 0.9 },
      { id: "orders", name: "Orders", level: 2, importance: 0.55 },
      { id: "groups", name: "Groups", level: 3, importance: 0.85 },
      { id: "lattices", name: "Lattices", level: 3, importance: 0.45 },
      { id: "rings", name: "Rings", level: 4, importance: 0.7 },
      { id: "fields", name: "Fields", level: 5, importance: 0.6 },
      { id: "modules", name: "Modules", level: 6, importance: 0.5 },
      { id: "algebras", name: "Algebras", level: 7, importance: 0.35 },
      { id: "categories", name: "Categories", level: 8, importance: 0.2 },
    ],
    [
      { source: "sets", target: "maps", kind: "prerequisite", level: 2 },
      { source: "sets", target: "orders", kind: "prerequisite", level: 2 },
      { source: "maps", target: "groups", kind: "prerequisite", level: 3 },
      { source: "orders", target: "lattices", kind: "prerequisite", level: 3 },
      { source: "groups", target: "rings", kind: "prerequisite", level: 4 },
      { source: "rings", target: "fields", kind: "prerequisite", level: 5 },
      { source: "rings", target: "modules", kind: "prerequisite", level: 6 },
      { source: "modules", target: "algebras", kind: "prerequisite", level: 7 },
      { source: "algebras", target: "categories", kind: "prerequisite", level: 8 },
    ],
  );
}

/** A plausible layered layout for tenNodeGraph: x by depth, y spread. */
export function tenNodeLayout(): LayoutPayload {
  return {
    style: "layered",
    positions: {
      sets: [0, 1],
      maps: [1, 0],
      orders: [1, 2],
      groups: [2, 0],
      lattices: [2, 2],
      rings: [3, 0],
      fields: [4, 0],
      modules: [4, 1],
      algebras: [5, 1],
      categories: [6, 1],
    },
  };
}

export function chatReply(overrides: Partial<ChatPayload> = {}): ChatPayload {
  return {
    sections: {
      interpretation: "A ring generalizes integer arithmetic.",
      key_points: "First, it has two operations. Second, addition forms a group.",
      example: "For instance, the integers form a ring.",
      summary: "In summary, rings sit between groups and fields.",
    },
    relation_suggestions: [
      { source: "groups", target: "rings", kind: "prerequisite", level: 4 },
      { source: "rings", target: "fields", kind: "prerequisite", level: 5 },
    ],
    raw: "[Interpretation]\nA ring generalizes integer arithmetic.\n",
    ...overrides,
  };
}

export function pathFixture(): PathPayload {
  return {
    stage: "performance",
    cycle: 1,
    revised_through: 0,
    milestones: [
      { node: "sets", name: "Sets", level: 1, importance: 1.0, time_pos: 0.25, status: "done" },
      { node: "groups", name: "Groups", level: 3, importance: 0.85, time_pos: 0.5, status: "pending" },
      { node: "rings", name: "Rings", level: 4, importance: 0.7, time_pos: 0.75, status: "pending" },
      { node: "rings", name: "Rings", level: 4, importance: 0.7, time_pos: 1.0, status: "reinforce" },
    ],
  };
}

export function statsFixture(): StatsPayload {
  return {
    before: { "1": 1, "2": 0, "3": 1, "4": 1, "5": 0, "6": 0, "7": 0, "8": 0 },
    after: { "1": 1, "2": 0, "3": 1, "4": 2, "5": 0, "6": 0, "7": 0, "8": 0 },
  };
}

/** Shorthand for the session-scoped API path prefix. */
export function sessionPath(suffix = ""): string {
  return `/v1/sessions/${SESSION_BODY.session}${suffix}`;
}
