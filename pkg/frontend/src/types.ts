/** Wire types for the srltutor /v1 API, mirrored field for field. */

export type Stage = "forethought" | "performance" | "self_reflection";

export type MilestoneStatus = "pending" | "done" | "reinforce";

export interface RelationRecord {
  source: string;
  target: string;
  kind: string;
  level: number;
}

export interface GraphNodeRecord {
  id: string;
  name: string;
  level: number;
  importance: number;
  note?: string;
  word_cloud?: [string, number][];
}

export interface GraphDocument {
  format: string;
  version: number;
  taxonomy: string[];
  relation_kinds: string[];
  nodes: GraphNodeRecord[];
  edges: RelationRecord[];
}

export interface GraphPayload {
  graph_version: number;
  graph: GraphDocument;
}

export type LayoutStyle = "layered" | "concentric";

export interface LayoutPayload {
  style: string;
  /** node id -> [x, y] in the layout's own coordinate space */
  positions: Record<string, [number, number]>;
}

export interface GoalRecord {
  node: string;
  target_level: number;
}

export interface SessionPayload {
  session: string;
  stage: Stage;
  cycle: number;
  graph_version: number;
  documents: string[];
  goals: GoalRecord[];
  created: number;
  updated: number;
  /** present only in the creation response */
  token?: string;
}

export type SectionName = "interpretation" | "key_points" | "example" | "summary";

export interface ChatPayload {
  sections: Partial<Record<SectionName, string>>;
  relation_suggestions: RelationRecord[];
  raw: string;
}

export interface QuestionItem {
  level: number;
  text: string;
}

export interface QuestionPayload {
  node: string;
  questions: QuestionItem[];
}

export interface MilestoneRecord {
  node: string;
  name: string;
  level: number;
  importance: number;
  /** relative position on the timeline, 0..1 */
  time_pos: number;
  status: MilestoneStatus;
}

export interface PathPayload {
  stage: Stage;
  cycle: number;
  revised_through: number;
  milestones: MilestoneRecord[];
}

export interface StatsPayload {
  /** level label ("1".."8") -> milestone count */
  before: Record<string, number>;
  after: Record<string, number>;
}

export interface TreeNodePayload {
  name: string;
  level: number;
  importance: number;
  children: TreeNodePayload[];
  span?: [number, number];
}

export interface TreePayload {
  format: string;
  version: number;
  roots: TreeNodePayload[];
}

export interface CardPayload {
  node: string;
  significance: string;
  application: string;
  question_stub: string;
}

export interface CardsPayload {
  format: string;
  version: number;
  cards: CardPayload[];
}

export interface MaterialPayload {
  document: string;
  title: string;
  format: string;
  sections: number;
  tree: TreePayload;
  cards: CardsPayload;
}

export interface NotePayload {
  node: string;
  word_cloud: [string, number][];
}

export interface AssessmentResultBody {
  node: string;
  question_id: string;
  chosen: number;
  correct: boolean;
  explanation_shown?: boolean;
  option_count?: number;
}

export interface ApiErrorBody {
  error: string;
  detail: string;
  retryable?: boolean;
  attempts?: number;
  missing?: number[];
}
