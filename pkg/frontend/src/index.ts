export { ApiClient, ApiError } from "./api.js";
export type { ApiClientOptions, FetchLike } from "./api.js";
export { TutorApp } from "./app.js";
export type { AppPanels } from "./app.js";
export { renderReply, renderUserTurn } from "./chat.js";
export type { ChatHandlers, ChatOptions } from "./chat.js";
export { DEFAULT_CONNECTIVES, markConnectives } from "./connectives.js";
export type { TextSegment } from "./connectives.js";
export {
  LEVEL_COUNT,
  LEVEL_PALETTE,
  MAX_FLAG_HEIGHT,
  MAX_NODE_RADIUS,
  fitPositions,
  flagHeight,
  levelColor,
  nodeRadius,
} from "./encoding.js";
export { renderMindMap } from "./mindmap.js";
export type { MindMapHandlers, MindMapOptions } from "./mindmap.js";
export { renderLearningPath, statsElement } from "./path.js";
export type { PathHandlers } from "./path.js";
export { renderPreview } from "./preview.js";
export type { PreviewHandlers } from "./preview.js";
export { renderQuestionPanel } from "./questions.js";
export type { QuestionHandlers } from "./questions.js";
export type * from "./types.js";
