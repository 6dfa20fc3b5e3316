"""HTTP surface under /v1, composing graph, SRL, ingestion, and gateway.

Every error body is {"error": <module error name>, "detail": <message>};
provider failures add retry info. Mutating calls need the session token and
may carry a client request id for idempotent retries. Work for one session
is serialized by a per-session lock, but provider calls never run under it.
"""

from __future__ import annotations

import secrets
import time
from dataclasses import replace

from fastapi import FastAPI, Header, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

from ..errors import SrlTutorError
from ..gateway import (
    IncompleteCoverage,
    MalformedReply,
    ProviderError,
    RetriesExhausted,
    Timeout,
    WrongScenario,
    parse_structured_reply,
    render_prompt,
)
from ..gateway.provider import BadConversation, gateway_from_dict
from ..gateway.tasks import recommend_questions
from ..graph import (
    CycleWouldForm,
    CyclicGraph,
    DuplicateEdge,
    InvalidNode,
    InvalidRelation,
    UnknownEdge,
    UnknownNode,
    graph_from_document,
    graph_to_document,
    layout_concentric,
    layout_layered,
    mutate_graph,
    summarize_note,
)
from ..graph.wordcloud import EmptyNote, load_default_stopwords, load_stopwords
from ..ingestion import (
    BadTreeDocument,
    EmptyDocument,
    EncodingError,
    MalformedExtraction,
    UnsupportedFormat,
    build_knowledge_cards,
    cards_to_dict,
    document_to_dict,
    extract_knowledge_tree,
    format_for_filename,
    parse_document,
    tree_to_dict,
)
from ..levels import InvalidLevel, InvalidTaxonomy
from ..srl import (
    AssessmentResult,
    IllegalTransition,
    NoAssessments,
    NoProgress,
    NoSnapshot,
    UnknownGoal,
    WrongStage,
    advance_stage,
    complete_milestone,
    path_stats,
    plan_path,
    record_assessment,
    revise_learning_path,
)
from ..srl.session import BadSessionDocument
from .config import PROVIDER_ROLES, ServiceConfig
from .state import SessionState, adopt_tree, new_session_state, state_from_document, state_to_document
from .store import SessionStore, StoreError, UnknownSession


class BadRequest(SrlTutorError):
    pass


class BadToken(SrlTutorError):
    pass


class UnknownDocument(SrlTutorError):
    pass


class NodeInUse(SrlTutorError):
    pass


_STATUS_RULES: tuple[tuple[type, int], ...] = (
    (BadToken, 401),
    (UnknownSession, 404),
    (UnknownDocument, 404),
    (UnknownNode, 404),
    (UnknownEdge, 404),
    (UnknownGoal, 404),
    (NodeInUse, 409),
    (IllegalTransition, 409),
    (NoProgress, 409),
    (WrongStage, 409),
    (NoAssessments, 409),
    (NoSnapshot, 409),
    (CycleWouldForm, 409),
    (DuplicateEdge, 409),
    (CyclicGraph, 409),
    (RetriesExhausted, 502),
    (ProviderError, 502),
    (Timeout, 502),
    (MalformedReply, 502),
    (WrongScenario, 502),
    (MalformedExtraction, 502),
    (IncompleteCoverage, 502),
    (StoreError, 500),
    (BadSessionDocument, 500),
    (BadRequest, 400),
    (InvalidLevel, 400),
    (InvalidTaxonomy, 400),
    (InvalidNode, 400),
    (InvalidRelation, 400),
    (EncodingError, 400),
    (EmptyDocument, 400),
    (UnsupportedFormat, 400),
    (BadTreeDocument, 400),
    (EmptyNote, 400),
    (BadConversation, 400),
    (SrlTutorError, 400),
    (ValueError, 400),
)


def _error_response(exc: Exception) -> JSONResponse:
    status = next(code for kind, code in _STATUS_RULES if isinstance(exc, kind))
    body: dict = {"error": type(exc).__name__, "detail": str(exc)}
    if status == 502:
        body["retryable"] = True
        if isinstance(exc, (RetriesExhausted, MalformedExtraction)):
            body["attempts"] = exc.attempts
        if isinstance(exc, IncompleteCoverage):
            body["missing"] = list(exc.missing)
    return JSONResponse(status_code=status, content=body)


def _require(payload: dict, name: str, kind: type = str):
    value = payload.get(name)
    if isinstance(value, bool) and kind is not bool:
        raise BadRequest(f"body field {name!r} must be a {kind.__name__}")
    if not isinstance(value, kind):
        raise BadRequest(f"body field {name!r} must be a {kind.__name__}")
    if kind is str and not value.strip():
        raise BadRequest(f"body field {name!r} must be nonempty")
    return value


def _session_body(state: SessionState) -> dict:
    return {
        "session": state.id,
        "stage": state.srl.stage,
        "cycle": state.srl.cycle,
        "graph_version": state.graph_version,
        "documents": sorted(state.documents),
        "goals": [{"node": n, "target_level": t} for n, t in state.srl.goals],
        "created": state.srl.created,
        "updated": state.srl.updated,
    }


def _path_body(state: SessionState) -> dict:
    return {
        "stage": state.srl.stage,
        "cycle": state.srl.cycle,
        "revised_through": state.srl.revised_through,
        "milestones": [
            {
                "node": m.node_id,
                "name": state.graph.node(m.node_id).name,
                "level": m.level,
                "importance": m.importance,
                "time_pos": m.time_pos,
                "status": m.status,
            }
            for m in state.srl.path
        ],
    }


def _graph_body(state: SessionState) -> dict:
    return {"graph_version": state.graph_version, "graph": graph_to_document(state.graph)}


def _material_body(doc_id: str, state: SessionState) -> dict:
    document = state.documents[doc_id]
    return {
        "document": doc_id,
        "title": document.title,
        "format": document.format,
        "sections": len(document.sections),
        "tree": tree_to_dict(state.trees[doc_id]),
        "cards": cards_to_dict(state.cards[doc_id]),
    }


def create_app(config: ServiceConfig, clock=time.time) -> FastAPI:
    store = SessionStore(config.data_dir)
    gateways = {role: gateway_from_dict(config.provider(role)) for role in PROVIDER_ROLES}
    stopwords = (
        load_stopwords(config.stopword_path)
        if config.stopword_path
        else load_default_stopwords()
    )

    app = FastAPI(title="srltutor", version="1")
    app.state.store = store
    app.state.gateways = gateways

    @app.exception_handler(SrlTutorError)
    def _on_module_error(request: Request, exc: SrlTutorError):
        return _error_response(exc)

    @app.exception_handler(ValueError)
    def _on_value_error(request: Request, exc: ValueError):
        return _error_response(exc)

    @app.exception_handler(RequestValidationError)
    def _on_bad_body(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"error": "BadRequest", "detail": "request body is not valid JSON"},
        )

    @app.exception_handler(StarletteHTTPException)
    def _on_http_error(request: Request, exc: StarletteHTTPException):
        names = {404: "NotFound", 405: "MethodNotAllowed"}
        return JSONResponse(
            status_code=exc.status_code,
            content={"error": names.get(exc.status_code, "HttpError"), "detail": str(exc.detail)},
        )

    def load_state(session_id: str) -> SessionState:
        return state_from_document(store.load(session_id), clock)

    def save_state(state: SessionState) -> None:
        store.save(state.id, state_to_document(state))

    def authorize(state: SessionState, token: str | None) -> None:
        if not token or token != state.token:
            raise BadToken("missing or wrong session token")

    def mutate(session_id, token, payload, apply, status=200):
        """Load, authorize, replay or apply, persist, all under the lock."""
        request_id = payload.get("request_id")
        with store.lock(session_id):
            state = load_state(session_id)
            authorize(state, token)
            if request_id and request_id in state.requests:
                cached = state.requests[request_id]
                return JSONResponse(status_code=cached["status"], content=cached["body"])
            body = apply(state)
            if request_id:
                state.requests[request_id] = {"status": status, "body": body}
            save_state(state)
            return JSONResponse(status_code=status, content=body)

    # -- sessions ---------------------------------------------------------

    @app.post("/v1/sessions", status_code=201)
    def create_session():
        session_id = secrets.token_hex(8)
        while store.exists(session_id):
            session_id = secrets.token_hex(8)
        state = new_session_state(
            session_id,
            secrets.token_hex(16),
            config.taxonomy(),
            tuple(config.relation_kinds),
            clock,
        )
        with store.lock(session_id):
            save_state(state)
        return {**_session_body(state), "token": state.token}

    @app.get("/v1/sessions/{session_id}")
    def get_session(session_id: str):
        return _session_body(load_state(session_id))

    # -- materials --------------------------------------------------------

    @app.post("/v1/sessions/{session_id}/materials", status_code=201)
    def upload_material(
        session_id: str,
        payload: dict,
        x_session_token: str | None = Header(default=None),
    ):
        filename = _require(payload, "filename")
        content = _require(payload, "content")
        request_id = payload.get("request_id")

        with store.lock(session_id):
            state = load_state(session_id)
            authorize(state, x_session_token)
            if request_id and request_id in state.requests:
                cached = state.requests[request_id]
                return JSONResponse(status_code=cached["status"], content=cached["body"])

        # extraction happens outside the session lock
        document = parse_document(
            content.encode("utf-8"), format_for_filename(filename), doc_id="pending"
        )
        tree = extract_knowledge_tree(document, gateways["extractor"])
        cards = build_knowledge_cards(tree, document, gateways["extractor"])

        def apply(state: SessionState) -> dict:
            doc_id = f"d{len(state.documents) + 1}"
            state.documents[doc_id] = replace(document, id=doc_id)
            state.trees[doc_id] = tree
            state.cards[doc_id] = cards
            return _material_body(doc_id, state)

        return mutate(session_id, x_session_token, payload, apply, status=201)

    @app.get("/v1/sessions/{session_id}/materials")
    def list_materials(session_id: str):
        state = load_state(session_id)
        return {
            "documents": [
                {"document": doc_id, "title": doc.title, "format": doc.format}
                for doc_id, doc in sorted(state.documents.items())
            ]
        }

    @app.get("/v1/sessions/{session_id}/materials/{doc_id}")
    def get_material(session_id: str, doc_id: str):
        state = load_state(session_id)
        if doc_id not in state.documents:
            raise UnknownDocument(f"unknown document {doc_id!r}")
        body = _material_body(doc_id, state)
        body["content"] = document_to_dict(state.documents[doc_id])
        return body

    # -- graph ------------------------------------------------------------

    @app.get("/v1/sessions/{session_id}/graph")
    def get_graph(session_id: str):
        return _graph_body(load_state(session_id))

    @app.post("/v1/sessions/{session_id}/graph")
    def post_graph(
        session_id: str,
        payload: dict,
        x_session_token: str | None = Header(default=None),
    ):
        def apply(state: SessionState) -> dict:
            if "adopt_tree" in payload:
                doc_id = _require(payload, "adopt_tree")
                if doc_id not in state.trees:
                    raise UnknownDocument(f"unknown document {doc_id!r}")
                state.set_graph(adopt_tree(state.graph, state.trees[doc_id]))
            elif "graph" in payload:
                state.set_graph(graph_from_document(_require(payload, "graph", dict)))
            else:
                raise BadRequest("body must carry either 'graph' or 'adopt_tree'")
            return _graph_body(state)

        return mutate(session_id, x_session_token, payload, apply)

    def _graph_mutation(kind: str):
        def endpoint(
            session_id: str,
            payload: dict,
            x_session_token: str | None = Header(default=None),
        ):
            def apply(state: SessionState) -> dict:
                op = _require(payload, "op")
                if op not in ("add", "edit", "remove"):
                    raise BadRequest(f"op must be add, edit, or remove, not {op!r}")
                if kind == "node" and op == "remove":
                    node_id = _require(payload, "id")
                    on_path = {m.node_id for m in state.srl.path}
                    on_path.update(node for node, _ in state.srl.goals)
                    if node_id in on_path:
                        raise NodeInUse(f"node {node_id!r} is on the learning path")
                fields = {
                    k: v for k, v in payload.items() if k not in ("op", "request_id")
                }
                try:
                    state.set_graph(mutate_graph(state.graph, f"{op}_{kind}", fields))
                except KeyError as exc:
                    raise BadRequest(f"missing body field {exc.args[0]!r}") from None
                return _graph_body(state)

            return mutate(session_id, x_session_token, payload, apply)

        return endpoint

    app.post("/v1/sessions/{session_id}/graph/nodes")(_graph_mutation("node"))
    app.post("/v1/sessions/{session_id}/graph/edges")(_graph_mutation("edge"))

    @app.get("/v1/sessions/{session_id}/graph/layout")
    def get_layout(session_id: str, style: str = "layered"):
        state = load_state(session_id)
        if style == "layered":
            result = layout_layered(state.graph)
        elif style == "concentric":
            result = layout_concentric(state.graph)
        else:
            raise BadRequest(f"unknown layout style {style!r}")
        return {
            "style": result.style,
            "positions": {n: [x, y] for n, (x, y) in result.positions.items()},
        }

    # -- chat and questions ----------------------------------------------

    @app.post("/v1/sessions/{session_id}/chat")
    def chat(
        session_id: str,
        payload: dict,
        x_session_token: str | None = Header(default=None),
    ):
        state = load_state(session_id)
        authorize(state, x_session_token)
        context = {"question": _require(payload, "question")}
        if payload.get("material"):
            context["material"] = _require(payload, "material")
        turns = render_prompt("open_ended_qa", context)
        last: MalformedReply | None = None
        for _ in range(2):
            text = gateways["tutor"].complete(turns)
            try:
                reply = parse_structured_reply(text, "open_ended_qa")
            except MalformedReply as exc:
                last = exc
                continue
            return {
                "sections": reply.sections,
                "relation_suggestions": reply.relations,
                "raw": text,
            }
        raise last

    @app.get("/v1/sessions/{session_id}/questions")
    def questions(session_id: str, node: str, levels: str | None = None):
        state = load_state(session_id)
        point = state.graph.node(node)
        wanted = None
        if levels:
            try:
                wanted = [int(part) for part in levels.split(",") if part.strip()]
            except ValueError:
                raise BadRequest(f"levels {levels!r} must be comma-separated integers") from None
        pairs = recommend_questions(
            gateways["tutor"],
            point.name,
            levels=wanted,
            taxonomy=state.graph.taxonomy.labels,
        )
        return {
            "node": node,
            "questions": [{"level": level, "text": text} for level, text in pairs],
        }

    # -- learning path and SRL stages -------------------------------------

    @app.get("/v1/sessions/{session_id}/path")
    def get_path(session_id: str):
        return _path_body(load_state(session_id))

    @app.post("/v1/sessions/{session_id}/path")
    def post_path(
        session_id: str,
        payload: dict,
        x_session_token: str | None = Header(default=None),
    ):
        def apply(state: SessionState) -> dict:
            op = _require(payload, "op")
            if op == "generate":
                raw_goals = _require(payload, "goals", list)
                goals = []
                for entry in raw_goals:
                    if isinstance(entry, str):
                        goals.append(entry)
                    elif isinstance(entry, dict) and "node" in entry:
                        if "target_level" in entry:
                            goals.append((entry["node"], entry["target_level"]))
                        else:
                            goals.append(entry["node"])
                    else:
                        raise BadRequest("each goal must be a node id or {node, target_level}")
                plan_path(state.srl, goals)
            elif op == "complete":
                complete_milestone(state.srl, _require(payload, "node"))
            elif op == "revise":
                revise_learning_path(state.srl)
            else:
                raise BadRequest(f"op must be generate, complete, or revise, not {op!r}")
            return _path_body(state)

        return mutate(session_id, x_session_token, payload, apply)

    @app.post("/v1/sessions/{session_id}/stage")
    def post_stage(
        session_id: str,
        payload: dict,
        x_session_token: str | None = Header(default=None),
    ):
        def apply(state: SessionState) -> dict:
            advance_stage(state.srl, _require(payload, "to"))
            return {"stage": state.srl.stage, "cycle": state.srl.cycle}

        return mutate(session_id, x_session_token, payload, apply)

    @app.post("/v1/sessions/{session_id}/assessment")
    def post_assessment(
        session_id: str,
        payload: dict,
        x_session_token: str | None = Header(default=None),
    ):
        def apply(state: SessionState) -> dict:
            entries = _require(payload, "results", list)
            if not entries:
                raise BadRequest("results must be a nonempty list")
            for entry in entries:
                if not isinstance(entry, dict):
                    raise BadRequest("each result must be an object")
                record_assessment(
                    state.srl,
                    AssessmentResult(
                        node_id=_require(entry, "node"),
                        question_id=_require(entry, "question_id"),
                        chosen=_require(entry, "chosen", int),
                        correct=_require(entry, "correct", bool),
                        explanation_shown=entry.get("explanation_shown", False),
                        option_count=entry.get("option_count", 4),
                    ),
                )
            return {
                "recorded": len(entries),
                "total": len(state.srl.assessments),
            }

        return mutate(session_id, x_session_token, payload, apply)

    @app.get("/v1/sessions/{session_id}/path/stats")
    def get_path_stats(session_id: str):
        before, after = path_stats(load_state(session_id).srl)
        return {
            "before": {str(level): count for level, count in before.items()},
            "after": {str(level): count for level, count in after.items()},
        }

    # -- notes and word clouds --------------------------------------------

    @app.post("/v1/sessions/{session_id}/nodes/{node_id}/note")
    def post_note(
        session_id: str,
        node_id: str,
        payload: dict,
        x_session_token: str | None = Header(default=None),
    ):
        def apply(state: SessionState) -> dict:
            text = _require(payload, "text")
            state.graph.node(node_id)
            cloud = summarize_note(text, config.word_cloud_terms, stopwords)
            state.set_graph(
                state.graph.edit_node(node_id, note=text, word_cloud=tuple(cloud))
            )
            return {
                "node": node_id,
                "word_cloud": [[term, weight] for term, weight in cloud],
            }

        return mutate(session_id, x_session_token, payload, apply)

    return app
