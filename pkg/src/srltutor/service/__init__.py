"""HTTP service wrapping the tutoring modules behind a small JSON API."""

from .app import BadRequest, BadToken, NodeInUse, UnknownDocument, create_app
from .config import ENV_PREFIX, PROVIDER_ROLES, BadConfig, ServiceConfig, load_config
from .state import (
    SessionState,
    adopt_tree,
    new_session_state,
    node_slug,
    state_from_document,
    state_to_document,
)
from .store import SessionStore, StoreError, UnknownSession, canonical_json

__all__ = [
    "BadConfig",
    "BadRequest",
    "BadToken",
    "ENV_PREFIX",
    "NodeInUse",
    "PROVIDER_ROLES",
    "ServiceConfig",
    "SessionState",
    "SessionStore",
    "StoreError",
    "UnknownDocument",
    "UnknownSession",
    "adopt_tree",
    "canonical_json",
    "create_app",
    "load_config",
    "new_session_state",
    "node_slug",
    "state_from_document",
    "state_to_document",
]
