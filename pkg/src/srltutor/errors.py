"""Common error base for all subsystems.

Every error carries a stable ``code`` (the class name) so API layers can
surface machine-readable error bodies without leaking stack traces.
"""

from __future__ import annotations


class SrlTutorError(Exception):
    """Base class; ``code`` is the concrete class name."""

    @property
    def code(self) -> str:
        return type(self).__name__

    def payload(self) -> dict:
        """Machine-readable form used in API error bodies."""
        return {"code": self.code, "message": str(self)}
