"""Exception types shared across the package."""

from __future__ import annotations

__all__ = ["StructureError", "SingularMapError", "HypothesisError"]


class StructureError(ValueError):
    """Ill-formed input: dimension mismatch, bad degree, invalid parameter.

    Distinct from a mathematical check failing.  The CLI maps this to exit
    status 2, never to 1.
    """

    def __init__(self, message: str, *, indices=None):
        super().__init__(message)
        self.indices = indices


class SingularMapError(StructureError):
    """A map that must be invertible is singular."""


class HypothesisError(Exception):
    """A construction's stated hypothesis failed its check.

    Carries the violated requirement name and, when one exists, the failing
    Verdict.  The CLI maps this to exit status 1.
    """

    def __init__(self, op: str, requirement: str, verdict=None, detail: str = ""):
        self.op = op
        self.requirement = requirement
        self.verdict = verdict
        self.detail = detail
        msg = f"{op}: hypothesis '{requirement}' failed"
        if detail:
            msg += f" ({detail})"
        witness = getattr(verdict, "witness", None)
        if witness is not None:
            msg += f" [witness: {witness.identity} at {witness.indices}]"
        super().__init__(msg)
