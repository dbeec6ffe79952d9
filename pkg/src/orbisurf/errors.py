"""Exception type shared by all modules."""

from __future__ import annotations


class OrbisurfError(ValueError):
    """A domain precondition failed.

    ``module`` names the subsystem that raised; the CLI reports it verbatim.
    """

    def __init__(self, module: str, detail: str):
        super().__init__(f"{module}: {detail}")
        self.module = module
        self.detail = detail

    def to_json(self) -> dict:
        return {"error": type(self).__name__, "module": self.module, "detail": self.detail}
