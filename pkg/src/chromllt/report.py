from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any, Optional


@dataclass
class RelationReport:
    """Outcome of one relation or property check.

    ``identity_ok`` is only meaningful when ``hypothesis_ok`` is true, except
    for deliberately probed counterexamples where both are recorded.
    ``status`` is ``"ok"``, ``"failed"``, ``"hypothesis-failed"`` or
    ``"invalid-area"``.
    """

    relation: str
    params: dict
    hypothesis_ok: bool
    identity_ok: Optional[bool]
    witness: Optional[Any] = None
    detail: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        if self.detail.get("invalid_area"):
            return "invalid-area"
        if not self.hypothesis_ok:
            return "hypothesis-failed"
        return "ok" if self.identity_ok else "failed"

    @property
    def passed(self) -> bool:
        return self.status == "ok"

    def to_json(self) -> dict:
        d = asdict(self)
        d["status"] = self.status
        return d
