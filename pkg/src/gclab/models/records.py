"""Structured check records emitted by ``--records``."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any

SCHEMA_VERSION = 1

VERDICT_PASS = "pass"
VERDICT_FAIL = "fail"
VERDICT_INFO = "info"
VERDICT_UNDECIDED = "undecided"


@dataclass(slots=True)
class Record:
    """One result line: what was checked, on which inputs, by which formula, with what outcome."""

    check: str
    inputs: dict[str, Any] = field(default_factory=dict)
    formula: str = ""
    verdict: str = VERDICT_INFO
    witness: Any = None
    schema_version: int = SCHEMA_VERSION

    def to_dict(self) -> dict[str, Any]:
        data = asdict(self)
        # schema_version leads every line
        return {"schema_version": data.pop("schema_version"), **data}


def verdict_of(passed: bool) -> str:
    return VERDICT_PASS if passed else VERDICT_FAIL
