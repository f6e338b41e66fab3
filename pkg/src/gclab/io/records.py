"""JSONL serialization of check records."""

from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction
from pathlib import Path
from typing import Any

import orjson

from gclab.models.records import Record
from gclab.utils import fmt_fraction

_OPTIONS = orjson.OPT_APPEND_NEWLINE | orjson.OPT_NON_STR_KEYS


def _default(value: Any) -> Any:
    if isinstance(value, Fraction):
        return fmt_fraction(value)
    if isinstance(value, (frozenset, set)):
        return sorted(value)
    if hasattr(value, "to_dict"):
        return value.to_dict()
    raise TypeError(f"cannot serialize {type(value).__name__}")


def dumps_record(record: Record) -> bytes:
    return orjson.dumps(record.to_dict(), default=_default, option=_OPTIONS)


def dumps_records(records: Iterable[Record]) -> bytes:
    return b"".join(dumps_record(r) for r in records)


def write_records(path: str | Path, records: Iterable[Record]) -> None:
    Path(path).write_bytes(dumps_records(records))


def read_records(path: str | Path) -> list[dict[str, Any]]:
    """Parse a JSONL record file, skipping blank lines."""
    out: list[dict[str, Any]] = []
    for line in Path(path).read_bytes().splitlines():
        if line.strip():
            out.append(orjson.loads(line))
    return out
