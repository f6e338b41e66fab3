"""Run configuration with environment-aware defaults."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

THREADS_ENV = "GCLAB_THREADS"


def _default_workers() -> int:
    raw = os.environ.get(THREADS_ENV, "").strip()
    if raw.isdigit() and int(raw) > 0:
        return int(raw)
    return 1


@dataclass(slots=True)
class RunConfig:
    workers: int = field(default_factory=_default_workers)
    # fewer columns than this are assembled in-process
    parallel_threshold: int = 64
    loops: bool = True
    seed: int = 0
    cycle_partners: int = 2
