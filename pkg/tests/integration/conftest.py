"""Integration-specific fixtures for end-to-end CLI runs."""

from __future__ import annotations

from pathlib import Path

import pytest

LEDGER = "q:\n  5: 3\n"


@pytest.fixture
def ledger_file(tmp_path: Path) -> Path:
    """A ledger with three copies of every valence-5 vertex."""
    path = tmp_path / "ledger.yaml"
    path.write_text(LEDGER)
    return path
