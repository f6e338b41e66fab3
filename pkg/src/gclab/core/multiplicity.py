"""Multiplicities m_l of l-valent brackets and their boundary lcm mu_l.

m_3 = 1, m_4 = 4 and m_l = l * q_l * r_l * mu_l for l >= 5, where mu_l is the lcm of
m_{p+1} m_{q+1} over p + q = l with p, q >= 2.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Any

import yaml

from gclab.core.errors import LedgerError
from gclab.models.ledger import Monomial, MultiplicityLedger


def _check(leaves: int) -> None:
    if leaves < 3:
        raise LedgerError(f"multiplicities start at l = 3, got {leaves}")


def _pairs(leaves: int) -> list[tuple[int, int]]:
    return [(p, leaves - p) for p in range(2, leaves - 1)]


@lru_cache(maxsize=None)
def symbolic_multiplicity(leaves: int) -> Monomial:
    _check(leaves)
    if leaves == 3:
        return Monomial(1)
    if leaves == 4:
        return Monomial(4)
    return (
        Monomial(leaves)
        * Monomial.symbol(f"q{leaves}")
        * Monomial.symbol(f"r{leaves}")
        * symbolic_boundary(leaves)
    )


@lru_cache(maxsize=None)
def symbolic_boundary(leaves: int) -> Monomial:
    _check(leaves)
    out = Monomial(1)
    for p, q in _pairs(leaves):
        out = out.lcm(symbolic_multiplicity(p + 1) * symbolic_multiplicity(q + 1))
    return out


def numeric_multiplicities(up_to: int, ledger: MultiplicityLedger) -> dict[int, int]:
    """Exact m_l for 3 <= l <= up_to, with the true integer lcm at each step."""
    _check(up_to)
    values = {3: 1, 4: 4}
    for leaves in range(5, up_to + 1):
        values[leaves] = (
            leaves
            * ledger.q.get(leaves, 1)
            * ledger.r.get(leaves, 1)
            * numeric_boundary(leaves, values)
        )
    return {leaves: values[leaves] for leaves in range(3, up_to + 1)}


def numeric_boundary(leaves: int, multiplicities: dict[int, int]) -> int:
    products = (multiplicities[p + 1] * multiplicities[q + 1] for p, q in _pairs(leaves))
    return math.lcm(1, *products)


@dataclass(slots=True)
class MultiplicityResult:
    leaves: int
    symbolic: str
    symbolic_boundary: str
    value: int
    boundary: int
    n_top: int
    parameters: dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def multiplicity(leaves: int, ledger: MultiplicityLedger | None = None) -> MultiplicityResult:
    ledger = ledger or MultiplicityLedger()
    values = numeric_multiplicities(max(leaves, 4), ledger)
    return MultiplicityResult(
        leaves=leaves,
        symbolic=str(symbolic_multiplicity(leaves)),
        symbolic_boundary=str(symbolic_boundary(leaves)),
        value=values[leaves],
        boundary=numeric_boundary(leaves, values),
        n_top=n_sigma(max(leaves - 3, 0)),
        parameters=ledger.values(leaves),
    )


def check_divisibility(
    leaves: int, ledger: MultiplicityLedger | None = None
) -> list[tuple[int, int, bool, bool]]:
    """(p, q, symbolic, numeric) for m_{p+1} m_{q+1} | m_l."""
    ledger = ledger or MultiplicityLedger()
    values = numeric_multiplicities(max(leaves, 4), ledger)
    target = symbolic_multiplicity(leaves)
    out = []
    for p, q in _pairs(leaves):
        product = symbolic_multiplicity(p + 1) * symbolic_multiplicity(q + 1)
        numeric = values[leaves] % (values[p + 1] * values[q + 1]) == 0
        out.append((p, q, product.divides(target), numeric))
    return out


def valence_multisets(leaves: int, vertices: int) -> list[tuple[int, ...]]:
    """Non-increasing valences v_1..v_i >= 3 with sum (v_j - 2) = leaves - 2."""
    found: list[tuple[int, ...]] = []

    def extend(prefix: list[int], remaining: int, cap: int) -> None:
        slots = vertices - len(prefix)
        if slots == 0:
            if remaining == 0:
                found.append(tuple(prefix))
            return
        # each later vertex needs at least 1
        for excess in range(min(cap, remaining - (slots - 1)), 0, -1):
            extend([*prefix, excess + 2], remaining - excess, excess)

    extend([], leaves - 2, leaves - 2)
    return found


@dataclass(slots=True)
class IntegralityCheck:
    valences: tuple[int, ...]
    excess: int
    coefficient: str
    integral: bool

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def check_integrality(
    leaves: int, ledger: MultiplicityLedger | None = None
) -> list[IntegralityCheck]:
    """mu_l / (m_{v_1} ... m_{v_i}) over every face with i >= 2 internal vertices."""
    ledger = ledger or MultiplicityLedger()
    values = numeric_multiplicities(max(leaves, 4), ledger)
    boundary = numeric_boundary(leaves, values)
    out = []
    for vertices in range(2, leaves - 1):
        for valences in valence_multisets(leaves, vertices):
            denominator = math.prod(values[v] for v in valences)
            out.append(
                IntegralityCheck(
                    valences=valences,
                    excess=leaves - 2 - vertices,
                    coefficient=f"{boundary}/{denominator}",
                    integral=boundary % denominator == 0,
                )
            )
    return out


def n_sigma(excess: int) -> int:
    """Weight 2^excess of an excess-lambda face."""
    if excess < 0:
        raise LedgerError(f"excess must be nonnegative, got {excess}")
    return 2**excess


def _table(raw: object, name: str) -> dict[int, int]:
    if raw is None:
        return {}
    if not isinstance(raw, dict):
        raise LedgerError(f"ledger entry {name} must map valences to integers")
    try:
        return {int(key): value for key, value in raw.items()}
    except (TypeError, ValueError) as exc:
        raise LedgerError(f"ledger entry {name} has a non-integer valence") from exc


def load_ledger(path: str | Path) -> MultiplicityLedger:
    """Read q and r tables from YAML; other keys are ignored."""
    with open(path) as f:
        data = yaml.safe_load(f)
    if not isinstance(data, dict):
        return MultiplicityLedger()
    kwargs = {
        k: _table(v, k) for k, v in data.items() if k in MultiplicityLedger.__dataclass_fields__
    }
    return MultiplicityLedger(**kwargs)
