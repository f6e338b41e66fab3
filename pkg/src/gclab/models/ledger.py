"""Multiplicity ledgers: symbolic monomials and numeric copy-count parameters."""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any

from gclab.core.errors import LedgerError


@dataclass(frozen=True, slots=True)
class Monomial:
    """coefficient * prod(symbol^power) over positive-integer symbols such as q5, r5."""

    coefficient: int = 1
    powers: tuple[tuple[str, int], ...] = ()

    @classmethod
    def symbol(cls, name: str) -> Monomial:
        return cls(1, ((name, 1),))

    def _power_map(self) -> dict[str, int]:
        return dict(self.powers)

    @staticmethod
    def _pack(powers: Mapping[str, int]) -> tuple[tuple[str, int], ...]:
        return tuple(sorted((s, p) for s, p in powers.items() if p))

    def __mul__(self, other: Monomial | int) -> Monomial:
        if isinstance(other, int):
            return Monomial(self.coefficient * other, self.powers)
        powers = self._power_map()
        for s, p in other.powers:
            powers[s] = powers.get(s, 0) + p
        return Monomial(self.coefficient * other.coefficient, self._pack(powers))

    __rmul__ = __mul__

    def lcm(self, other: Monomial) -> Monomial:
        """lcm of coefficients, max of exponents: a common multiple for all parameter values."""
        powers = self._power_map()
        for s, p in other.powers:
            powers[s] = max(powers.get(s, 0), p)
        return Monomial(math.lcm(self.coefficient, other.coefficient), self._pack(powers))

    def divides(self, other: Monomial) -> bool:
        theirs = other._power_map()
        return other.coefficient % self.coefficient == 0 and all(
            theirs.get(s, 0) >= p for s, p in self.powers
        )

    def evaluate(self, values: Mapping[str, int]) -> int:
        total = self.coefficient
        for s, p in self.powers:
            if s not in values:
                raise LedgerError(f"no value for parameter {s}")
            total *= values[s] ** p
        return total

    def __str__(self) -> str:
        factors = [str(self.coefficient)] if self.coefficient != 1 or not self.powers else []
        factors += [s if p == 1 else f"{s}^{p}" for s, p in self.powers]
        return "*".join(factors)


@dataclass(slots=True)
class MultiplicityLedger:
    """Copy counts q_l and r_l per valence l >= 5; missing entries default to 1."""

    q: dict[int, int] = field(default_factory=dict)
    r: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for name, table in (("q", self.q), ("r", self.r)):
            for leaves, value in table.items():
                if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                    raise LedgerError(f"{name}_{leaves} must be a positive integer, got {value!r}")

    def values(self, up_to: int) -> dict[str, int]:
        """Parameter values keyed by symbol name (q5, r5, ...) for valences 5..up_to."""
        out: dict[str, int] = {}
        for leaves in range(5, up_to + 1):
            out[f"q{leaves}"] = self.q.get(leaves, 1)
            out[f"r{leaves}"] = self.r.get(leaves, 1)
        return out

    def to_dict(self) -> dict[str, Any]:
        return {"q": dict(self.q), "r": dict(self.r)}
