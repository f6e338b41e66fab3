"""String-link types and the result records of the dimension calculus."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any

from gclab.core.errors import LinkTypeError


@dataclass(frozen=True, slots=True)
class LinkType:
    """Omega^{loop_prefix}(a_1, ..., a_r; N), components of dimension a_i in ambient N."""

    components: tuple[int, ...]
    ambient: int
    loop_prefix: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not self.components:
            raise LinkTypeError("a link type needs at least one component")
        for i, a in enumerate(self.components, start=1):
            if not 1 <= a <= self.ambient - 2:
                raise LinkTypeError(
                    f"component {i} has dimension {a}, outside 1..{self.ambient - 2}"
                )
        if any(p < 0 for p in self.loop_prefix):
            raise LinkTypeError("loop exponents must be nonnegative")

    @property
    def loop_dimension(self) -> int:
        """dim of the sphere product S^{loop_prefix}."""
        return sum(self.loop_prefix)

    def __str__(self) -> str:
        body = f"({','.join(map(str, self.components))};{self.ambient})"
        if self.loop_prefix:
            return f"Omega^({','.join(map(str, self.loop_prefix))}){body}"
        return body

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True, slots=True)
class VertexFamily:
    leaves: int
    j: int
    k: int
    n: int
    delta: int
    a: int
    loop_vector: tuple[int, ...]
    start: LinkType
    final: LinkType
    total_dimension: int
    slack: int

    @property
    def strict(self) -> bool:
        return self.slack > 0

    def to_dict(self) -> dict[str, Any]:
        data = asdict(self)
        data["strict"] = self.strict
        return data


@dataclass(frozen=True, slots=True)
class FeasibleRange:
    leaves: int
    k: int
    lo: int
    hi: int
    threshold: Fraction
    threshold_long: int

    @property
    def empty(self) -> bool:
        return self.lo > self.hi

    def values(self) -> range:
        return range(self.lo, self.hi + 1)

    def to_dict(self) -> dict[str, Any]:
        return {
            "leaves": self.leaves,
            "k": self.k,
            "n_range": None if self.empty else [self.lo, self.hi],
            "threshold_2k": self.threshold,
            "threshold_2k_long": self.threshold_long,
        }


@dataclass(frozen=True, slots=True)
class BandCheck:
    n: int
    m: int
    k: int
    degree: int
    band: tuple[int, int]
    member: bool
    in_d: bool

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass(slots=True)
class ConditionResult:
    """Outcome of one arithmetic condition: 'pass', 'fail' or 'undecided'."""

    name: str
    verdict: str
    detail: str = ""
    witness: Any = None

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass(slots=True)
class CfsReport:
    p_list: list[int]
    m: int
    condition_a: list[ConditionResult] = field(default_factory=list)
    condition_b: ConditionResult | None = None
    condition_c: ConditionResult | None = None

    def conditions(self) -> list[ConditionResult]:
        out = list(self.condition_a)
        out += [c for c in (self.condition_b, self.condition_c) if c is not None]
        return out

    def to_dict(self) -> dict[str, Any]:
        return {
            "p_list": self.p_list,
            "m": self.m,
            "conditions": [c.to_dict() for c in self.conditions()],
        }
