"""Graded words, parities symbolic in n, and bracket expressions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from gclab.core.errors import GclabError


@dataclass(frozen=True, slots=True)
class Generator:
    name: str
    degree: int

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class GradedWord:
    """An ordered product of graded generators."""

    generators: tuple[Generator, ...] = ()

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(g.degree for g in self.generators)

    @property
    def degree(self) -> int:
        return sum(self.degrees)

    def __len__(self) -> int:
        return len(self.generators)

    def __add__(self, other: GradedWord) -> GradedWord:
        return GradedWord(self.generators + other.generators)

    def names(self) -> list[str]:
        return [g.name for g in self.generators]

    def __str__(self) -> str:
        return "(" + " ".join(self.names()) + ")"


@dataclass(frozen=True, slots=True)
class Parity:
    """The parity const + ncoef*n of a degree, with n an integer parameter."""

    const: int = 0
    ncoef: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "const", self.const % 2)
        object.__setattr__(self, "ncoef", self.ncoef % 2)

    @classmethod
    def of(cls, degree: int) -> Parity:
        return cls(degree, 0)

    def __add__(self, other: Parity) -> Parity:
        return Parity(self.const + other.const, self.ncoef + other.ncoef)

    def __mul__(self, other: Parity) -> Parity:
        # n^2 = n mod 2
        return Parity(
            self.const * other.const,
            self.const * other.ncoef + self.ncoef * other.const + self.ncoef * other.ncoef,
        )

    def evaluate(self, n: int) -> int:
        return (self.const + self.ncoef * n) % 2


N = Parity(0, 1)


@dataclass(frozen=True, slots=True)
class Sign:
    """(-1)^const * ((-1)^n)^ncoef."""

    const: int = 0
    ncoef: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "const", self.const % 2)
        object.__setattr__(self, "ncoef", self.ncoef % 2)

    @classmethod
    def from_parity(cls, parity: Parity) -> Sign:
        return cls(parity.const, parity.ncoef)

    def __mul__(self, other: Sign) -> Sign:
        return Sign(self.const + other.const, self.ncoef + other.ncoef)

    def __neg__(self) -> Sign:
        return Sign(self.const + 1, self.ncoef)

    def evaluate(self, n: int) -> int:
        return -1 if (self.const + self.ncoef * n) % 2 else 1

    def __str__(self) -> str:
        head = "-" if self.const else "+"
        return head + "(-1)^n" if self.ncoef else head


PLUS = Sign()


@dataclass(frozen=True, slots=True)
class Leaf:
    name: str
    degree: Parity = N

    def __str__(self) -> str:
        return self.name

    def min_name(self) -> str:
        return self.name

    def leaf_names(self) -> list[str]:
        return [self.name]


@dataclass(frozen=True, slots=True)
class Bracket:
    """A graded-symmetric bracket of arity >= 2; every bracket shifts degree by one."""

    args: tuple[Expr, ...]

    def __post_init__(self) -> None:
        if len(self.args) < 2:
            raise GclabError("brackets take at least two arguments")

    @property
    def degree(self) -> Parity:
        total = Parity(1, 0)
        for arg in self.args:
            total = total + arg.degree
        return total

    def __str__(self) -> str:
        return "[" + ",".join(str(a) for a in self.args) + "]"

    def min_name(self) -> str:
        return min(a.min_name() for a in self.args)

    def leaf_names(self) -> list[str]:
        return [name for a in self.args for name in a.leaf_names()]


Expr = Union[Leaf, Bracket]


@dataclass(frozen=True, slots=True)
class Term:
    sign: Sign
    expr: Expr

    def __str__(self) -> str:
        return f"{self.sign}{self.expr}"
