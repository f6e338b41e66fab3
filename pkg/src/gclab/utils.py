"""Shared utilities."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from gclab.core.errors import GclabError


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation of range(len(perm)), by cycle count."""
    seen = [False] * len(perm)
    transpositions = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        transpositions += length - 1
    return -1 if transpositions % 2 else 1


def fmt_fraction(value: Fraction | int) -> str:
    """Render an exact rational as num/den (den omitted when 1)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def fmt_sign(sign: int) -> str:
    return {1: "+", -1: "-", 0: "0"}[sign]


def parse_parity(text: str) -> int:
    """Accept even/odd or an integer and return it mod 2."""
    lowered = text.strip().lower()
    if lowered == "even":
        return 0
    if lowered == "odd":
        return 1
    try:
        return int(lowered) % 2
    except ValueError as exc:
        raise GclabError(f"expected even, odd or an integer, got {text!r}") from exc
