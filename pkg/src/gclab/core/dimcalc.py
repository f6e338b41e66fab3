"""Arithmetic of link types under presuspension and delooping, bands and feasibility.

Everything is integer arithmetic at concrete (l, j, k); symbolic statements are checked by
sweeping parameters in the tests.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction
from itertools import combinations

import networkx as nx

from gclab.core.errors import InfeasibleError, LinkTypeError
from gclab.models.linktype import (
    BandCheck,
    CfsReport,
    ConditionResult,
    FeasibleRange,
    LinkType,
    VertexFamily,
)
from gclab.models.records import VERDICT_FAIL, VERDICT_PASS, VERDICT_UNDECIDED, verdict_of


def presuspend(t: LinkType, subset: Iterable[int]) -> LinkType:
    """Raise the chosen components (0-based) and the ambient dimension by one."""
    chosen = set(subset)
    if not chosen:
        raise LinkTypeError("presuspension needs a nonempty set of components")
    if not chosen <= set(range(len(t.components))):
        raise LinkTypeError(f"components must lie in 0..{len(t.components) - 1}")
    components = tuple(a + 1 if i in chosen else a for i, a in enumerate(t.components))
    return LinkType(components, t.ambient + 1, t.loop_prefix)


def deloop(t: LinkType, p_vector: Sequence[int]) -> LinkType:
    """Omega^{p}: lower component i by p_i and record p in the loop prefix."""
    if len(p_vector) != len(t.components):
        raise LinkTypeError(
            f"loop vector has {len(p_vector)} entries for {len(t.components)} components"
        )
    if any(p < 0 for p in p_vector):
        raise LinkTypeError("loop exponents must be nonnegative")
    if not any(p_vector):
        return t
    components = tuple(a - p for a, p in zip(t.components, p_vector))
    if any(a < 1 for a in components):
        raise LinkTypeError(f"delooping {t} by {tuple(p_vector)} leaves a component below 1")
    return LinkType(components, t.ambient, t.loop_prefix + tuple(p_vector))


def feasible_n_range(leaves: int, k: int) -> FeasibleRange:
    """Integers n with (k+l-2)/(l-1) <= n <= (2k+l-3)/l."""
    if leaves < 3:
        raise InfeasibleError(f"need l >= 3, got {leaves}")
    lo = -(-(k + leaves - 2) // (leaves - 1))
    hi = (2 * k + leaves - 3) // leaves
    return FeasibleRange(
        leaves=leaves,
        k=k,
        lo=lo,
        hi=hi,
        threshold=Fraction(2 * leaves * leaves + 2 * leaves - 6, leaves - 2),
        threshold_long=2 * leaves * leaves - 4 * leaves + 3,
    )


def _loop_vector(leaves: int, j: int, a: int, delta: int) -> tuple[int, ...]:
    if j == 0:
        return (a + delta,) * (leaves - 1) + (a,)
    return (a + delta,) * (leaves - j) + (a + delta + 1,) * (j - 1) + (a + 1,)


def family_steps(
    leaves: int, j: int, k: int, n: int | None = None
) -> list[tuple[str, LinkType]]:
    """Each type along the family: start, every presuspension, then the delooping."""
    if not 0 <= j <= leaves:
        raise InfeasibleError(f"j must lie in 0..{leaves}, got {j}")
    window = feasible_n_range(leaves, k)
    if n is None:
        if window.empty:
            raise InfeasibleError(f"no admissible n for l={leaves}, k={k}")
        n = window.lo
    elif n not in window.values():
        raise InfeasibleError(f"n={n} lies outside the admissible range for l={leaves}, k={k}")
    delta = 2 * k - leaves * n + leaves - 3
    a = (leaves - 1) * n - k - (leaves - 2)
    prefix = (leaves - 4,) if leaves >= 5 else ()
    current = LinkType(
        ((leaves - 1) * n - (leaves - 2),) * leaves, leaves * n - leaves + 3, prefix
    )
    steps = [("start", current)]
    for step in range(delta):
        current = presuspend(current, range(leaves - 1))
        steps.append((f"presuspend {step + 1}", current))
    steps.append(("deloop", deloop(current, _loop_vector(leaves, j, a, delta))))
    return steps


def vertex_family(leaves: int, j: int, k: int, n: int | None = None) -> VertexFamily:
    """The type reached from the l-component start type, at the least admissible n by default."""
    steps = family_steps(leaves, j, k, n)
    start, final = steps[0][1], steps[-1][1]
    n_used = (start.ambient + leaves - 3) // leaves
    delta = final.ambient - start.ambient
    a = (leaves - 1) * n_used - k - (leaves - 2)
    loops = final.loop_prefix[len(start.loop_prefix) :]
    slack = (final.ambient - 2) * leaves - final.ambient + 3 - sum(final.components)
    return VertexFamily(
        leaves=leaves,
        j=j,
        k=k,
        n=n_used,
        delta=delta,
        a=a,
        loop_vector=loops,
        start=start,
        final=final,
        total_dimension=final.loop_dimension,
        slack=slack,
    )


def graph_of_family(leaves: int, j: int, k: int, n: int | None = None) -> nx.DiGraph:
    """Types along the family as nodes, one arc per transform labelled by its step."""
    steps = family_steps(leaves, j, k, n)
    graph = nx.DiGraph()
    for (_, source), (label, target) in zip(steps, steps[1:]):
        graph.add_edge(source, target, step=label)
    return graph


def commutes(t: LinkType, subset: Iterable[int], p_vector: Sequence[int]) -> bool:
    """Presuspending then delooping gives the delooping of the presuspension."""
    chosen = list(subset)
    return deloop(presuspend(t, chosen), p_vector) == presuspend(deloop(t, p_vector), chosen)


def excess_dimension_bound(mu: int) -> tuple[int, int]:
    """(2mu^2+8mu+10, 2mu^2+8mu+9): the even threshold for 2k and its odd variant."""
    if mu < 0:
        raise InfeasibleError(f"excess must be nonnegative, got {mu}")
    odd = 2 * mu * mu + 8 * mu + 9
    return odd + 1, odd


def band_check(n: int, m: int, k: int) -> BandCheck:
    """Degree (2k-3)n+m of an (n, m) cycle against the band [2kn-4n-1, 2kn-1]."""
    if n < 1 or not 0 <= m <= 2 * n - 1:
        raise InfeasibleError(f"need n >= 1 and 0 <= m <= 2n-1, got n={n}, m={m}")
    degree = (2 * k - 3) * n + m
    band = (2 * k * n - 4 * n - 1, 2 * k * n - 1)
    # m <= sqrt(k-1) - 3 without floating point
    in_d = k >= 1 and (m + 3) ** 2 <= k - 1 and m <= 2 * n - 1
    return BandCheck(n, m, k, degree, band, band[0] <= degree <= band[1], in_d)


def corollary_b(k: int, mu: int = 2) -> tuple[BandCheck, bool]:
    """The (4, 2) cycle in degree 8k-10, and whether k clears the excess-mu bound."""
    even, _ = excess_dimension_bound(mu)
    return band_check(4, 2, k), 2 * k >= even


# CFS arithmetic


def _positive_solution(coefficients: Sequence[int], target: int) -> list[int] | None:
    """Positive integers x with sum c_i x_i = target, by bounded reachability."""
    rest = target - sum(coefficients)
    if rest < 0:
        return None
    # reach[v] = index of the coefficient last added to reach v
    reach: list[int | None] = [None] * (rest + 1)
    reach[0] = -1
    for v in range(1, rest + 1):
        for i, c in enumerate(coefficients):
            if c <= v and reach[v - c] is not None:
                reach[v] = i
                break
    if reach[rest] is None:
        return None
    x = [1] * len(coefficients)
    v = rest
    while v:
        i = reach[v]
        assert i is not None
        x[i] += 1
        v -= coefficients[i]
    return x


def cfs_check(p_list: Sequence[int], m: int) -> CfsReport:
    """Conditions (a) and (c) by exact arithmetic; (b) is never decided."""
    if not p_list:
        raise InfeasibleError("need at least one component dimension")
    for p in p_list:
        if not p < m - 2:
            raise InfeasibleError(f"every p_i must satisfy p_i < m-2, got p={p}, m={m}")
    report = CfsReport(p_list=list(p_list), m=m)
    for i, p in enumerate(p_list, start=1):
        divisible = (p + 1) % 4 == 0
        small = 2 * m < 3 * p + 4
        report.condition_a.append(
            ConditionResult(
                name=f"a[{i}]",
                verdict=verdict_of(divisible and small),
                detail=f"4 | p+1: {divisible}; m < 3p/2+2: {small}",
            )
        )
    report.condition_b = ConditionResult(
        name="b", verdict=VERDICT_UNDECIDED, detail="set of admissible dimensions unspecified"
    )
    report.condition_c = _condition_c(p_list, m)
    return report


def _condition_c(p_list: Sequence[int], m: int) -> ConditionResult:
    target = m - 3
    for size in range(3, len(p_list) + 1):
        for chosen in combinations(range(len(p_list)), size):
            coefficients = [m - p_list[i] - 2 for i in chosen]
            x = _positive_solution(coefficients, target)
            if x is not None:
                return ConditionResult(
                    name="c",
                    verdict=VERDICT_PASS,
                    detail=f"solvable on components {[i + 1 for i in chosen]}",
                    witness={"components": [i + 1 for i in chosen], "x": x},
                )
    return ConditionResult(
        name="c", verdict=VERDICT_FAIL, detail=f"no subsequence of length >= 3 reaches {target}"
    )


def corollary_instance(leaves: int, n: int, j: int) -> tuple[list[int], int]:
    """l components of dimension (l-1)n-l+2+j in m = ln-l+3+j; every coefficient is n-1."""
    p = (leaves - 1) * n - leaves + 2 + j
    return [p] * leaves, leaves * n - leaves + 3 + j


def lemma_instance(n: int, components: int = 1) -> tuple[list[int], int]:
    """Components of dimension 4n-2 in m = 5n-1."""
    return [4 * n - 2] * components, 5 * n - 1

