"""gclab dim: dimension calculus, feasibility and multiplicities."""

from __future__ import annotations

from typing import Optional

import typer

from gclab.cli.common import emit, records_opt, reported_errors, require_file
from gclab.core.dimcalc import (
    band_check,
    cfs_check,
    excess_dimension_bound,
    family_steps,
    feasible_n_range,
    vertex_family,
)
from gclab.core.multiplicity import (
    check_divisibility,
    check_integrality,
    load_ledger,
    multiplicity,
)
from gclab.models.ledger import MultiplicityLedger
from gclab.models.records import VERDICT_FAIL, Record, verdict_of
from gclab.utils import fmt_fraction

dim_app = typer.Typer(help="Link-type arithmetic, feasibility ranges, CFS conditions, ledgers.")

_leaves_opt = typer.Option(..., "--l", help="Valence l of the bracket.")
_k_opt = typer.Option(..., "--k", help="Ambient parameter k.")


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


@dim_app.command("vertex-family")
def vertex_family_cmd(
    leaves: int = _leaves_opt,
    j: int = typer.Option(..., "--j", help="Number of loop components."),
    k: int = _k_opt,
    n: Optional[int] = typer.Option(None, "--n", help="Degree n (default: least admissible)."),
    records: bool = records_opt,
) -> None:
    """Follow the start type through its presuspensions and the final delooping."""
    with reported_errors():
        steps = family_steps(leaves, j, k, n)
        family = vertex_family(leaves, j, k, n)
    lines = [f"{label}: {link}" for label, link in steps]
    lines += [
        f"n: {family.n}; presuspensions: {family.delta}; a: {family.a}",
        f"total dimension: {family.total_dimension}",
        f"slack: {family.slack}; strict: {_yes(family.strict)}",
    ]
    record = Record(
        check="vertex-family",
        inputs={"leaves": leaves, "j": j, "k": k, "n": n},
        formula="slack = (l-2)k - 2l + 3 + j",
        verdict=verdict_of(family.strict),
        witness=family.to_dict(),
    )
    emit(lines, [record], records)


@dim_app.command("feasible")
def feasible_cmd(
    leaves: int = _leaves_opt,
    k: int = _k_opt,
    records: bool = records_opt,
) -> None:
    """Range of n for which the l-component start type exists at this k."""
    with reported_errors():
        window = feasible_n_range(leaves, k)
    span = "empty" if window.empty else f"{window.lo}..{window.hi}"
    lines = [
        f"n range: {span}",
        f"threshold for 2k: {fmt_fraction(window.threshold)} (long form {window.threshold_long})",
    ]
    record = Record(
        check="feasible",
        inputs={"leaves": leaves, "k": k},
        formula="ceil((k+l-2)/(l-1)) <= n <= floor((2k+l-3)/l)",
        verdict=verdict_of(not window.empty),
        witness=window.to_dict(),
    )
    emit(lines, [record], records)


@dim_app.command("cfs")
def cfs_cmd(
    p: list[int] = typer.Option(..., "--p", help="Component dimension; repeat per component."),
    m: int = typer.Option(..., "--m", help="Ambient dimension."),
    records: bool = records_opt,
) -> None:
    """Conditions (a) and (c) for nontrivial rational homotopy of embeddings; (b) stays open."""
    with reported_errors():
        report = cfs_check(p, m)
    lines = [f"{c.name}: {c.verdict} ({c.detail})" for c in report.conditions()]
    out = [
        Record(
            check="cfs",
            inputs={"p": list(p), "m": m, "condition": c.name},
            formula=c.detail,
            verdict=c.verdict,
            witness=c.witness,
        )
        for c in report.conditions()
    ]
    emit(lines, out, records)


@dim_app.command("bands")
def bands_cmd(
    n: int = typer.Option(4, "--n", help="Degree n of the cycle."),
    m: int = typer.Option(2, "--m", help="Excess m of the cycle."),
    k: int = _k_opt,
    mu: int = typer.Option(2, "--mu", help="Excess bound to test k against."),
    records: bool = records_opt,
) -> None:
    """Place the degree (2k-3)n+m in its band and test k against the excess bound."""
    with reported_errors():
        check = band_check(n, m, k)
        even, odd = excess_dimension_bound(mu)
    clears = 2 * k >= even
    lines = [
        f"degree: {check.degree}; band: [{check.band[0]}, {check.band[1]}]; "
        f"member: {_yes(check.member)}",
        f"(n, m) in D(n, 2k): {_yes(check.in_d)}",
        f"excess bound at mu={mu}: 2k >= {even} (odd variant {odd}); k={k} clears: {_yes(clears)}",
    ]
    out = [
        Record(
            check="bands",
            inputs={"n": n, "m": m, "k": k},
            formula="2kn-4n-1 <= (2k-3)n+m <= 2kn-1",
            verdict=verdict_of(check.member),
            witness=check.to_dict(),
        ),
        Record(
            check="excess-bound",
            inputs={"mu": mu, "k": k},
            formula="2k >= 2mu^2+8mu+10",
            verdict=verdict_of(clears),
            witness={"even": even, "odd": odd},
        ),
    ]
    emit(lines, out, records)


@dim_app.command("multiplicity")
def multiplicity_cmd(
    leaves: int = _leaves_opt,
    ledger_file: Optional[str] = typer.Option(None, "--ledger", help="YAML q/r ledger."),
    records: bool = records_opt,
) -> None:
    """m_l and its boundary lcm, symbolically and at the ledger's parameters."""
    with reported_errors():
        ledger = load_ledger(require_file(ledger_file)) if ledger_file else MultiplicityLedger()
        result = multiplicity(leaves, ledger)
        divisibility = check_divisibility(leaves, ledger)
        integrality = check_integrality(leaves, ledger)
    lines = [
        f"m_{leaves} = {result.symbolic} = {result.value}",
        f"mu_{leaves} = {result.symbolic_boundary} = {result.boundary}",
    ]
    lines += [
        f"m_{p + 1} m_{q + 1} | m_{leaves}: symbolic {_yes(sym)}, numeric {_yes(num)}"
        for p, q, sym, num in divisibility
    ]
    lines += [
        f"face {','.join(map(str, row.valences))}: {row.coefficient} "
        f"integral {_yes(row.integral)}"
        for row in integrality
    ]
    out = [
        Record(
            check="multiplicity",
            inputs={"leaves": leaves, "ledger": ledger.to_dict()},
            formula="m_l = l q_l r_l mu_l",
            witness=result.to_dict(),
        )
    ]
    out += [
        Record(
            check="divisibility",
            inputs={"leaves": leaves, "p": p, "q": q},
            formula="m_{p+1} m_{q+1} | m_l",
            verdict=verdict_of(sym and num),
            witness={"symbolic": sym, "numeric": num},
        )
        for p, q, sym, num in divisibility
    ]
    out += [
        Record(
            check="integrality",
            inputs={"leaves": leaves, "valences": list(row.valences)},
            formula="mu_l / prod m_v",
            verdict=verdict_of(row.integral),
            witness=row.to_dict(),
        )
        for row in integrality
    ]
    emit(lines, out, records)
    if any(r.verdict == VERDICT_FAIL for r in out):
        raise typer.Exit(1)
