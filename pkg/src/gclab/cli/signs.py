"""gclab signs: Koszul signs of brackets and half-edge orientations."""

from __future__ import annotations

from typing import Optional

import typer

from gclab.cli.common import emit, records_opt, reported_errors, require_file
from gclab.core.brackets import (
    broken_symmetries,
    compare_relations,
    linf_relation,
    normalize_relation,
    parse_relation,
    render_relation,
    specialize,
)
from gclab.core.signs import edge_word, half_edge_orientation, jacobi_closed_form, jacobi_signs
from gclab.io.formats import read_document
from gclab.models.algebra import N
from gclab.models.records import VERDICT_INFO, Record, verdict_of
from gclab.utils import fmt_sign, parse_parity

signs_app = typer.Typer(help="Signs of the Jacobi and L-infinity relations and orientations.")


def _signs(values: tuple[int, int, int]) -> str:
    return " ".join(str(v) for v in values)


@signs_app.command("jacobi")
def jacobi_cmd(
    p: int = typer.Option(..., "--p", help="Dimension of the first disk."),
    q: int = typer.Option(..., "--q", help="Dimension of the second disk."),
    r: int = typer.Option(..., "--r", help="Dimension of the third disk."),
    records: bool = records_opt,
) -> None:
    """Jacobi coefficients from the boundary faces, against the closed form."""
    with reported_errors():
        derived = jacobi_signs(p, q, r)
    closed = jacobi_closed_form(p, q, r)
    agree = derived == closed
    lines = [
        f"coefficients: {_signs(derived)}",
        f"closed form: {_signs(closed)}",
        f"agree: {'yes' if agree else 'no'}",
    ]
    record = Record(
        check="jacobi",
        inputs={"p": p, "q": q, "r": r},
        formula="(1, (-1)^(pq+pr), (-1)^(pr+qr))",
        verdict=verdict_of(agree),
        witness={"derived": list(derived), "closed_form": list(closed)},
    )
    emit(lines, [record], records)
    if not agree:
        raise typer.Exit(1)


@signs_app.command("halfedge")
def halfedge_cmd(
    graph_file: str = typer.Argument(..., help="Graph file; its first graph must be directed"),
    k: str = typer.Option("odd", "--k", help="Parity of k: even, odd or an integer."),
    records: bool = records_opt,
) -> None:
    """Rewrite the edge-ordered half-edge word as a signed product of vertex words."""
    path = require_file(graph_file)
    with reported_errors():
        graph = read_document(path).first()
        k_parity = parse_parity(k)
        orientation = half_edge_orientation(graph, k_parity)
        word = edge_word(graph, k_parity)
    lines = [f"edges: {word}"]
    lines += [f"vertex {v}: {factor}" for v, factor in enumerate(orientation.factors(), start=1)]
    lines.append(f"sign: {fmt_sign(orientation.sign)}")
    record = Record(
        check="halfedge",
        inputs={"graph": graph.name, "k_parity": k_parity},
        formula="edge word = sign * product of vertex words",
        verdict=VERDICT_INFO,
        witness={"factors": orientation.factors(), "sign": orientation.sign},
    )
    emit(lines, [record], records)


@signs_app.command("linf")
def linf_cmd(
    leaves: int = typer.Option(..., "--l", help="Arity of the top bracket."),
    n: Optional[str] = typer.Option(
        None, "--n", help="Parity of n (even, odd or an integer); symbolic when omitted."
    ),
    compare: Optional[str] = typer.Option(
        None, "--compare", help="File holding a relation to compare against, term by term."
    ),
    records: bool = records_opt,
) -> None:
    """The two-level L-infinity relation among brackets of generators of degree n."""
    with reported_errors():
        parity = None if n is None else parse_parity(n)
        relation = linf_relation(leaves, N)
        theirs = None
        if compare:
            lines_in = require_file(compare).read_text().splitlines()
            text = " ".join(line for line in lines_in if not line.lstrip().startswith("#"))
            theirs = normalize_relation(parse_relation(text, N))
        if parity is not None:
            relation = specialize(relation, parity)
            theirs = None if theirs is None else specialize(theirs, parity)
    lines = [str(term) for term in relation]
    lines.append(f"terms: {len(relation)}")
    witness: dict[str, object] = {"relation": render_relation(relation)}
    verdict = VERDICT_INFO
    if theirs is not None:
        agree, differ = compare_relations(relation, theirs)
        lines.append(f"agree: {len(agree)}; differ: {len(differ)}")
        lines += [f"differs: {expr}" for expr in differ]
        broken = broken_symmetries(theirs)
        swaps = " ".join(f"{x}<->{y}" for x, y in broken) or "none"
        lines.append(f"compared relation breaks swaps: {swaps}")
        witness.update(agree=agree, differ=differ, broken=[list(pair) for pair in broken])
        verdict = verdict_of(not differ)
    record = Record(
        check="linf",
        inputs={"leaves": leaves, "n_parity": parity, "compare": compare},
        formula="sum over unshuffles of [[x_I], x_J] with Koszul signs",
        verdict=verdict,
        witness=witness,
    )
    emit(lines, [record], records)
