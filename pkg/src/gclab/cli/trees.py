"""gclab trees: tree posets, Lie-hedra and decomposition posets."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import typer

from gclab.cli.common import (
    bundled,
    emit,
    err_console,
    records_opt,
    reported_errors,
    require_file,
)
from gclab.cli.gc import derive_gamma
from gclab.core.canonical import first_betti
from gclab.core.complex import eta
from gclab.core.decomposition import decomposition_poset
from gclab.core.errors import GclabError
from gclab.core.multiplicity import load_ledger
from gclab.core.trees import (
    complex_homology,
    direction_extensions,
    enumerate_trees,
    graph_complex_1d,
    lie_hedron,
)
from gclab.io.formats import format_complex, read_document
from gclab.io.newick import format_tree
from gclab.models.ledger import MultiplicityLedger
from gclab.models.records import Record
from gclab.models.tree import leaf_set

trees_app = typer.Typer(help="Labelled trees, Lie-hedra and the decomposition poset.")

_leaves_opt = typer.Option(..., "--l", help="Number of leaves (valence of the bracket).")


def _clade(mask: int) -> str:
    return "{" + ",".join(map(str, leaf_set(mask))) + "}"


def _joined(values: list[int]) -> str:
    return " ".join(map(str, values))


@trees_app.command("enum")
def enum_cmd(
    leaves: int = _leaves_opt,
    excess: int = typer.Option(..., "--excess", help="Excess of the trees."),
    incoming: Optional[int] = typer.Option(
        None, "--p", help="Direct the trees: leaves 1..p incoming, the rest outgoing."
    ),
    records: bool = records_opt,
) -> None:
    """Enumerate trees of a given excess in Newick form."""
    with reported_errors():
        trees = enumerate_trees(leaves, excess)
        if incoming is not None:
            trees = [
                directed
                for tree in trees
                for directed in direction_extensions(tree, incoming, leaves - incoming)
            ]
    rendered = [format_tree(tree) for tree in trees]
    out = [
        Record(
            check="trees-enum",
            inputs={"leaves": leaves, "excess": excess, "p": incoming},
            formula="compatible split sets of size l-3-excess",
            witness={"newick": text},
        )
        for text in rendered
    ]
    emit([*rendered, f"count: {len(trees)}"], out, records)


@trees_app.command("liehedron")
def liehedron_cmd(
    leaves: int = _leaves_opt,
    output: Optional[str] = typer.Option(None, "-o", "--out", help="Write the facet list here."),
    records: bool = records_opt,
) -> None:
    """f-vector and Euler characteristic of the Lie-hedron on l leaves."""
    with reported_errors():
        complex_ = lie_hedron(leaves)
    f_vector = complex_.f_vector()
    chi = complex_.euler_characteristic()
    if output:
        text = format_complex(complex_, _clade)
        Path(output).write_text(text)
        err_console.print(f"[green]Saved {len(complex_.facets)} facets to {output}[/green]")
    record = Record(
        check="liehedron",
        inputs={"leaves": leaves},
        formula="splits as vertices, trivalent trees as facets",
        witness={"f_vector": f_vector, "euler_characteristic": chi},
    )
    emit([f"f-vector: {_joined(f_vector)}", f"euler characteristic: {chi}"], [record], records)


@trees_app.command("betti")
def betti_cmd(
    leaves: Optional[int] = typer.Option(None, "--l", help="Lie-hedron on this many leaves."),
    graph_file: Optional[str] = typer.Option(
        None, "--graph", help="Graph file; its first graph is read as a 1-complex."
    ),
    records: bool = records_opt,
) -> None:
    """Rational Betti numbers of a Lie-hedron or of a graph."""
    if (leaves is None) == (graph_file is None):
        err_console.print("[red]Give exactly one of --l and --graph[/red]")
        raise typer.Exit(1)
    lines: list[str] = []
    with reported_errors():
        if leaves is not None:
            betti = complex_homology(lie_hedron(leaves))
            inputs: dict[str, object] = {"leaves": leaves}
        else:
            graph = read_document(require_file(str(graph_file))).first()
            inputs = {"graph": graph.name, "vertices": graph.vertex_count}
            lines.append(f"b_1 from |E| - |V| + 1: {first_betti(graph)}")
            try:
                betti = complex_homology(graph_complex_1d(graph))
            except GclabError:
                # multigraphs have no simplicial 1-complex; the count above still holds
                betti = [1, first_betti(graph)]
    lines.insert(0, f"betti: {_joined(betti)}")
    record = Record(
        check="betti",
        inputs=inputs,
        formula="dim ker - dim im of the simplicial boundary",
        witness={"betti": betti},
    )
    emit(lines, [record], records)


@trees_app.command("decompose")
def decompose_cmd(
    seed_file: Optional[str] = typer.Argument(
        None, help="Graph file seeding the cycle (default: bundled wheel X)"
    ),
    partners: int = typer.Option(2, "--partners", help="Most partner graphs to try."),
    scale: int = typer.Option(5, "--scale", help="Clear denominators of eta(2^|E| gamma)."),
    ledger_file: Optional[str] = typer.Option(None, "--ledger", help="YAML q/r ledger."),
    records: bool = records_opt,
) -> None:
    """Expand the directed cycle down to excess 0 and report copies and multiplicities."""
    path = require_file(seed_file) if seed_file else bundled("gamma.gc")
    with reported_errors():
        ledger = load_ledger(require_file(ledger_file)) if ledger_file else MultiplicityLedger()
        seed, gamma = derive_gamma(path, partners)
        directed = eta(gamma.scale(2**seed.edge_count)).scale(scale)
        poset = decomposition_poset(directed, ledger)
    levels = poset.levels()
    lines = [
        f"excess {level.excess}: nodes={level.nodes} copies={level.copies} n={level.n} "
        f"m={','.join(map(str, level.multiplicities))}"
        for level in levels
    ]
    lines.append(f"mu: {poset.mu}")
    out = [
        Record(
            check="decompose",
            inputs={"seed": str(path), "scale": scale, "ledger": ledger.to_dict()},
            formula="n = 2^excess, m = product of valence multiplicities",
            witness=level.to_dict(),
        )
        for level in levels
    ]
    out.append(
        Record(
            check="decompose-mu",
            inputs={"seed": str(path), "scale": scale},
            formula="lcm of node multiplicities",
            witness={"mu": poset.mu},
        )
    )
    emit(lines, out, records)
