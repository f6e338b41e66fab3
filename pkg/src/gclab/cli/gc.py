"""gclab gc: graph complex verbs."""

from __future__ import annotations

from fractions import Fraction
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
from gclab.core.basis import basis
from gclab.core.canonical import (
    automorphism_order,
    canonicalize,
    direction_orbits,
    relabelling_invariant,
)
from gclab.core.complex import differential, eta
from gclab.core.cycles import cycle_search, scaled_cycle
from gclab.core.errors import ChainError
from gclab.core.homology import boundary_matrix, homology_dim, pairing
from gclab.io.formats import (
    document_chain,
    format_chain,
    format_graph,
    format_matrix,
    read_document,
)
from gclab.models.chain import ChainVector
from gclab.models.config import RunConfig
from gclab.models.graph import LabelledGraph
from gclab.models.records import VERDICT_FAIL, VERDICT_INFO, Record, verdict_of
from gclab.utils import fmt_fraction, fmt_sign

gc_app = typer.Typer(help="Graph complex: bases, differentials, homology and cycles.")

_n_opt = typer.Option(..., "--n", help="Degree n = |E| - |V|.")
_m_opt = typer.Option(..., "--m", help="Excess m = 2|E| - 3|V|.")
_directed_opt = typer.Option(False, "--directed", help="Use the directed graph complex.")
_loops_opt = typer.Option(True, "--loops/--no-loops", help="Include graphs with tadpoles.")
_workers_opt = typer.Option(
    None, "-w", "--workers", help="Worker processes (default: GCLAB_THREADS or 1)."
)


def _config(workers: Optional[int], loops: bool = True) -> RunConfig:
    config = RunConfig(loops=loops)
    if workers is not None:
        config.workers = max(1, workers)
    return config


def _chain_lines(c: ChainVector, prefix: str) -> list[str]:
    if c.is_zero():
        return ["# zero chain"]
    return format_chain(c, prefix).splitlines()


def _graph_records(check: str, c: ChainVector) -> list[Record]:
    return [
        Record(
            check=check,
            inputs={"grading": c.grading.to_dict(), "directed": c.directed},
            formula="term",
            witness={"edges": [[u + 1, v + 1] for u, v in g.edges], "coefficient": coeff},
        )
        for g, coeff in c
    ]


def derive_gamma(path: Path, partners: int) -> tuple[LabelledGraph, ChainVector]:
    """The seed graph of a file and the cycle completing it, scaled to the file's coefficient."""
    doc = read_document(path)
    seed = doc.first()
    coefficient = next(
        (coeff for coeff, name, _ in doc.terms if doc.graphs[name] == seed), Fraction(1)
    )
    grading = seed.grading
    cycles = cycle_search(grading.n, grading.m, canonicalize(seed), max_partners=partners)
    if not cycles:
        raise ChainError(f"no cycle with at most {partners} partner graphs completes the seed")
    return seed, scaled_cycle(cycles[0], seed, coefficient)


@gc_app.command("basis")
def basis_cmd(
    n: int = _n_opt,
    m: int = _m_opt,
    directed: bool = _directed_opt,
    loops: bool = _loops_opt,
    records: bool = records_opt,
) -> None:
    """List the canonical basis of GC in bidegree (n, m) as graph blocks."""
    with reported_errors():
        classes = basis(n, m, directed, loops)
    lines = [f"# basis ({n},{m}): {len(classes)} classes"]
    for i, cls in enumerate(classes, start=1):
        lines += format_graph(cls.canonical, f"B{i}").splitlines()
    out = [
        Record(
            check="basis",
            inputs={"n": n, "m": m, "directed": directed, "loops": loops},
            formula="canonical classes without odd automorphisms",
            witness={"index": i, "edges": [[u + 1, v + 1] for u, v in cls.canonical.edges]},
        )
        for i, cls in enumerate(classes, start=1)
    ]
    emit(lines, out, records)


@gc_app.command("diff")
def diff_cmd(
    chain_file: str = typer.Argument(..., help="Chain file (graph blocks plus coefficient lines)"),
    records: bool = records_opt,
) -> None:
    """Apply the vertex-splitting differential to a chain."""
    path = require_file(chain_file)
    with reported_errors():
        c = document_chain(read_document(path), str(path))
        boundary = differential(c)
    lines = [f"# boundary: {len(boundary)} terms in {boundary.grading.to_dict()}"]
    lines += _chain_lines(boundary, "D")
    emit(lines, _graph_records("diff", boundary), records)


@gc_app.command("homology")
def homology_cmd(
    n: int = _n_opt,
    m: int = _m_opt,
    mu: Optional[int] = typer.Option(None, "--mu", help="Truncate above this excess."),
    directed: bool = _directed_opt,
    loops: bool = _loops_opt,
    workers: Optional[int] = _workers_opt,
    records: bool = records_opt,
) -> None:
    """Dimension of the homology in bidegree (n, m) over Q."""
    config = _config(workers, loops)
    with reported_errors():
        dim = homology_dim(n, m, mu, directed, config)
        chains = len(basis(n, m, directed, loops))
    lines = [f"chains ({n},{m}): {chains}", f"homology ({n},{m}): {dim}"]
    record = Record(
        check="homology",
        inputs={"n": n, "m": m, "mu": mu, "directed": directed, "loops": loops},
        formula="dim C - rank d_out - rank d_in",
        witness={"chains": chains, "dimension": dim},
    )
    emit(lines, [record], records)


@gc_app.command("verify-cycle")
def verify_cycle(
    seed_file: Optional[str] = typer.Argument(
        None, help="Graph file whose first graph seeds the cycle (default: bundled wheel X)"
    ),
    partners: int = typer.Option(2, "--partners", help="Most partner graphs to try."),
    records: bool = records_opt,
) -> None:
    """Complete a seed graph to a cycle and pair it, after eta and 2^|E|, with the seed."""
    path = require_file(seed_file) if seed_file else bundled("gamma.gc")
    with reported_errors():
        seed, gamma = derive_gamma(path, partners)
        closed = differential(gamma).is_zero()
        edges = seed.edge_count
        directed = eta(gamma.scale(2**edges))
        value = pairing(canonicalize(seed), directed)
    seed_key = canonicalize(seed).canonical
    seed_coeff = gamma.coefficient(seed_key)
    lines = [
        f"cycle: {'yes' if closed else 'no'}; pairing with {seed.name or 'X'}: "
        f"{fmt_fraction(value)} (after η·2^{edges})"
    ]
    partner_records = []
    for i, (graph, coeff) in enumerate(gamma, start=1):
        if graph == seed_key:
            continue
        aut = automorphism_order(graph)
        ratio = abs(coeff / seed_coeff)
        lines.append(f"partner {i}: |Aut| = {aut}; |c / c_seed| = {fmt_fraction(ratio)}")
        lines += format_graph(graph, f"P{i}").splitlines()
        partner_records.append({"aut": aut, "ratio": ratio, "edges": graph.edges})
    record = Record(
        check="verify-cycle",
        inputs={"seed": str(path), "partners": partners},
        formula="d(gamma) = 0 and <X, eta(2^|E| gamma)>",
        verdict=verdict_of(closed),
        witness={"pairing": value, "partners": partner_records},
    )
    emit(lines, [record], records)
    if not closed:
        raise typer.Exit(1)


@gc_app.command("eta")
def eta_cmd(
    chain_file: str = typer.Argument(..., help="Undirected chain file"),
    records: bool = records_opt,
) -> None:
    """Average an undirected chain over all edge directions."""
    path = require_file(chain_file)
    with reported_errors():
        image = eta(document_chain(read_document(path), str(path)))
    lines = [f"# eta: {len(image)} directed classes"] + _chain_lines(image, "H")
    emit(lines, _graph_records("eta", image), records)


@gc_app.command("pair")
def pair_cmd(
    cochain_file: str = typer.Argument(..., help="File whose first graph is the cochain"),
    chain_file: str = typer.Argument(..., help="Chain file, directed or undirected"),
    records: bool = records_opt,
) -> None:
    """Pair the dual of a graph with a chain."""
    cochain_path, chain_path = require_file(cochain_file), require_file(chain_file)
    with reported_errors():
        cochain = canonicalize(read_document(cochain_path).first())
        c = document_chain(read_document(chain_path), str(chain_path))
        value = pairing(cochain, c)
    record = Record(
        check="pair",
        inputs={"cochain": str(cochain_path), "chain": str(chain_path)},
        formula="sum coeff * sign * |Aut|",
        witness={"pairing": value},
    )
    emit([f"pairing: {fmt_fraction(value)}"], [record], records)


@gc_app.command("aut")
def aut_cmd(
    graph_file: str = typer.Argument(..., help="Graph file"),
    shuffles: int = typer.Option(
        0, "--shuffles", help="Also recanonicalize this many random relabellings."
    ),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for the relabellings."),
    records: bool = records_opt,
) -> None:
    """Automorphism group orders and orientation signs."""
    path = require_file(graph_file)
    rng_seed = RunConfig().seed if seed is None else seed
    lines: list[str] = []
    out: list[Record] = []
    with reported_errors():
        for name, graph in read_document(path).graphs.items():
            oriented = canonicalize(graph)
            order = automorphism_order(graph)
            state = "vanishes" if oriented.vanishes else f"sign {fmt_sign(oriented.sign)}"
            line = f"{name}: |Aut| = {order}; {state}"
            verdict = VERDICT_INFO
            if shuffles:
                stable = relabelling_invariant(graph, shuffles, rng_seed)
                line += f"; stable under {shuffles} relabellings: {'yes' if stable else 'no'}"
                verdict = verdict_of(stable)
            lines.append(line)
            out.append(
                Record(
                    check="aut",
                    inputs={"graph": name, "directed": graph.directed, "shuffles": shuffles},
                    formula="|Aut| and orientation sign",
                    verdict=verdict,
                    witness={"order": order, "sign": oriented.sign},
                )
            )
    emit(lines, out, records)
    if any(record.verdict == VERDICT_FAIL for record in out):
        raise typer.Exit(1)


@gc_app.command("orbits")
def orbits_cmd(
    graph_file: str = typer.Argument(..., help="Graph file; the first undirected graph is used"),
    records: bool = records_opt,
) -> None:
    """Orbits of the automorphism group on edge-direction assignments."""
    path = require_file(graph_file)
    with reported_errors():
        graph = read_document(path).first()
        orbits = direction_orbits(graph)
    edges = graph.edge_count
    lines = []
    for orbit in orbits:
        bits = "".join("1" if orbit.assignment >> i & 1 else "0" for i in range(edges))
        lines.append(f"{bits} size={orbit.size} stabilizer={orbit.stabilizer}")
    total = sum(o.size for o in orbits)
    lines.append(f"orbits: {len(orbits)}; sizes sum to {total} = 2^{edges}")
    out = [
        Record(
            check="orbits",
            inputs={"graph": graph.name, "edges": edges},
            formula="|Aut| / |Aut(G, a)|",
            witness=orbit.to_dict(),
        )
        for orbit in orbits
    ]
    emit(lines, out, records)


@gc_app.command("export-matrix")
def export_matrix(
    n: int = _n_opt,
    m: int = _m_opt,
    directed: bool = _directed_opt,
    loops: bool = _loops_opt,
    output: Optional[str] = typer.Option(None, "-o", "--out", help="Write to this file."),
    workers: Optional[int] = _workers_opt,
    records: bool = records_opt,
) -> None:
    """Write the boundary matrix out of bidegree (n, m) in coordinate form."""
    with reported_errors():
        matrix = boundary_matrix(n, m, directed, _config(workers, loops))
    text = format_matrix(matrix)
    if output:
        Path(output).write_text(text)
        err_console.print(f"[green]Saved {matrix.rows}x{matrix.cols} matrix to {output}[/green]")
    record = Record(
        check="export-matrix",
        inputs={"n": n, "m": m, "directed": directed, "loops": loops, "out": output},
        formula="d: GC(n, m) -> GC(n, m - 1)",
        witness={"rows": matrix.rows, "cols": matrix.cols, "nonzeros": matrix.nnz},
    )
    lines = [] if output else text.splitlines()
    emit(lines, [record], records)
