"""Boundary-matrix column assembly, optionally spread over a process pool."""

from __future__ import annotations

from concurrent.futures import Future, ProcessPoolExecutor, as_completed
from fractions import Fraction

from rich.console import Console
from rich.progress import BarColumn, MofNCompleteColumn, Progress, SpinnerColumn, TextColumn

from gclab.core.complex import chain_from_graph, differential
from gclab.models.config import RunConfig
from gclab.models.graph import LabelledGraph
from gclab.models.matrix import SparseRationalMatrix
from gclab.pipeline.signals import InterruptGuard, worker_init

# diagnostics only; stdout carries results
console = Console(stderr=True)


GraphKey = tuple[int, tuple[tuple[int, int], ...], bool]
Column = list[tuple[GraphKey, Fraction]]


def boundary_column(key: GraphKey) -> Column:
    """Terms of the differential of one basis class as plain picklable tuples."""
    vertex_count, edges, directed = key
    graph = LabelledGraph(vertex_count, edges, directed)
    return [(term.key(), coeff) for term, coeff in differential(chain_from_graph(graph))]


def assemble_columns(
    sources: list[LabelledGraph],
    targets: dict[LabelledGraph, int],
    config: RunConfig,
    label: str = "Assembling columns",
) -> SparseRationalMatrix:
    """Matrix whose column j expands the boundary of sources[j] in the target basis."""
    columns: list[Column | None] = [None] * len(sources)
    workers = min(config.workers, len(sources))
    if workers <= 1 or len(sources) < config.parallel_threshold:
        for j, graph in enumerate(sources):
            columns[j] = boundary_column(graph.key())
    else:
        _assemble_parallel(sources, columns, workers, label)

    entries: dict[tuple[int, int], Fraction] = {}
    for j, column in enumerate(columns):
        if column is None:
            raise KeyboardInterrupt
        for (vertex_count, edges, directed), coeff in column:
            row = targets[LabelledGraph(vertex_count, edges, directed)]
            entries[(row, j)] = coeff
    return SparseRationalMatrix(rows=len(targets), cols=len(sources), entries=entries)


def _assemble_parallel(
    sources: list[LabelledGraph],
    columns: list[Column | None],
    workers: int,
    label: str,
) -> None:
    progress = Progress(
        SpinnerColumn(),
        TextColumn(f"[bold blue]{label}"),
        BarColumn(bar_width=40),
        MofNCompleteColumn(),
        console=console,
        transient=True,
    )
    with InterruptGuard() as guard, progress:
        task = progress.add_task(label, total=len(sources))
        with ProcessPoolExecutor(max_workers=workers, initializer=worker_init) as executor:
            futures: dict[Future[Column], int] = {
                executor.submit(boundary_column, graph.key()): j for j, graph in enumerate(sources)
            }
            for future in as_completed(futures):
                if guard.interrupted:
                    progress.update(task, description="[yellow]Stopping...")
                    for pending in futures:
                        pending.cancel()
                    break
                columns[futures[future]] = future.result()
                progress.advance(task)
