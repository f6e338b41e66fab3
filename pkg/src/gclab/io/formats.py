"""Text formats for graphs, chains, matrices and simplicial complexes.

Graph block::

    graph <name> vertices=<k> [directed]
    e <u> <v>          one line per edge, in label order, vertices 1-based

Chain files hold graph blocks plus lines ``<num>/<den> <graph-name>``. Blank lines and
``#`` comments are ignored everywhere.
"""

from __future__ import annotations

import re
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from gclab.core.complex import chain_from_terms
from gclab.core.errors import FormatError, GclabError
from gclab.models.chain import ChainVector
from gclab.models.graph import LabelledGraph
from gclab.models.matrix import SparseRationalMatrix
from gclab.models.tree import SimplicialComplex

_HEADER = re.compile(r"^graph\s+(\S+)\s+vertices=(\d+)(\s+directed)?$")
_EDGE = re.compile(r"^e\s+(\d+)\s+(\d+)$")
_TERM = re.compile(r"^(-?\d+)(?:/(\d+))?\s+(\S+)$")


@dataclass(slots=True)
class GraphDocument:
    graphs: dict[str, LabelledGraph] = field(default_factory=dict)
    terms: list[tuple[Fraction, str, int]] = field(default_factory=list)

    def first(self) -> LabelledGraph:
        if not self.graphs:
            raise FormatError("no graph blocks found")
        return next(iter(self.graphs.values()))


def parse_document(text: str, source: str = "") -> GraphDocument:
    doc = GraphDocument()
    current: tuple[str, int, bool, list[tuple[int, int]], int] | None = None

    def close() -> None:
        if current is None:
            return
        name, vertices, directed, edges, line_no = current
        try:
            graph = LabelledGraph.build(vertices, edges, directed=directed, name=name)
        except GclabError as exc:
            raise FormatError(str(exc), line_no, source) from exc
        doc.graphs[name] = graph

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header := _HEADER.match(line):
            close()
            name = header.group(1)
            if name in doc.graphs:
                raise FormatError(f"graph {name} defined twice", line_no, source)
            current = (name, int(header.group(2)), header.group(3) is not None, [], line_no)
        elif edge := _EDGE.match(line):
            if current is None:
                raise FormatError("edge line outside a graph block", line_no, source)
            u, v = int(edge.group(1)), int(edge.group(2))
            if u < 1 or v < 1:
                raise FormatError("vertices are 1-based", line_no, source)
            current[3].append((u - 1, v - 1))
        elif term := _TERM.match(line):
            close()
            current = None
            denominator = int(term.group(2) or 1)
            if denominator == 0:
                raise FormatError("zero denominator", line_no, source)
            doc.terms.append((Fraction(int(term.group(1)), denominator), term.group(3), line_no))
        else:
            raise FormatError(f"cannot parse {line!r}", line_no, source)
    close()
    for _, name, line_no in doc.terms:
        if name not in doc.graphs:
            raise FormatError(f"chain term refers to unknown graph {name}", line_no, source)
    return doc


def read_document(path: str | Path) -> GraphDocument:
    path = Path(path)
    return parse_document(path.read_text(), source=str(path))


def document_chain(doc: GraphDocument, source: str = "") -> ChainVector:
    """The chain spelled by the document's coefficient lines."""
    if not doc.terms:
        raise FormatError("no chain lines found", source=source)
    graphs = [doc.graphs[name] for _, name, _ in doc.terms]
    first = graphs[0]
    for graph, (_, name, line_no) in zip(graphs, doc.terms):
        if graph.grading != first.grading or graph.directed != first.directed:
            raise FormatError(f"graph {name} does not match the chain's grading", line_no, source)
    try:
        return chain_from_terms(
            [(graph, coeff) for graph, (coeff, _, _) in zip(graphs, doc.terms)],
            first.grading,
            first.directed,
        )
    except GclabError as exc:
        raise FormatError(str(exc), source=source) from exc


def format_graph(g: LabelledGraph, name: str | None = None) -> str:
    header = f"graph {name or g.name or 'G'} vertices={g.vertex_count}"
    if g.directed:
        header += " directed"
    lines = [header] + [f"e {u + 1} {v + 1}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def format_chain(c: ChainVector, prefix: str = "G") -> str:
    blocks: list[str] = []
    lines: list[str] = []
    for i, (graph, coeff) in enumerate(c, start=1):
        name = f"{prefix}{i}"
        blocks.append(format_graph(graph, name))
        lines.append(f"{coeff.numerator}/{coeff.denominator} {name}")
    return "".join(blocks) + "".join(line + "\n" for line in lines)


def format_matrix(matrix: SparseRationalMatrix) -> str:
    lines = [f"{matrix.rows} {matrix.cols}"]
    for (r, c), value in sorted(matrix.entries.items()):
        lines.append(f"{r + 1} {c + 1} {value.numerator}/{value.denominator}")
    return "\n".join(lines) + "\n"


def parse_matrix(text: str, source: str = "") -> SparseRationalMatrix:
    rows = [
        (line_no, line.split())
        for line_no, raw in enumerate(text.splitlines(), start=1)
        if (line := raw.strip())
    ]
    if not rows or len(rows[0][1]) != 2:
        raise FormatError("expected a 'rows cols' header", 1, source)
    try:
        shape = int(rows[0][1][0]), int(rows[0][1][1])
        entries: dict[tuple[int, int], Fraction] = {}
        for line_no, parts in rows[1:]:
            if len(parts) != 3:
                raise FormatError("expected 'r c num/den'", line_no, source)
            entries[(int(parts[0]) - 1, int(parts[1]) - 1)] = Fraction(parts[2])
        return SparseRationalMatrix.build(shape[0], shape[1], entries)
    except (ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(str(exc), source=source) from exc


def format_complex(
    complex_: SimplicialComplex, label: Callable[[int], str] = str
) -> str:
    """Vertex list then one line per facet of 1-based vertex indices."""
    index = {v: i for i, v in enumerate(complex_.vertices, start=1)}
    lines = [
        f"complex vertices={len(complex_.vertices)} facets={len(complex_.facets)} "
        f"dim={complex_.dimension}"
    ]
    lines += [f"v {index[v]} {label(v)}" for v in complex_.vertices]
    lines += ["s " + " ".join(str(index[v]) for v in facet) for facet in complex_.facets]
    return "\n".join(lines) + "\n"
