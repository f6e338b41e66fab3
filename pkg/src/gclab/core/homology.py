"""Boundary matrices, homology dimensions and the cochain pairing."""

from __future__ import annotations

from fractions import Fraction

from gclab.core.basis import basis, basis_index
from gclab.core.canonical import automorphism_order, canonicalize, forget_directions
from gclab.core.errors import GclabError
from gclab.core.linalg import rank
from gclab.models.chain import ChainVector
from gclab.models.config import RunConfig
from gclab.models.graph import OrientedClass
from gclab.models.matrix import SparseRationalMatrix
from gclab.pipeline.runner import assemble_columns


def boundary_matrix(
    n: int, m: int, directed: bool = False, config: RunConfig | None = None
) -> SparseRationalMatrix:
    """Matrix of the differential GC^(n,m) -> GC^(n,m-1) in the sorted canonical bases."""
    config = config or RunConfig()
    sources = basis(n, m, directed, config.loops)
    targets = basis(n, m - 1, directed, config.loops) if m >= 1 else ()
    if not sources or not targets:
        return SparseRationalMatrix(rows=len(targets), cols=len(sources))
    return assemble_columns(
        [cls.canonical for cls in sources],
        basis_index(targets),
        config,
        label=f"Boundary ({n},{m})",
    )


def homology_dim(
    n: int,
    m: int,
    mu: int | None = None,
    directed: bool = False,
    config: RunConfig | None = None,
) -> int:
    """dim H_(n,m) of the complex truncated above excess mu (default 2n-1, no truncation)."""
    mu = 2 * n - 1 if mu is None else mu
    if m > mu:
        raise GclabError(f"excess {m} lies above the truncation level {mu}")
    if m < 0:
        raise GclabError(f"excess must be nonnegative, got {m}")
    config = config or RunConfig()
    chains = len(basis(n, m, directed, config.loops))
    outgoing = rank(boundary_matrix(n, m, directed, config)) if m >= 1 else 0
    incoming = rank(boundary_matrix(n, m + 1, directed, config)) if m < mu else 0
    return chains - outgoing - incoming


def euler_characteristic(
    n: int, mu: int | None = None, directed: bool = False, config: RunConfig | None = None
) -> int:
    """Alternating sum of chain dimensions over excess 0..mu."""
    mu = 2 * n - 1 if mu is None else mu
    loops = (config or RunConfig()).loops
    return sum((-1) ** m * len(basis(n, m, directed, loops)) for m in range(mu + 1))


def pairing(cochain: OrientedClass, c: ChainVector) -> Fraction:
    """Pair the dual of an oriented class with a chain.

    Each term is compared with the cochain's graph after forgetting directions; matches
    contribute coefficient * orientation sign * |Aut| of the undirected graph.
    """
    if cochain.vanishes:
        return Fraction(0)
    order = automorphism_order(cochain.canonical)
    total = Fraction(0)
    for graph, coeff in c.terms.items():
        underlying = forget_directions(graph) if graph.directed else graph
        oriented = canonicalize(underlying)
        if oriented.vanishes or oriented.canonical != cochain.canonical:
            continue
        total += coeff * oriented.sign * cochain.sign * order
    return total
