"""Koszul signs, half-edge orientations and the boundary signs of a triple product.

Half-edges of a directed edge e carry degrees deg e+ = k-1 (the head end) and
deg e- = k (the tail end); only the parity of k matters.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import lru_cache

from gclab.core.errors import GclabError, GraphError
from gclab.models.algebra import Generator, GradedWord
from gclab.models.graph import HalfEdge, LabelledGraph, half_edges_at
from gclab.utils import permutation_sign


def _check_permutation(perm: Sequence[int], size: int) -> None:
    if sorted(perm) != list(range(size)):
        raise GclabError(f"{list(perm)} is not a permutation of 0..{size - 1}")


def koszul_sign(degrees: Sequence[int], perm: Sequence[int]) -> int:
    """Sign of reordering a word so that position i receives the old factor perm[i]."""
    _check_permutation(perm, len(degrees))
    odd = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                odd += degrees[perm[i]] * degrees[perm[j]]
    return -1 if odd % 2 else 1


def reorder_sign(source: Sequence[Generator], target: Sequence[Generator]) -> int:
    """Koszul sign carrying one word to a rearrangement of itself."""
    position = {g: i for i, g in enumerate(source)}
    if len(position) != len(source) or len(target) != len(source) or set(target) != set(source):
        raise GclabError("target is not a rearrangement of the source word")
    return koszul_sign([g.degree for g in source], [position[g] for g in target])


def suspension_sign(r: int, d: int) -> int:
    """Moving the last of r factors of degree d to the front: (-1)^((r-1)d)."""
    return -1 if (r - 1) * d % 2 else 1


# half-edge orientation


def _plus(label: int, k_parity: int) -> Generator:
    return Generator(f"e{label}+", (k_parity - 1) % 2)


def _minus(label: int, k_parity: int) -> Generator:
    return Generator(f"e{label}-", k_parity % 2)


def _generator(half_edge: HalfEdge, k_parity: int, shift: int = 0) -> Generator:
    label = half_edge[0] + 1 + shift
    # end 1 is the head, where the edge comes in
    return _plus(label, k_parity) if half_edge[1] == 1 else _minus(label, k_parity)


def vertex_word(g: LabelledGraph, v: int, k_parity: int) -> GradedWord:
    """o(v): incoming e+ factors, then outgoing e- factors, each in label order."""
    incoming = [h for h in half_edges_at(g, v) if h[1] == 1]
    outgoing = [h for h in half_edges_at(g, v) if h[1] == 0]
    return GradedWord(tuple(_generator(h, k_parity) for h in incoming + outgoing))


def edge_word(g: LabelledGraph, k_parity: int) -> GradedWord:
    """The edge-ordered product e1+ e1- e2+ e2- ..."""
    factors: list[Generator] = []
    for label in range(1, g.edge_count + 1):
        factors += [_plus(label, k_parity), _minus(label, k_parity)]
    return GradedWord(tuple(factors))


@dataclass(frozen=True, slots=True)
class HalfEdgeOrientation:
    """Vertex words with the sign picked up extracting each from the edge-ordered word."""

    words: tuple[GradedWord, ...]
    vertex_signs: tuple[int, ...]
    sign: int = field(init=False)

    def __post_init__(self) -> None:
        total = 1
        for s in self.vertex_signs:
            total *= s
        object.__setattr__(self, "sign", total)

    def factors(self) -> list[str]:
        """Signed vertex factors, e.g. ``-(e7+ e5- e8-)``."""
        return [
            ("-" if s < 0 else "") + str(word)
            for word, s in zip(self.words, self.vertex_signs)
        ]


@lru_cache(maxsize=4096)
def half_edge_orientation(g: LabelledGraph, k_parity: int) -> HalfEdgeOrientation:
    """Rewrite the edge-ordered product as a signed product of vertex words.

    Vertex words are pulled to the front of what remains of the edge word one vertex at a
    time, in vertex order; the product of the per-vertex signs is the global sign.
    """
    if not g.directed:
        raise GraphError("half-edge orientations need a directed graph")
    remaining = list(edge_word(g, k_parity).generators)
    words: list[GradedWord] = []
    signs: list[int] = []
    for v in range(g.vertex_count):
        word = vertex_word(g, v, k_parity)
        taken = set(word.generators)
        rest = [x for x in remaining if x not in taken]
        signs.append(reorder_sign(remaining, list(word.generators) + rest))
        words.append(word)
        remaining = rest
    return HalfEdgeOrientation(tuple(words), tuple(signs))


def split_sign(
    g: LabelledGraph, v: int, second: frozenset[HalfEdge], k_parity: int
) -> int:
    """Koszul sign of (e0+ e0-) o(v) = o(v1) o(v2) for the split moving `second` to v2.

    The new edge e0 runs v1 -> v2 and precedes every old edge, so e0- is the first
    outgoing factor of o(v1) and e0+ the first incoming factor of o(v2).
    """
    if not g.directed:
        raise GraphError("split signs need a directed graph")
    at_v = half_edges_at(g, v)
    if len(at_v) < 4:
        raise GraphError(f"vertex {v + 1} has valence {len(at_v)}; splitting needs >= 4")
    if not second <= set(at_v) or not 2 <= len(second) <= len(at_v) - 2:
        raise GraphError("second block must hold 2..d-2 half-edges at the vertex")

    def ordered(block: list[HalfEdge]) -> tuple[list[Generator], list[Generator]]:
        incoming = [_generator(h, k_parity, 1) for h in block if h[1] == 1]
        outgoing = [_generator(h, k_parity, 1) for h in block if h[1] == 0]
        return incoming, outgoing

    new_plus, new_minus = _plus(1, k_parity), _minus(1, k_parity)
    v_in, v_out = ordered(at_v)
    first_in, first_out = ordered([h for h in at_v if h not in second])
    second_in, second_out = ordered([h for h in at_v if h in second])
    source = [new_plus, new_minus, *v_in, *v_out]
    target = [*first_in, new_minus, *first_out, new_plus, *second_in, *second_out]
    return reorder_sign(source, target)


def split_orientation_sign(
    g: LabelledGraph,
    v: int,
    second: frozenset[HalfEdge],
    split: LabelledGraph,
    k_parity: int = 0,
) -> int:
    """Coefficient of `split`, oriented by its edge word, in the half-edge boundary of g.

    The edge word of g is rewritten as vertex words, o(v) is traded for o(v) o(w) by
    split_sign and the result is read back as the edge word of `split`, whose new vertex
    w comes last. The value does not depend on the parity of k.
    """
    before = half_edge_orientation(g, k_parity)
    after = half_edge_orientation(split, k_parity)
    degrees = [word.degree for word in before.words]
    # the new edge pair is odd; o(w) then moves past the later vertex words
    passed = sum(degrees[:v]) + after.words[-1].degree * sum(degrees[v + 1 :])
    sign = -1 if passed % 2 else 1
    return before.sign * sign * split_sign(g, v, second, k_parity) * after.sign


# triple brackets


def _face(word: tuple[str, ...], symbol: str) -> tuple[int, tuple[str, ...]]:
    """Boundary face dropping one coordinate, with the sign of its position."""
    index = word.index(symbol)
    return (-1 if index % 2 else 1), word[:index] + word[index + 1 :]


def _frame(block: str, size: int) -> tuple[str, ...]:
    return tuple(f"{block}{i}" for i in range(1, size + 1))


def _face_sign(dims: dict[str, int], outer: str, pair: tuple[str, str]) -> int:
    """Compare the two orientations of the face where `pair` collapses first then `outer`.

    One comes from the product orientation of the three disks, the other from building
    the inner bracket on the pair and then the outer bracket.
    """
    order = "abc"
    product = _frame("a", dims["a"]) + _frame("b", dims["b"]) + _frame("c", dims["c"])
    first_inner = min(pair, key=order.index)

    sign_1, face = _face(product, f"{outer}1")
    sign_2, face = _face(face, f"{first_inner}1")
    from_product = -sign_1 * sign_2

    pair_frame = _frame(pair[0], dims[pair[0]]) + _frame(pair[1], dims[pair[1]])
    sign_3, inner = _face(pair_frame, f"{first_inner}1")
    sign_4, nested = _face(inner + _frame(outer, dims[outer]), f"{outer}1")
    position = {s: i for i, s in enumerate(nested)}
    sign_5 = permutation_sign([position[s] for s in face])
    return from_product * sign_3 * sign_4 * sign_5


def jacobi_signs(p: int, q: int, r: int) -> tuple[int, int, int]:
    """Coefficients of [[a,b],c], [[b,c],a], [[c,a],b] in the boundary of [a,b,c]."""
    if min(p, q, r) < 2:
        raise GclabError(f"disk dimensions must be >= 2, got ({p}, {q}, {r})")
    dims = {"a": p, "b": q, "c": r}
    return (
        _face_sign(dims, "c", ("a", "b")),
        _face_sign(dims, "a", ("b", "c")),
        _face_sign(dims, "b", ("c", "a")),
    )


def jacobi_closed_form(p: int, q: int, r: int) -> tuple[int, int, int]:
    return (
        1,
        -1 if (p * q + p * r) % 2 else 1,
        -1 if (p * r + q * r) % 2 else 1,
    )
