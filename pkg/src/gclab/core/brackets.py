"""Graded-symmetric brackets: normal forms, relations with one internal edge, text form.

All brackets are graded symmetric and shift degree by one, so an argument list can be
permuted at the cost of a Koszul sign computed from argument parities.
"""

from __future__ import annotations

import re
import string
from collections.abc import Mapping, Sequence
from itertools import combinations

from gclab.core.errors import FormatError, GclabError
from gclab.models.algebra import N, PLUS, Bracket, Expr, Leaf, Parity, Sign, Term

Relation = list[Term]


def koszul_parity(degrees: Sequence[Parity], perm: Sequence[int]) -> Sign:
    """Symbolic Koszul sign: position i of the result receives the old entry perm[i]."""
    if sorted(perm) != list(range(len(degrees))):
        raise GclabError(f"{list(perm)} is not a permutation of 0..{len(degrees) - 1}")
    total = Parity()
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                total = total + degrees[perm[i]] * degrees[perm[j]]
    return Sign.from_parity(total)


def graded_symmetry(expr: Bracket, perm: Sequence[int]) -> Term:
    """Rewrite a bracket with its top-level arguments permuted: new[i] = old[perm[i]]."""
    sign = koszul_parity([a.degree for a in expr.args], perm)
    return Term(sign, Bracket(tuple(expr.args[i] for i in perm)))


def normalize(expr: Expr) -> Term:
    """Sort arguments recursively by their least leaf name."""
    if isinstance(expr, Leaf):
        return Term(PLUS, expr)
    sign = PLUS
    args: list[Expr] = []
    for arg in expr.args:
        term = normalize(arg)
        sign = sign * term.sign
        args.append(term.expr)
    inner = Bracket(tuple(args))
    perm = sorted(range(len(args)), key=lambda i: args[i].min_name())
    rewritten = graded_symmetry(inner, perm)
    return Term(sign * rewritten.sign, rewritten.expr)


def normalize_relation(relation: Relation) -> Relation:
    out = []
    for term in relation:
        normal = normalize(term.expr)
        out.append(Term(term.sign * normal.sign, normal.expr))
    return sorted(out, key=lambda t: str(t.expr))


def letters(count: int) -> list[str]:
    if count > len(string.ascii_lowercase):
        raise GclabError(f"at most {len(string.ascii_lowercase)} inputs are supported")
    return list(string.ascii_lowercase[:count])


def _unshuffle_sign(degrees: Sequence[Parity], chosen: Sequence[int]) -> Sign:
    rest = [i for i in range(len(degrees)) if i not in chosen]
    return koszul_parity(degrees, [*chosen, *rest])


def linf_relation(leaves: int, degree: Parity = N) -> Relation:
    """The boundary of the top bracket on leaves-1 inputs, one term per internal edge.

    Each subset S with 2 <= |S| <= leaves-2 contributes
    (-1)^(i(j-1)) * eps(S) * [[x_S], x_rest] with i = |S| and j = leaves - i, where eps is
    the Koszul sign of the unshuffle. The result is normalized.
    """
    if leaves < 4:
        raise GclabError(f"relations need at least 4 leaves, got {leaves}")
    names = letters(leaves - 1)
    inputs = [Leaf(name, degree) for name in names]
    degrees = [x.degree for x in inputs]
    relation: Relation = []
    for i in range(2, leaves - 1):
        j = leaves - i
        for chosen in combinations(range(len(inputs)), i):
            sign = _unshuffle_sign(degrees, chosen)
            if i * (j - 1) % 2:
                sign = -sign
            inner = Bracket(tuple(inputs[c] for c in chosen))
            rest = [inputs[c] for c in range(len(inputs)) if c not in chosen]
            relation.append(Term(sign, Bracket((inner, *rest))))
    return normalize_relation(relation)


def jacobi_relation(degrees: tuple[Parity, Parity, Parity]) -> Relation:
    """[[a,b],c] + (-1)^(pq+pr)[[b,c],a] + (-1)^(pr+qr)[[c,a],b] for degrees p, q, r."""
    a, b, c = (Leaf(name, d) for name, d in zip("abc", degrees))
    p, q, r = degrees
    return [
        Term(PLUS, Bracket((Bracket((a, b)), c))),
        Term(Sign.from_parity(p * q + p * r), Bracket((Bracket((b, c)), a))),
        Term(Sign.from_parity(p * r + q * r), Bracket((Bracket((c, a)), b))),
    ]


def as_mapping(relation: Relation) -> dict[str, Sign]:
    """Expression text to sign; duplicate expressions are rejected."""
    out: dict[str, Sign] = {}
    for term in relation:
        key = str(term.expr)
        if key in out:
            raise GclabError(f"expression {key} occurs twice")
        out[key] = term.sign
    return out


def substitute(relation: Relation, renaming: Mapping[str, str]) -> Relation:
    """Rename leaves, then return to normal form."""

    def rename(expr: Expr) -> Expr:
        if isinstance(expr, Leaf):
            return Leaf(renaming.get(expr.name, expr.name), expr.degree)
        return Bracket(tuple(rename(a) for a in expr.args))

    return normalize_relation([Term(t.sign, rename(t.expr)) for t in relation])


def is_equivariant(relation: Relation, first: str, second: str) -> bool:
    """Does swapping two inputs multiply the relation by the Koszul sign of the swap?"""
    degree_of = {leaf.name: leaf.degree for t in relation for leaf in _leaves(t.expr)}
    names = sorted(degree_of)
    if first not in degree_of or second not in degree_of:
        raise GclabError(f"{first} and {second} must both occur in the relation")
    swapped = substitute(relation, {first: second, second: first})
    i, j = names.index(first), names.index(second)
    perm = list(range(len(names)))
    perm[i], perm[j] = perm[j], perm[i]
    factor = koszul_parity([degree_of[name] for name in names], perm)
    expected = {key: factor * sign for key, sign in as_mapping(relation).items()}
    return as_mapping(swapped) == expected


def _leaves(expr: Expr) -> list[Leaf]:
    if isinstance(expr, Leaf):
        return [expr]
    return [leaf for a in expr.args for leaf in _leaves(a)]


def specialize(relation: Relation, n: int) -> Relation:
    """Fix the parity of n: every (-1)^n factor and every input degree becomes a constant."""

    def fix(expr: Expr) -> Expr:
        if isinstance(expr, Leaf):
            return Leaf(expr.name, Parity.of(expr.degree.evaluate(n)))
        return Bracket(tuple(fix(a) for a in expr.args))

    return [Term(Sign(0 if t.sign.evaluate(n) > 0 else 1), fix(t.expr)) for t in relation]


def broken_symmetries(relation: Relation) -> list[tuple[str, str]]:
    """Input swaps under which the relation is not equivariant."""
    names = sorted({leaf.name for t in relation for leaf in _leaves(t.expr)})
    return [pair for pair in combinations(names, 2) if not is_equivariant(relation, *pair)]


def compare_relations(ours: Relation, theirs: Relation) -> tuple[list[str], list[str]]:
    """Expressions whose signs agree, and those that differ or are missing, after normalizing."""
    left = as_mapping(normalize_relation(ours))
    right = as_mapping(normalize_relation(theirs))
    agree = sorted(k for k in left if right.get(k) == left[k])
    differ = sorted((set(left) | set(right)) - set(agree))
    return agree, differ


# text form

_TERM = re.compile(r"^([+-])(\(-1\)\^n)?(\[.*\])$")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def render_relation(relation: Relation) -> str:
    return " ".join(str(term) for term in relation)


def parse_expr(text: str, degree: Parity = N) -> Expr:
    """Parse ``[[a,b],c]``; every leaf gets the same degree."""
    pos = 0

    def fail(message: str) -> FormatError:
        return FormatError(f"{message} at column {pos + 1} of {text!r}")

    def parse() -> Expr:
        nonlocal pos
        if pos < len(text) and text[pos] == "[":
            pos += 1
            args = [parse()]
            while pos < len(text) and text[pos] == ",":
                pos += 1
                args.append(parse())
            if pos >= len(text) or text[pos] != "]":
                raise fail("expected ']'")
            pos += 1
            if len(args) < 2:
                raise fail("brackets take at least two arguments")
            return Bracket(tuple(args))
        match = _NAME.match(text, pos)
        if match is None:
            raise fail("expected a generator name")
        pos = match.end()
        return Leaf(match.group(0), degree)

    expr = parse()
    if pos != len(text):
        raise fail("trailing characters")
    return expr


def parse_relation(text: str, degree: Parity = N) -> Relation:
    """Parse whitespace-separated signed terms, e.g. ``+[[a,b],c] -(-1)^n[a,[b,c]]``."""
    relation: Relation = []
    for token in text.split():
        match = _TERM.match(token)
        if match is None:
            raise FormatError(f"cannot parse term {token!r}")
        sign = Sign(1 if match.group(1) == "-" else 0, 1 if match.group(2) else 0)
        relation.append(Term(sign, parse_expr(match.group(3), degree)))
    return relation
