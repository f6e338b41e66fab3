"""Newick-style tree text rooted at leaf 1.

``(2,3,(4,5)+)1;`` is the tree whose only internal edge separates {4,5}; the optional
``+``/``-`` after a clade says the edge points out of / into that clade. Directed trees
carry `` p=<incoming leaves>`` after the semicolon.
"""

from __future__ import annotations

import re

from gclab.core.errors import FormatError
from gclab.models.tree import Tree, leaf_set

_SUFFIX = re.compile(r"\s+p=(\d+)$")


def _children(tree: Tree, node: int) -> list[int | tuple[int]]:
    below = [s for s in tree.splits if s != node and s & node == s]
    maximal = [s for s in below if not any(s != t and s & t == s for t in below)]
    covered = 0
    for s in maximal:
        covered |= s
    items: list[int | tuple[int]] = [(s,) for s in maximal]
    items += leaf_set(node & ~covered)
    return sorted(items, key=lambda x: min(leaf_set(x[0])) if isinstance(x, tuple) else x)


def _render(tree: Tree, node: int) -> str:
    parts: list[str] = []
    for child in _children(tree, node):
        if isinstance(child, tuple):
            clade = child[0]
            text = "(" + _render(tree, clade) + ")"
            direction = tree.direction_of(clade)
            if direction is not None:
                text += "+" if direction else "-"
            parts.append(text)
        else:
            parts.append(str(child))
    return ",".join(parts)


def format_tree(tree: Tree) -> str:
    root = (1 << tree.leaves) - 2
    text = "(" + _render(tree, root) + ")1;"
    if tree.incoming is not None:
        text += f" p={tree.incoming}"
    return text


class _Parser:
    def __init__(self, text: str, source: str, line: int | None) -> None:
        self.text = text
        self.pos = 0
        self.source = source
        self.line = line
        self.labels: list[int] = []
        self.clades: list[tuple[int, bool | None]] = []

    def fail(self, message: str) -> FormatError:
        return FormatError(f"{message} at column {self.pos + 1}", self.line, self.source)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str) -> None:
        if self.peek() != char:
            raise self.fail(f"expected {char!r}")
        self.pos += 1

    def group(self) -> int:
        self.expect("(")
        mask = self.item()
        while self.peek() == ",":
            self.pos += 1
            mask |= self.item()
        self.expect(")")
        return mask

    def item(self) -> int:
        if self.peek() == "(":
            mask = self.group()
            direction: bool | None = None
            if self.peek() in ("+", "-"):
                direction = self.peek() == "+"
                self.pos += 1
            self.clades.append((mask, direction))
            return mask
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.fail("expected a leaf label")
        label = int(self.text[start : self.pos])
        self.labels.append(label)
        return 1 << (label - 1)


def parse_tree(text: str, source: str = "", line: int | None = None) -> Tree:
    body = text.strip()
    incoming: int | None = None
    if suffix := _SUFFIX.search(body):
        incoming = int(suffix.group(1))
        body = body[: suffix.start()]
    parser = _Parser(body, source, line)
    parser.group()
    parser.expect("1")
    parser.expect(";")
    if parser.pos != len(body):
        raise parser.fail("trailing characters")
    leaves = len(parser.labels) + 1
    if sorted(parser.labels) != list(range(2, leaves + 1)):
        raise FormatError(f"leaf labels must be 2..{leaves} exactly once", line, source)
    directions = [d for _, d in parser.clades]
    if any(d is None for d in directions) and any(d is not None for d in directions):
        raise FormatError("either every clade or none carries a direction", line, source)
    pairs = sorted(parser.clades, key=lambda clade: clade[0])
    for mask, _ in pairs:
        if not 2 <= bin(mask).count("1") <= leaves - 2:
            raise FormatError("clades must hold between 2 and l-2 leaves", line, source)
    splits = tuple(mask for mask, _ in pairs)
    if len(set(splits)) != len(splits):
        raise FormatError("repeated clade", line, source)
    oriented = None if not pairs or pairs[0][1] is None else tuple(bool(d) for _, d in pairs)
    return Tree(leaves, splits, oriented, incoming)
