"""Tests for Newick-style tree text."""

from __future__ import annotations

import pytest

from gclab.core.errors import FormatError
from gclab.core.trees import corolla, direction_extensions, enumerate_trees
from gclab.io.newick import format_tree, parse_tree
from gclab.models.tree import Tree


class TestFormat:
    def test_corolla(self) -> None:
        assert format_tree(corolla(4)) == "(2,3,4)1;"

    def test_nested_clade(self) -> None:
        assert format_tree(Tree(5, (0b11000,))) == "(2,3,(4,5))1;"

    def test_directed_suffix(self) -> None:
        directed = Tree(5, (0b11000,), (True,), 2)
        assert format_tree(directed) == "(2,3,(4,5)+)1; p=2"

    def test_every_tree_reads_back(self) -> None:
        for tree in enumerate_trees(6, 0) + enumerate_trees(6, 2):
            assert parse_tree(format_tree(tree)) == tree

    def test_directed_trees_read_back(self) -> None:
        tree = enumerate_trees(5, 0)[3]
        for directed in direction_extensions(tree, 2, 3):
            assert parse_tree(format_tree(directed)) == directed


class TestParse:
    def test_order_of_clades_is_irrelevant(self) -> None:
        assert parse_tree("((4,5),3,2)1;") == parse_tree("(2,3,(5,4))1;")

    def test_whitespace(self) -> None:
        assert parse_tree("  (2,3,4)1;\n") == corolla(4)

    def test_missing_root(self) -> None:
        with pytest.raises(FormatError, match="expected '1'"):
            parse_tree("(2,3,4);")

    def test_reports_line(self) -> None:
        with pytest.raises(FormatError, match="trees.nwk:7:") as info:
            parse_tree("(2,3,)1;", source="trees.nwk", line=7)
        assert info.value.line == 7

    def test_bad_labels(self) -> None:
        with pytest.raises(FormatError, match="exactly once"):
            parse_tree("(2,2,4)1;")

    def test_mixed_directions(self) -> None:
        with pytest.raises(FormatError, match="every clade or none"):
            parse_tree("((2,3)+,(4,5),6)1;")

    def test_small_clade(self) -> None:
        with pytest.raises(FormatError, match="between 2"):
            parse_tree("((2),3,4)1;")

    def test_trailing_text(self) -> None:
        with pytest.raises(FormatError, match="trailing"):
            parse_tree("(2,3,4)1;x")
