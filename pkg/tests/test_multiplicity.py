"""Tests for the multiplicity recursion, its divisibility and the YAML ledger."""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from gclab.cli.common import bundled
from gclab.core.errors import LedgerError
from gclab.core.multiplicity import (
    check_divisibility,
    check_integrality,
    load_ledger,
    multiplicity,
    n_sigma,
    numeric_multiplicities,
    symbolic_boundary,
    symbolic_multiplicity,
    valence_multisets,
)
from gclab.models.ledger import Monomial, MultiplicityLedger


class TestMonomial:
    def test_product_and_text(self) -> None:
        q5 = Monomial.symbol("q5")
        assert str(Monomial(4) * q5 * q5) == "4*q5^2"
        assert str(Monomial(1)) == "1"

    def test_lcm_takes_max_exponent(self) -> None:
        a = Monomial(20, (("q5", 1),))
        b = Monomial(16, (("q5", 2),))
        assert a.lcm(b) == Monomial(80, (("q5", 2),))

    def test_divides(self) -> None:
        assert Monomial(4).divides(Monomial(20, (("q5", 1),)))
        assert not Monomial(1, (("r5", 1),)).divides(Monomial(20, (("q5", 1),)))

    def test_evaluate(self) -> None:
        assert Monomial(20, (("q5", 1), ("r5", 1))).evaluate({"q5": 2, "r5": 3}) == 120
        with pytest.raises(LedgerError, match="r5"):
            Monomial(1, (("r5", 1),)).evaluate({})


class TestRecursion:
    def test_base_values(self) -> None:
        assert str(symbolic_multiplicity(3)) == "1"
        assert str(symbolic_multiplicity(4)) == "4"
        assert str(symbolic_multiplicity(5)) == "20*q5*r5"

    def test_six_leaf_boundary(self) -> None:
        assert str(symbolic_boundary(6)) == "80*q5*r5"
        result = multiplicity(6)
        assert result.boundary == 80
        assert result.value == 480
        assert result.n_top == 8

    def test_parameters_enter(self) -> None:
        values = numeric_multiplicities(6, MultiplicityLedger(q={5: 2}, r={5: 3}))
        assert values[5] == 120
        assert values[6] == 6 * 240

    @pytest.mark.parametrize("leaves", range(5, 10))
    def test_symbolic_divisibility(self, leaves: int) -> None:
        assert all(symbolic and numeric for _, _, symbolic, numeric in check_divisibility(leaves))

    def test_random_ledgers(self) -> None:
        rng = np.random.default_rng(7)
        for _ in range(1000):
            q = {v: int(x) for v, x in zip(range(5, 10), rng.integers(1, 13, size=5))}
            r = {v: int(x) for v, x in zip(range(5, 10), rng.integers(1, 13, size=5))}
            ledger = MultiplicityLedger(q=q, r=r)
            values = numeric_multiplicities(9, ledger)
            for leaves in range(5, 10):
                for p in range(2, leaves - 1):
                    assert values[leaves] % (values[p + 1] * values[leaves - p + 1]) == 0

    def test_symbolic_matches_numeric_at_units(self) -> None:
        values = numeric_multiplicities(7, MultiplicityLedger())
        params = MultiplicityLedger().values(7)
        for leaves in range(3, 8):
            assert symbolic_multiplicity(leaves).evaluate(params) == values[leaves]

    def test_below_three(self) -> None:
        with pytest.raises(LedgerError):
            symbolic_multiplicity(2)


class TestIntegrality:
    def test_valence_multisets(self) -> None:
        assert valence_multisets(6, 2) == [(5, 3), (4, 4)]
        assert valence_multisets(6, 3) == [(4, 3, 3)]
        assert valence_multisets(6, 4) == [(3, 3, 3, 3)]

    @pytest.mark.parametrize("leaves", range(5, 9))
    def test_every_face_is_integral(self, leaves: int) -> None:
        checks = check_integrality(leaves)
        assert checks
        assert all(check.integral for check in checks)

    def test_six_leaf_coefficients(self) -> None:
        coefficients = {c.valences: c.coefficient for c in check_integrality(6)}
        assert coefficients[(5, 3)] == "80/20"
        assert coefficients[(4, 4)] == "80/16"

    def test_n_sigma(self) -> None:
        assert [n_sigma(e) for e in range(4)] == [1, 2, 4, 8]
        with pytest.raises(LedgerError):
            n_sigma(-1)


class TestLedger:
    def test_bundled(self) -> None:
        ledger = load_ledger(bundled("ledger.yaml"))
        assert ledger.q == {5: 1, 6: 1}
        assert ledger.r == {5: 1, 6: 1}

    def test_unknown_keys_ignored(self, tmp_path: Path) -> None:
        path = tmp_path / "ledger.yaml"
        path.write_text("q:\n  5: 3\nnotes: hand-picked\n")
        ledger = load_ledger(path)
        assert ledger.q == {5: 3}
        assert ledger.r == {}

    def test_empty_file(self, tmp_path: Path) -> None:
        path = tmp_path / "ledger.yaml"
        path.write_text("")
        assert load_ledger(path) == MultiplicityLedger()

    @pytest.mark.parametrize(
        "body,message",
        [
            ("q:\n  5: 0\n", "positive integer"),
            ("r:\n  5: 1.5\n", "positive integer"),
            ("q: [1, 2]\n", "must map"),
            ("q:\n  five: 2\n", "non-integer valence"),
        ],
    )
    def test_rejected(self, tmp_path: Path, body: str, message: str) -> None:
        path = tmp_path / "ledger.yaml"
        path.write_text(body)
        with pytest.raises(LedgerError, match=message):
            load_ledger(path)

    def test_booleans_rejected(self) -> None:
        with pytest.raises(LedgerError):
            MultiplicityLedger(q={5: True})
