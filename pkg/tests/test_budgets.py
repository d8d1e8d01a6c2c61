from __future__ import annotations

import logging

import pytest

from strong_blocking_sets import Budgets, build_geometry
from strong_blocking_sets.budgets import budgets, require
from strong_blocking_sets.enumeration import partition, subset_masks, unrank
from strong_blocking_sets.errors import (
    BudgetExceededError,
    GeometryCapError,
    InputValidationError,
)


class TestBudgets:
    def test_defaults(self) -> None:
        caps = Budgets.from_env()
        assert caps.max_k == 8
        assert caps.subsets == 10**9
        assert caps.nodes == 10**9
        assert caps.group_table == 2**24

    def test_environment_override(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("SBS_BUDGET_MAX_POINTS", "20")
        assert Budgets.from_env().max_points == 20
        with pytest.raises(GeometryCapError):
            build_geometry(5, 2)

    def test_mapping(self) -> None:
        caps = budgets({"sbs_budget_trials": "7", "PATH": "/bin"})
        assert caps.trials == 7

    def test_unknown_variable(self, caplog: pytest.LogCaptureFixture) -> None:
        with caplog.at_level(logging.WARNING):
            budgets({"SBS_BUDGET_MEMORY": "1"})
        assert "SBS_BUDGET_MEMORY" in caplog.text

    @pytest.mark.parametrize("value", ["0", "-3", "many"])
    def test_invalid_value(self, value: str) -> None:
        with pytest.raises(InputValidationError):
            budgets({"SBS_BUDGET_NODES": value})

    def test_require(self) -> None:
        require("subsets", 10, 10)
        with pytest.raises(BudgetExceededError) as info:
            require("subsets", 11, 10, hint="Try less.")
        assert info.value.required == 11
        assert info.value.budget == 10
        assert str(info.value).endswith("Try less.")


class TestEnumeration:
    def test_unrank_is_lexicographic(self) -> None:
        assert [unrank(r, 4, 2) for r in range(6)] == [
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (2, 3),
        ]

    def test_unrank_range(self) -> None:
        with pytest.raises(InputValidationError):
            unrank(6, 4, 2)

    def test_ranges_concatenate(self) -> None:
        whole = list(subset_masks(9, 4))
        pieces = [
            mask
            for start, stop in partition(len(whole), 5)
            for mask in subset_masks(9, 4, start, stop)
        ]
        assert pieces == whole
        assert len(set(whole)) == 126

    def test_partition(self) -> None:
        assert partition(10, 3) == [(0, 3), (3, 6), (6, 10)]
        assert partition(2, 4) == [(0, 0), (0, 1), (1, 1), (1, 2)]
