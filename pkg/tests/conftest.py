"""Shared fixtures and the `--runslow` option."""

from __future__ import annotations

import os
from typing import TYPE_CHECKING

import pytest

from strong_blocking_sets import (
    Geometry,
    Group,
    build_geometry,
    build_group,
    hyperbolic_quadric,
)

if TYPE_CHECKING:
    from strong_blocking_sets import PointSet


def pytest_addoption(parser: pytest.Parser) -> None:
    parser.addoption(
        "--runslow",
        action="store_true",
        default=False,
        help="run long exhaustive and randomized searches",
    )


def pytest_collection_modifyitems(
    config: pytest.Config,
    items: list[pytest.Item],
) -> None:
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(autouse=True)
def clean_budgets(monkeypatch: pytest.MonkeyPatch) -> None:
    for key in [k for k in os.environ if k.startswith("SBS_BUDGET_")]:
        monkeypatch.delenv(key)


@pytest.fixture(scope="session")
def pg22() -> Geometry:
    return build_geometry(3, 2)


@pytest.fixture(scope="session")
def pg32() -> Geometry:
    return build_geometry(4, 2)


@pytest.fixture(scope="session")
def pg42() -> Geometry:
    return build_geometry(5, 2)


@pytest.fixture(scope="session")
def gl42(pg32: Geometry) -> Group:
    return build_group(pg32)


@pytest.fixture(scope="session")
def quadric(pg32: Geometry) -> PointSet:
    return hyperbolic_quadric(pg32)
