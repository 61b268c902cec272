"""Shared group fixtures for the test suite."""
from __future__ import annotations

import pytest

from motionwalk.families import (
    cyclic_table,
    negation_group,
    rotation_group,
    scaling_group,
    swap_group,
    trivial_group,
)
from motionwalk.groups import MotionGroup

__all__ = [
    "cyclic_table",
    "trivial_group",
    "negation_group",
    "scaling_group",
    "swap_group",
    "rotation_group",
]


@pytest.fixture(scope="session")
def order10() -> MotionGroup:
    return negation_group(5)


@pytest.fixture(scope="session")
def z2() -> MotionGroup:
    return trivial_group(2)


@pytest.fixture(scope="session")
def order16() -> MotionGroup:
    return negation_group(8)


@pytest.fixture(scope="session")
def order21() -> MotionGroup:
    # 2 has multiplicative order 3 mod 7
    return scaling_group(7, 2, 3)


@pytest.fixture(scope="session")
def order20() -> MotionGroup:
    # 2 has multiplicative order 4 mod 5
    return scaling_group(5, 2, 4)


@pytest.fixture(scope="session")
def order18() -> MotionGroup:
    return swap_group(3)
