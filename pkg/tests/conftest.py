"""Shared fixtures: three small reference algebras used across the tests.

line:       v --alpha--> w --beta--> x, no relations, truncation 3.
cycle_tail: a 2-cycle on {1,2} with both composites killed, feeding a
            tail 2 -> 3 -> 4; truncation 4.
two_cycles: 2-cycles on {1,2} and {3,4} joined by a bridge 2 -> 3, all
            four cycle composites killed; truncation 4.
"""

import pytest

from quiverhom import QQ, IdealSpec, Quiver, build_algebra


@pytest.fixture(scope="session")
def line_quiver():
    return Quiver.build(["v", "w", "x"], [("alpha", "v", "w"), ("beta", "w", "x")])


@pytest.fixture(scope="session")
def line_ideal():
    return IdealSpec.zero(3)


@pytest.fixture(scope="session")
def line_algebra(line_quiver, line_ideal):
    return build_algebra(line_quiver, line_ideal, QQ)


@pytest.fixture(scope="session")
def cycle_tail_quiver():
    return Quiver.build(
        ["1", "2", "3", "4"],
        [("a", "1", "2"), ("b", "2", "1"), ("c", "2", "3"), ("d", "3", "4")],
    )


@pytest.fixture(scope="session")
def cycle_tail_ideal():
    return IdealSpec.monomial([("a", "b"), ("b", "a")], 4)


@pytest.fixture(scope="session")
def cycle_tail_algebra(cycle_tail_quiver, cycle_tail_ideal):
    return build_algebra(cycle_tail_quiver, cycle_tail_ideal, QQ)


@pytest.fixture(scope="session")
def two_cycles_quiver():
    return Quiver.build(
        ["1", "2", "3", "4"],
        [
            ("a", "1", "2"),
            ("b", "2", "1"),
            ("f", "2", "3"),
            ("c", "3", "4"),
            ("d", "4", "3"),
        ],
    )


@pytest.fixture(scope="session")
def two_cycles_ideal():
    return IdealSpec.monomial([("a", "b"), ("b", "a"), ("c", "d"), ("d", "c")], 4)


@pytest.fixture(scope="session")
def two_cycles_algebra(two_cycles_quiver, two_cycles_ideal):
    return build_algebra(two_cycles_quiver, two_cycles_ideal, QQ)
