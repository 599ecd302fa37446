import random

import pytest

from dressian.rational import QQ, ZERO, dot
from dressian.simplex import maximize, relative_interior_point


def test_maximize_simple():
    value, x = maximize([QQ(1)], [[QQ(1)]], [QQ(5)])
    assert value == 5 and x == [5]


def test_maximize_two_vars():
    # max x + y s.t. x + 2y <= 4, 3x + y <= 6
    value, x = maximize(
        [QQ(1), QQ(1)],
        [[QQ(1), QQ(2)], [QQ(3), QQ(1)]],
        [QQ(4), QQ(6)],
    )
    assert value == QQ(14, 5)
    assert x == [QQ(8, 5), QQ(6, 5)]


def test_maximize_rejects_negative_rhs():
    with pytest.raises(ValueError):
        maximize([QQ(1)], [[QQ(1)]], [QQ(-1)])


def test_maximize_degenerate_terminates():
    # Klee-Minty-flavoured degeneracy; Bland's rule must not cycle.
    value, _ = maximize(
        [QQ(1), QQ(1), QQ(1)],
        [
            [QQ(1), QQ(0), QQ(0)],
            [QQ(1), QQ(1), QQ(0)],
            [QQ(1), QQ(1), QQ(1)],
            [QQ(1), QQ(0), QQ(1)],
        ],
        [ZERO, ZERO, QQ(1), QQ(1)],
    )
    assert value == 1


def test_relative_interior_no_stricts():
    point = relative_interior_point([[QQ(1), QQ(1)]], [], 2)
    assert point == [ZERO, ZERO]


def test_relative_interior_feasible():
    eqs = [[QQ(1), QQ(1), QQ(0)]]
    stricts = [[QQ(1), QQ(-1), QQ(0)], [QQ(0), QQ(0), QQ(-1)]]
    point = relative_interior_point(eqs, stricts, 3)
    assert point is not None
    assert dot(eqs[0], point) == 0
    assert all(dot(f, point) < 0 for f in stricts)


def test_relative_interior_infeasible():
    # f < 0 and -f < 0 cannot hold together.
    assert relative_interior_point(
        [], [[QQ(1), QQ(0)], [QQ(-1), QQ(0)]], 2
    ) is None
    # Equalities forcing the only candidate to zero.
    assert relative_interior_point(
        [[QQ(1), QQ(0)], [QQ(0), QQ(1)]], [[QQ(-1), QQ(-1)]], 2
    ) is None


def test_relative_interior_random_soundness():
    random.seed(5)
    feasible = 0
    for _ in range(40):
        dim = random.randint(2, 5)
        eqs = [
            [QQ(random.randint(-3, 3)) for _ in range(dim)]
            for _ in range(random.randint(0, 2))
        ]
        stricts = [
            [QQ(random.randint(-3, 3)) for _ in range(dim)]
            for _ in range(random.randint(1, 4))
        ]
        point = relative_interior_point(eqs, stricts, dim)
        if point is not None:
            feasible += 1
            assert all(dot(e, point) == 0 for e in eqs)
            assert all(dot(f, point) < 0 for f in stricts)
    assert feasible > 0
