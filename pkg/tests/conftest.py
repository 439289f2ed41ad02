"""Shared fixtures: worked tableaux exercised across the test modules."""

import pytest

from dominotab.pavings import Domino
from dominotab.domino_tableaux import make_domino_tableau
from dominotab.tableaux import (
    PLAIN,
    SET_VALUED,
    SHIFTED,
    SHIFTED_SET_VALUED,
    make_tableau,
    parse_fill,
)


def dt(family, shape, pieces):
    """Build a domino tableau from (row, col, 'H'|'V', fill-text) tuples."""
    return make_domino_tableau(
        family,
        shape,
        [(Domino(r, c, o == "H"), parse_fill(f)) for r, c, o, f in pieces],
    )


def tb(family, shape, rows):
    return make_tableau(family, shape, [[parse_fill(x) for x in row] for row in rows])


@pytest.fixture
def plain_example():
    """Plain domino tableau of shape (5,4,2,1), reading word 2 / 1,3 / 1,6 / 5."""
    return dt(
        PLAIN,
        (5, 4, 2, 1),
        [
            (1, 1, "V", "1"),
            (3, 1, "V", "2"),
            (1, 2, "H", "1"),
            (2, 2, "V", "3"),
            (1, 4, "H", "5"),
            (2, 3, "H", "6"),
        ],
    )


@pytest.fixture
def plain_bijection_case():
    """The worked plain split: shape (6,4,4,2,1,1) versus its two halves."""
    T = dt(
        PLAIN,
        (6, 4, 4, 2, 1, 1),
        [
            (1, 1, "H", "1"),
            (2, 1, "V", "2"),
            (2, 2, "V", "2"),
            (1, 3, "V", "2"),
            (1, 4, "V", "3"),
            (1, 5, "H", "4"),
            (3, 3, "H", "4"),
            (4, 1, "H", "3"),
            (5, 1, "V", "4"),
        ],
    )
    t1 = tb(PLAIN, (2, 1, 1), [["2", "2"], ["3"], ["4"]])
    t2 = tb(PLAIN, (3, 2), [["1", "3", "4"], ["2", "4"]])
    return T, t1, t2


@pytest.fixture
def set_valued_example():
    """Set-valued domino tableau of shape (6,5,5,3,1) with |T| = 17."""
    return dt(
        SET_VALUED,
        (6, 5, 5, 3, 1),
        [
            (1, 1, "H", "{1,2}"),
            (2, 1, "V", "{3,4}"),
            (2, 2, "V", "3"),
            (1, 3, "V", "{3,7}"),
            (1, 4, "V", "{4,6}"),
            (1, 5, "H", "{6,8}"),
            (2, 5, "V", "9"),
            (3, 3, "H", "{7,8,9}"),
            (4, 2, "H", "10"),
            (4, 1, "V", "5"),
        ],
    )


@pytest.fixture
def set_valued_bijection_case():
    """The worked set-valued split: shape (6,4,2,2) versus its halves."""
    T = dt(
        SET_VALUED,
        (6, 4, 2, 2),
        [
            (1, 1, "H", "{1,2}"),
            (2, 1, "V", "{3,6}"),
            (2, 2, "V", "{3,4}"),
            (1, 3, "V", "{4,7}"),
            (1, 4, "V", "4"),
            (1, 5, "H", "{4,5,6}"),
            (4, 1, "H", "5"),
        ],
    )
    t1 = tb(SET_VALUED, (2, 1), [["{3,4}", "{4,7}"], ["5"]])
    t2 = tb(SET_VALUED, (3, 1), [["{1,2}", "4", "{4,5,6}"], ["{3,6}"]])
    return T, t1, t2


SHIFTED_UP = [
    (1, 1, "V", "1'"),
    (1, 2, "V", "1"),
    (1, 3, "V", "1"),
    (1, 4, "V", "2'"),
    (1, 5, "H", "3'"),
    (1, 7, "H", "3"),
    (2, 6, "H", "4"),
    (2, 5, "V", "3'"),
    (3, 3, "H", "2'"),
    (4, 4, "H", "3'"),
    (5, 4, "H", "3"),
]


@pytest.fixture
def shifted_equivalent_triple():
    """Three equivalent shifted domino tableaux of shape (8,7,5,5,5)."""
    shape = (8, 7, 5, 5, 5)
    T = dt(
        SHIFTED,
        shape,
        SHIFTED_UP
        + [(3, 1, "V", "X"), (3, 2, "V", "X"), (4, 3, "V", "X"), (5, 1, "H", "X")],
    )
    Tp = dt(
        SHIFTED,
        shape,
        SHIFTED_UP
        + [(3, 1, "H", "X"), (4, 1, "H", "X"), (4, 3, "V", "X"), (5, 1, "H", "X")],
    )
    Tpp = dt(
        SHIFTED,
        shape,
        SHIFTED_UP
        + [(3, 1, "H", "X"), (4, 1, "V", "X"), (4, 2, "H", "X"), (5, 2, "H", "X")],
    )
    return T, Tp, Tpp


@pytest.fixture
def shifted_bijection_case(shifted_equivalent_triple):
    T = shifted_equivalent_triple[0]
    t1 = tb(SHIFTED, (2, 2), [["1'", "1"], ["X", "3"]])
    t2 = tb(
        SHIFTED,
        (4, 4, 3),
        [["1", "2'", "3'", "3"], ["X", "2'", "3'", "4"], ["X", "X", "3'"]],
    )
    return T, t1, t2


@pytest.fixture
def shifted_set_valued_bijection_case():
    """The worked shifted set-valued split: shape (6,5,5,5,1)."""
    T = dt(
        SHIFTED_SET_VALUED,
        (6, 5, 5, 5, 1),
        [
            (1, 1, "V", "{1',1}"),
            (1, 2, "V", "1"),
            (1, 3, "H", "2'"),
            (1, 5, "H", "{2,3'}"),
            (2, 3, "H", "{2',2}"),
            (3, 1, "H", "X"),
            (3, 3, "H", "{3',3}"),
            (4, 1, "V", "X"),
            (4, 2, "H", "X"),
            (2, 5, "V", "{3,4'}"),
            (4, 4, "H", "4'"),
        ],
    )
    t1 = tb(SHIFTED_SET_VALUED, (2,), [["{1',1}", "{2',2}"]])
    t2 = tb(
        SHIFTED_SET_VALUED,
        (3, 3, 3),
        [["1", "2'", "{2,3'}"], ["X", "{3',3}", "{3,4'}"], ["X", "X", "4'"]],
    )
    return T, t1, t2


SSV_PAIR_UP = [
    (1, 1, "V", "{1,2}"),
    (1, 2, "V", "1"),
    (1, 3, "H", "{1,2'}"),
    (1, 5, "H", "2"),
    (2, 3, "H", "3'"),
    (3, 3, "H", "3'"),
    (2, 5, "V", "{3,4'}"),
    (4, 4, "H", "{4',7}"),
    (5, 4, "H", "4'"),
]


@pytest.fixture
def shifted_set_valued_equivalent_pair():
    """Equivalent shifted set-valued pair; the figures give shape (6,5,5,5,5).

    The surrounding prose names (6,5,5,5,3), but the stated reading word has
    five D_0 entries, which forces five cells on the main diagonal.
    """
    shape = (6, 5, 5, 5, 5)
    A = dt(
        SHIFTED_SET_VALUED,
        shape,
        SSV_PAIR_UP
        + [(3, 1, "H", "X"), (4, 1, "V", "X"), (4, 2, "H", "X"), (5, 2, "H", "X")],
    )
    B = dt(
        SHIFTED_SET_VALUED,
        shape,
        SSV_PAIR_UP
        + [(3, 1, "V", "X"), (3, 2, "V", "X"), (5, 1, "H", "X"), (4, 3, "V", "X")],
    )
    return A, B


@pytest.fixture
def ssyt_t1():
    """The running semistandard example of shape (5,3,3)."""
    return tb(
        PLAIN,
        (5, 3, 3),
        [["1", "1", "1", "3", "4"], ["3", "3", "5"], ["4", "5", "7"]],
    )


@pytest.fixture
def set_valued_flat():
    """Set-valued tableau of shape (3,2) with weight x1 x3^2 x4 x6 x7 x9."""
    return tb(SET_VALUED, (3, 2), [["{1,3}", "3", "{6,7}"], ["4", "{5,9}"]])
