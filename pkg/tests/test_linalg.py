import random
from fractions import Fraction

from superinv.linalg import (
    SpanTracker,
    bareiss_echelon,
    intersect_dims,
    nullspace,
    rank_rows,
)


def test_rank_simple():
    assert rank_rows([[1, 2], [2, 4]]) == 1
    assert rank_rows([[1, 0], [0, 1]]) == 2
    assert rank_rows([[0, 0]]) == 0


def test_rank_fractions():
    assert rank_rows([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]]) == 1


def test_nullspace_solves():
    rng = random.Random(41)
    for _ in range(50):
        nrows, ncols = rng.randint(1, 5), rng.randint(1, 6)
        m = [[rng.randint(-4, 4) for _ in range(ncols)] for _ in range(nrows)]
        basis = nullspace(m, ncols=ncols)
        # every kernel vector is killed by every row
        for vec in basis:
            for row in m:
                assert sum(Fraction(a) * b for a, b in zip(row, vec)) == 0
        assert len(basis) == ncols - rank_rows(m)


def test_nullspace_empty_matrix():
    basis = nullspace([], ncols=3)
    assert len(basis) == 3


def test_nullspace_deterministic_under_row_shuffle_dimension():
    rng = random.Random(43)
    m = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(4)]
    d1 = len(nullspace(m, ncols=5))
    rows = m[:]
    rng.shuffle(rows)
    d2 = len(nullspace(rows, ncols=5))
    assert d1 == d2


def test_bareiss_integer_entries():
    m = [[2, 4, 6], [1, 3, 5], [7, 8, 9]]
    ech, pivots = bareiss_echelon(m)
    for row in ech:
        for x in row:
            assert isinstance(x, int)
    assert len(pivots) == rank_rows(m)


def test_span_tracker():
    t = SpanTracker(3)
    assert t.add([1, 0, 0])
    assert not t.add([2, 0, 0])
    assert t.add([0, Fraction(1, 2), 1])
    assert t.contains([3, Fraction(3, 2), 3])
    assert not t.contains([0, 0, 1])
    assert t.rank == 2


def test_intersect_dims():
    a = [[1, 0, 0], [0, 1, 0]]
    b = [[0, 1, 0], [0, 0, 1]]
    assert intersect_dims(a, b, 3) == 1
    assert intersect_dims(a, [], 3) == 0
