import random

import pytest

from surfembed.intmat import (
    IntMatrix,
    IntMatrixError,
    factor_alternating,
    parse_intmatrix,
    rank_q,
    serialize_intmatrix,
    symplectic_matrix_int,
)


def skew_from_upper(n, upper):
    m = IntMatrix(n, n)
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            m.data[i][j] = upper[k]
            m.data[j][i] = -upper[k]
            k += 1
    return m


def test_rank_q_basics():
    assert rank_q(IntMatrix(3, 4)) == 0
    assert rank_q(IntMatrix(2, 2, [[0, 2], [-2, 0]])) == 2
    a = IntMatrix(3, 3, [[0, 1, 1], [-1, 0, 1], [-1, -1, 0]])
    assert rank_q(a) == 2


def test_symplectic_matrix():
    assert symplectic_matrix_int(0).rows == 0
    assert symplectic_matrix_int(1).data == [[0, 1], [-1, 0]]
    for g in range(4):
        m = symplectic_matrix_int(g)
        assert m.is_skew()


def test_factor_alternating_unit_block():
    a = IntMatrix(2, 2, [[0, 1], [-1, 0]])
    b = factor_alternating(a)
    assert b.rows == 2
    assert b.transpose() @ symplectic_matrix_int(1) @ b == a


def test_factor_alternating_divisor_block():
    a = IntMatrix(2, 2, [[0, 2], [-2, 0]])
    b = factor_alternating(a)
    assert b.transpose() @ symplectic_matrix_int(1) @ b == a
    # the documented explicit factor also works
    bb = IntMatrix(2, 2, [[2, 0], [0, 1]])
    assert bb.transpose() @ symplectic_matrix_int(1) @ bb == a


def test_factor_alternating_roundtrip_random():
    rng = random.Random(10)
    for _ in range(60):
        n = rng.randrange(1, 9)
        g = rng.randrange(0, 4)
        b0 = IntMatrix(2 * g, n, [[rng.randrange(-5, 6) for _ in range(n)] for _ in range(2 * g)])
        a = b0.transpose() @ symplectic_matrix_int(g) @ b0
        assert a.is_skew()
        r = rank_q(a)
        assert r % 2 == 0
        b = factor_alternating(a)
        assert b.rows == r
        assert b.transpose() @ symplectic_matrix_int(r // 2) @ b == a


def test_factor_alternating_rejects_non_skew():
    with pytest.raises(IntMatrixError):
        factor_alternating(IntMatrix(2, 2, [[0, 1], [1, 0]]))
    with pytest.raises(IntMatrixError):
        factor_alternating(IntMatrix(2, 2, [[1, 1], [-1, 0]]))


def test_gram_rank_bound_over_q():
    # rank_Q(V^T M V) <= rows(V) for integer V and skew M.
    rng = random.Random(11)
    for _ in range(200):
        d = rng.randrange(1, 6)
        n = rng.randrange(1, 10)
        v = IntMatrix(d, n, [[rng.randrange(-4, 5) for _ in range(n)] for _ in range(d)])
        m = IntMatrix(d, d)
        for i in range(d):
            for j in range(i + 1, d):
                x = rng.randrange(-4, 5)
                m.data[i][j] = x
                m.data[j][i] = -x
        assert rank_q(v.transpose() @ m @ v) <= d


def test_skew_rank_always_even():
    rng = random.Random(12)
    for _ in range(100):
        n = rng.randrange(1, 8)
        upper = [rng.randrange(-6, 7) for _ in range(n * (n - 1) // 2)]
        a = skew_from_upper(n, upper)
        assert rank_q(a) % 2 == 0


def test_parse_serialize_roundtrip():
    a = IntMatrix(2, 3, [[0, -7, 12], [3, 0, -1]])
    text = serialize_intmatrix(a)
    assert parse_intmatrix(text) == a
    with pytest.raises(IntMatrixError):
        parse_intmatrix("int 1 1\n1 2\n")
