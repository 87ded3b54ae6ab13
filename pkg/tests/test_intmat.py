"""Integer matrix normal forms against brute-force oracles."""

import random
from fractions import Fraction

from torusdiv import intmat


def random_unimodular(rng, n):
    """Product of random elementary row operations."""
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(8):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-3, 3)
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    return m


def matmul(a, b):
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def test_hnf_is_basis_invariant():
    rng = random.Random(1)
    for _ in range(40):
        n = rng.randint(1, 4)
        base = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
        base.append([rng.randint(1, 5) if j == 0 else 0 for j in range(n)])
        h1 = intmat.hnf(base)
        u = random_unimodular(rng, len(base))
        h2 = intmat.hnf(matmul(u, base))
        assert h1 == h2


def test_hnf_shape():
    h = intmat.hnf([[2, 0], [0, 2], [1, 1]])
    # pivots positive, entries above pivots reduced
    assert h == [[1, 1], [0, 2]]


def test_snf_known_example():
    # classical example with invariant factors 1, 10, 30
    d = intmat.snf_diagonal([[12, 6, 4], [3, 9, 6], [2, 16, 14]])
    assert d == [1, 10, 30]


def test_snf_divisibility_chain_and_det():
    rng = random.Random(2)
    for _ in range(40):
        n = rng.randint(1, 3)
        m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        d = intmat.snf_diagonal(m)
        for a, b in zip(d, d[1:]):
            assert b % a == 0
        prod = 1
        for x in d:
            prod *= x
        if len(d) == n:
            assert prod == abs(intmat.det(m))
        else:
            assert intmat.det(m) == 0


def test_kernel_annihilates_and_has_full_rank():
    rng = random.Random(3)
    for _ in range(40):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        m = [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)]
        ker = intmat.kernel(m)
        for w in ker:
            prod = [sum(w[i] * m[i][j] for i in range(rows)) for j in range(cols)]
            assert all(x == 0 for x in prod)
        assert len(ker) == rows - _rank(m)


def _rank(m):
    rows = [[Fraction(x) for x in row] for row in m]
    rank = 0
    for col in range(len(m[0])):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col] * inv
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def test_adjugate_identity():
    rng = random.Random(4)
    for _ in range(30):
        n = rng.randint(1, 3)
        m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        adj = intmat.adjugate(m)
        prod = matmul(adj, m)
        d = intmat.det(m)
        for i in range(n):
            for j in range(n):
                assert prod[i][j] == (d if i == j else 0)
