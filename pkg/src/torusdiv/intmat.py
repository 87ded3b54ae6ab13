"""Exact integer matrix algorithms: Hermite and Smith normal forms.

Matrices are lists of row lists.  Everything is arbitrary-precision integer
arithmetic; sizes here are tiny (N <= 3 ambient dimensions), so the simple
gcd-elimination algorithms are plenty.
"""


def hnf(mat: list[list[int]]) -> list[list[int]]:
    """Row-style Hermite normal form; returns the nonzero rows.

    Pivots are positive and strictly move right; entries above a pivot are
    reduced into [0, pivot).  The result is the unique canonical basis of
    the row lattice.
    """
    m = [list(row) for row in mat]
    if not m:
        return []
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        while True:
            nz = [i for i in range(r, rows) if m[i][c] != 0]
            if len(nz) <= 1:
                break
            i0 = min(nz, key=lambda i: abs(m[i][c]))
            for i in nz:
                if i != i0:
                    q = m[i][c] // m[i0][c]
                    m[i] = [a - q * b for a, b in zip(m[i], m[i0])]
        if not nz:
            continue
        m[r], m[nz[0]] = m[nz[0]], m[r]
        if m[r][c] < 0:
            m[r] = [-a for a in m[r]]
        for i in range(r):
            q = m[i][c] // m[r][c]
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[r])]
        r += 1
    return m[:r]


def hnf_with_transform(mat: list[list[int]]) -> tuple[list[list[int]], list[list[int]], int]:
    """HNF computed with a unimodular row transform U (U * mat = echelon).

    Returns (echelon rows including zero rows, U, rank).  Rows of U beyond
    the rank form a basis of the integer row kernel of mat.
    """
    m = [list(row) for row in mat]
    rows = len(m)
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    if not m:
        return m, u, 0
    cols = len(m[0])
    r = 0
    for c in range(cols):
        while True:
            nz = [i for i in range(r, rows) if m[i][c] != 0]
            if len(nz) <= 1:
                break
            i0 = min(nz, key=lambda i: abs(m[i][c]))
            for i in nz:
                if i != i0:
                    q = m[i][c] // m[i0][c]
                    m[i] = [a - q * b for a, b in zip(m[i], m[i0])]
                    u[i] = [a - q * b for a, b in zip(u[i], u[i0])]
        if not nz:
            continue
        i0 = nz[0]
        m[r], m[i0] = m[i0], m[r]
        u[r], u[i0] = u[i0], u[r]
        if m[r][c] < 0:
            m[r] = [-a for a in m[r]]
            u[r] = [-a for a in u[r]]
        for i in range(r):
            q = m[i][c] // m[r][c]
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[r])]
                u[i] = [a - q * b for a, b in zip(u[i], u[r])]
        r += 1
    return m, u, r


def kernel(mat: list[list[int]]) -> list[list[int]]:
    """Basis of the integer row kernel {x : x * mat = 0}."""
    _, u, r = hnf_with_transform(mat)
    return u[r:]


def snf_diagonal(mat: list[list[int]]) -> list[int]:
    """Elementary divisors d_1 | d_2 | ... from the Smith normal form."""
    m = [list(row) for row in mat]
    if not m or not m[0]:
        return []
    rows, cols = len(m), len(m[0])
    diag = []
    top = 0
    while top < min(rows, cols):
        entries = [
            (abs(m[i][j]), i, j)
            for i in range(top, rows)
            for j in range(top, cols)
            if m[i][j] != 0
        ]
        if not entries:
            break
        while True:
            _, pi, pj = min(entries)
            m[top], m[pi] = m[pi], m[top]
            for row in m:
                row[top], row[pj] = row[pj], row[top]
            pivot = m[top][top]
            dirty = False
            for i in range(top + 1, rows):
                q = m[i][top] // pivot
                if q:
                    m[i] = [a - q * b for a, b in zip(m[i], m[top])]
                if m[i][top] != 0:
                    dirty = True
            for j in range(top + 1, cols):
                q = m[top][j] // pivot
                if q:
                    for row in m:
                        row[j] -= q * row[top]
                if m[top][j] != 0:
                    dirty = True
            if not dirty:
                # enforce divisibility of the remaining block by the pivot
                offender = None
                for i in range(top + 1, rows):
                    for j in range(top + 1, cols):
                        if m[i][j] % pivot != 0:
                            offender = i
                            break
                    if offender is not None:
                        break
                if offender is None:
                    break
                m[top] = [a + b for a, b in zip(m[top], m[offender])]
            entries = [
                (abs(m[i][j]), i, j)
                for i in range(top, rows)
                for j in range(top, cols)
                if m[i][j] != 0
            ]
        diag.append(abs(m[top][top]))
        top += 1
    return diag


def det(mat: list[list[int]]) -> int:
    """Determinant by cofactor expansion (small matrices only)."""
    n = len(mat)
    if n == 0:
        return 1
    if n == 1:
        return mat[0][0]
    total = 0
    for j in range(n):
        if mat[0][j] == 0:
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in mat[1:]]
        total += (-1) ** j * mat[0][j] * det(minor)
    return total


def adjugate(mat: list[list[int]]) -> list[list[int]]:
    """Adjugate matrix: adj(M) * M = det(M) * I."""
    n = len(mat)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [mat[r][c] for c in range(n) if c != j]
                for r in range(n)
                if r != i
            ]
            adj[j][i] = (-1) ** (i + j) * det(minor)
    return adj
