"""Integer matrices: Smith normal form with transforms, solving, kernels.

Matrices are plain lists of row lists of Python ints.
"""

from __future__ import annotations

from typing import Optional, Sequence

IntegerMatrix = list[list[int]]


def identity(n: int) -> IntegerMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_vec(a: Sequence[Sequence[int]], x: Sequence[int]) -> list[int]:
    return [sum(r * v for r, v in zip(row, x)) for row in a]


def mat_mul(a, b) -> IntegerMatrix:
    cols = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def _shape(a) -> tuple[int, int]:
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if any(len(r) != cols for r in a):
        raise ValueError("ragged matrix")
    return rows, cols


def smith_normal_form(a: Sequence[Sequence[int]], ncols: Optional[int] = None):
    """Return (D, U, V) with U * A * V = D diagonal, d_1 | d_2 | ..., d_i >= 0.

    U and V are unimodular. ``ncols`` is needed only when A has no rows.
    """
    m, n = _shape(a)
    if m == 0 and ncols is not None:
        n = ncols
    d = [list(map(int, row)) for row in a]
    u = identity(m)
    v = identity(n)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):  # row_dst += k * row_src
        d[dst] = [x + k * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, k):  # col_dst += k * col_src
        for row in d:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    t = 0
    while t < min(m, n):
        # smallest nonzero entry of the trailing block becomes the pivot
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if d[i][j] and (best is None or abs(d[i][j]) < abs(d[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            done = True
            for i in range(t + 1, m):
                if d[i][t]:
                    add_row(t, i, -(d[i][t] // d[t][t]))
                    if d[i][t]:
                        done = False
            for j in range(t + 1, n):
                if d[t][j]:
                    add_col(t, j, -(d[t][j] // d[t][t]))
                    if d[t][j]:
                        done = False
            if not done:
                best = None
                for i in range(t, m):
                    if d[i][t] and (best is None or abs(d[i][t]) < abs(d[best][t])):
                        best = i
                swap_rows(t, best)
                bestc = None
                for j in range(t, n):
                    if d[t][j] and (bestc is None or abs(d[t][j]) < abs(d[t][bestc])):
                        bestc = j
                swap_cols(t, bestc)
                continue
            # divisibility of the rest of the block by the pivot
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if d[i][j] % d[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return d, u, v


def diagonal(d: IntegerMatrix) -> list[int]:
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def smith_solve(a: Sequence[Sequence[int]], b: Sequence[int], ncols: Optional[int] = None):
    """Some integer solution x of A x = b, or None when none exists."""
    m, n = _shape(a)
    if m == 0:
        return [0] * (ncols or 0)
    if len(b) != m:
        raise ValueError("dimension mismatch")
    d, u, v = smith_normal_form(a)
    ub = mat_vec(u, b)
    y = [0] * n
    for i in range(m):
        di = d[i][i] if i < n else 0
        if di == 0:
            if ub[i] != 0:
                return None
        else:
            if ub[i] % di:
                return None
            y[i] = ub[i] // di
    return mat_vec(v, y)


def hermite_rows(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Zero rows are dropped; pivots are positive and entries above a pivot lie
    in [0, pivot).
    """
    work = [list(r) for r in rows if any(r)]
    if not work:
        return []
    n = len(work[0])
    out: list[list[int]] = []
    col = 0
    while work and col < n:
        nz = [r for r in work if r[col]]
        if not nz:
            col += 1
            continue
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            for r in nz[1:]:
                q = r[col] // piv[col]
                r[:] = [x - q * y for x, y in zip(r, piv)]
            nz = [r for r in nz if r[col]]
        piv = nz[0]
        if piv[col] < 0:
            piv[:] = [-x for x in piv]
        work = [r for r in work if r is not piv and any(r)]
        for r in out:
            q = r[col] // piv[col]
            if q:
                r[:] = [x - q * y for x, y in zip(r, piv)]
        out.append(piv)
        col += 1
    return out


def lattice_kernel(a: Sequence[Sequence[int]], ncols: Optional[int] = None) -> list[list[int]]:
    """Hermite-reduced integer basis of {x : A x = 0}."""
    m, n = _shape(a)
    if m == 0:
        n = ncols or 0
        return identity(n)
    d, _, v = smith_normal_form(a)
    rank = sum(1 for x in diagonal(d) if x)
    basis = [[v[i][j] for i in range(n)] for j in range(rank, n)]
    return hermite_rows(basis)


def rank(a: Sequence[Sequence[int]]) -> int:
    if not a:
        return 0
    d, _, _ = smith_normal_form(a)
    return sum(1 for x in diagonal(d) if x)
