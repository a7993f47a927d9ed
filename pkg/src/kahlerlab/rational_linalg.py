"""Exact dense linear algebra over Gaussian rationals.

Row reduction with the first nonzero entry as pivot; no pivoting heuristics
are needed since the arithmetic is exact.  Matrices are lists of row lists.
"""

from __future__ import annotations

from .exterior import ONE, ZERO, GaussRational

Matrix = list[list[GaussRational]]
Vector = list[GaussRational]


def zeros(rows: int, cols: int) -> Matrix:
    return [[ZERO] * cols for _ in range(rows)]


def identity(size: int) -> Matrix:
    out = zeros(size, size)
    for i in range(size):
        out[i][i] = ONE
    return out


def conjugate_transpose(m: Matrix) -> Matrix:
    if not m:
        return []
    return [
        [m[r][c].conjugate() for r in range(len(m))] for c in range(len(m[0]))
    ]


def matvec(m: Matrix, v: Vector) -> Vector:
    out = []
    for row in m:
        acc = ZERO
        for a, b in zip(row, v):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (rref matrix, pivot column list)."""
    a = [row[:] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if a[i][c]), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = a[r][c].inverse()
        a[r] = [v * inv for v in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m: Matrix) -> int:
    if not m or not m[0]:
        return 0
    return len(rref(m)[1])


def nullspace(m: Matrix, cols: int | None = None) -> list[Vector]:
    """Basis of the right kernel; `cols` is needed when m has no rows."""
    if not m:
        if cols is None:
            raise ValueError("empty matrix needs an explicit column count")
        return [
            [ONE if i == j else ZERO for i in range(cols)] for j in range(cols)
        ]
    ncols = len(m[0])
    red, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [ZERO] * ncols
        vec[fc] = ONE
        for r, pc in enumerate(pivots):
            v = red[r][fc]
            if v:
                vec[pc] = -v
        basis.append(vec)
    return basis


def invert(m: Matrix) -> Matrix:
    size = len(m)
    if any(len(row) != size for row in m):
        raise ValueError("matrix must be square")
    aug = [row[:] + ident_row[:] for row, ident_row in zip(m, identity(size))]
    red, pivots = rref(aug)
    if pivots[:size] != list(range(size)):
        raise ValueError("matrix is singular")
    return [row[size:] for row in red]


def solve(m: Matrix, rhs: Vector) -> Vector:
    """Solve m x = rhs for square m; raises ValueError when singular."""
    size = len(m)
    aug = [row[:] + [b] for row, b in zip(m, rhs)]
    red, pivots = rref(aug)
    if len(pivots) < size or pivots[:size] != list(range(size)):
        raise ValueError("matrix is singular")
    return [red[i][size] for i in range(size)]
