"""Exact linear algebra over the rationals.

Dense matrices are lists of lists of Fractions; sparse rows are dicts
mapping column index to Fraction.  Nothing here ever touches floats.
"""

from __future__ import annotations

from fractions import Fraction


def rank(matrix: list[list[Fraction]]) -> int:
    if not matrix:
        return 0
    rows = [row[:] for row in matrix]
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def sparse_rank(rows: list[dict], ncols: int) -> int:
    """Rank of a matrix given as sparse rows (dict col -> coeff)."""
    echelon: dict[int, dict] = {}  # pivot col -> reduced row
    r = 0
    for row in rows:
        row = dict(row)
        while row:
            piv = min(row)
            if piv in echelon:
                f = row[piv]
                for c, v in echelon[piv].items():
                    new = row.get(c, Fraction(0)) - f * v
                    if new:
                        row[c] = new
                    else:
                        row.pop(c, None)
            else:
                inv = Fraction(1) / row[piv]
                echelon[piv] = {c: v * inv for c, v in row.items()}
                r += 1
                break
    return r


def solve(matrix: list[list[Fraction]], rhs: list[Fraction]):
    """One exact solution of ``matrix @ x = rhs`` with free variables set to
    zero, or None if inconsistent.  The solution is canonical given the
    column order (reduced echelon, pivot-first)."""
    m = len(matrix)
    n = len(matrix[0]) if matrix else 0
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])]
           for i, row in enumerate(matrix)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, m) if aug[i][col]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = Fraction(1) / aug[r][col]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append((r, col))
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n]:
            return None
    x = [Fraction(0)] * n
    for row, col in pivots:
        x[col] = aug[row][n]
    return x


def sparse_solve(columns: list[dict], rhs: dict, nrows_hint: int = 0):
    """Solve ``sum_j x_j * columns[j] = rhs`` where columns and rhs are sparse
    vectors (dict row-index -> Fraction).  Returns a coefficient list with
    free variables zero, or None if inconsistent."""
    rows = sorted(set().union(rhs, *columns)) if columns else sorted(rhs)
    index = {rkey: i for i, rkey in enumerate(rows)}
    matrix = [[Fraction(0)] * len(columns) for _ in rows]
    for j, col in enumerate(columns):
        for rkey, v in col.items():
            matrix[index[rkey]][j] = v
    vec = [Fraction(0)] * len(rows)
    for rkey, v in rhs.items():
        vec[index[rkey]] = v
    if not rows:
        return [Fraction(0)] * len(columns)
    return solve(matrix, vec)


def nullspace(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    """Basis of the right null space, reduced-echelon convention."""
    m = len(matrix)
    n = len(matrix[0]) if matrix else 0
    rows = [[Fraction(x) for x in row] for row in matrix]
    pivots: list[int] = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, m) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rows[i][fc]
        basis.append(vec)
    return basis
