"""Exact dense linear algebra over any field of exact scalars.

Pivoting picks the first entry that tests nonzero; magnitudes mean nothing for
exact values.  Determinants use Bareiss fraction-free elimination, which stays
inside the coefficient ring when entries are integers.
"""
from __future__ import annotations

from fractions import Fraction

__all__ = ["SingularMatrix", "det", "rref", "rank", "solve", "inverse", "nullspace", "matmul"]


class SingularMatrix(ArithmeticError):
    pass


def _copy(mat):
    # ints would turn into floats under "/"
    return [[Fraction(x) if isinstance(x, int) else x for x in row] for row in mat]


def det(mat):
    """Bareiss determinant; works for any commutative ring with exact division."""
    n = len(mat)
    if n == 0:
        return Fraction(1)
    a = _copy(mat)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * pivot - a[i][k] * a[k][j]
                a[i][j] = num / prev if prev != 1 else num
            a[i][k] = 0
        prev = pivot
    result = a[n - 1][n - 1]
    return -result if sign < 0 else result


def rref(mat):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    a = _copy(mat)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = Fraction(1) / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                factor = a[i][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(mat) -> int:
    return len(rref(mat)[1]) if mat else 0


def solve(mat, rhs, *, unique: bool = True):
    """Solve ``mat @ x = rhs``.

    With ``unique=True`` a singular system raises :class:`SingularMatrix`.
    Otherwise the basic solution (free variables set to zero) is returned, and
    ``SingularMatrix`` is raised only when the system is inconsistent.
    """
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    aug = [list(row) + [b] for row, b in zip(mat, rhs)]
    red, pivots = rref(aug)
    if cols in pivots:
        raise SingularMatrix("inconsistent linear system")
    if unique and len(pivots) < cols:
        raise SingularMatrix(f"system has rank {len(pivots)} < {cols} unknowns")
    x = [Fraction(0)] * cols
    for r, c in enumerate(pivots):
        x[c] = red[r][cols]
    return x


def inverse(mat):
    n = len(mat)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is not invertible")
    return [row[n:] for row in red]


def nullspace(mat):
    """Basis of the right kernel, one vector per free column."""
    cols = len(mat[0]) if mat else 0
    red, pivots = rref(mat)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -red[r][f]
        basis.append(v)
    return basis


def matmul(a, b):
    inner = len(b)
    width = len(b[0]) if b else 0
    return [[sum((a[i][k] * b[k][j] for k in range(inner)), Fraction(0)) for j in range(width)]
            for i in range(len(a))]
