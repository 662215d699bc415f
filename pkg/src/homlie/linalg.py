"""Exact dense linear algebra over a Field.

Matrices are lists of row lists of scalars. Pivoting is always "first row
with a nonzero entry in the leftmost unresolved column": with exact
arithmetic no magnitude heuristics are needed and output is deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import ShapeError, SingularMatrixError
from .field import Field, PrimeField, Scalar


def rref(field: Field, mat: list) -> tuple[list, list[int]]:
    """Reduced row-echelon form. Returns (rows, pivot_columns)."""
    rows = [list(r) for r in mat]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    zero = field.zero
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c] != zero:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        if piv != field.one:
            inv = field.inv(piv)
            rows[r] = [field.mul(inv, x) for x in rows[r]]
        top = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c] != zero:
                f = rows[i][c]
                ri = rows[i]
                rows[i] = [field.sub(ri[j], field.mul(f, top[j])) for j in range(ncols)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank(field: Field, mat: list) -> int:
    """Exact rank by forward elimination (cheaper than full RREF)."""
    rows = [list(r) for r in mat]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    zero = field.zero
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c] != zero:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        top = rows[r]
        piv = top[c]
        for i in range(r + 1, nrows):
            if rows[i][c] != zero:
                f = field.div(rows[i][c], piv)
                ri = rows[i]
                # columns left of c are already zero in both rows
                rows[i] = ri[: c + 1] + [
                    field.sub(ri[j], field.mul(f, top[j])) for j in range(c + 1, ncols)
                ]
                rows[i][c] = zero
        r += 1
        if r == nrows:
            break
    return r


def nullspace(field: Field, mat: list, ncols: int) -> list[list]:
    """Canonical kernel basis read off the RREF.

    One vector per free column in ascending column order; the free
    coordinate is 1 and pivot coordinates are back-solved.
    """
    red, pivots = rref(field, mat)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for r, c in enumerate(pivots):
            v[c] = field.neg(red[r][free])
        basis.append(v)
    return basis


def identity(field: Field, n: int) -> list:
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def mat_vec(field: Field, mat: list, v: list) -> list:
    out = []
    zero = field.zero
    for row in mat:
        acc = zero
        for a, x in zip(row, v):
            if a != zero and x != zero:
                acc = field.add(acc, field.mul(a, x))
        out.append(acc)
    return out


def mat_mul(field: Field, a: list, b: list) -> list:
    n, k = len(a), len(b)
    m = len(b[0]) if k else 0
    out = [[field.zero] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for s in range(k):
            f = ai[s]
            if f == field.zero:
                continue
            bs = b[s]
            for j in range(m):
                oi[j] = field.add(oi[j], field.mul(f, bs[j]))
    return out


def inverse(field: Field, mat: list) -> list:
    """Inverse via Gauss-Jordan on the augmented matrix."""
    n = len(mat)
    if any(len(r) != n for r in mat):
        raise ShapeError("inverse needs a square matrix")
    aug = [list(mat[i]) + identity(field, n)[i] for i in range(n)]
    red, pivots = rref(field, aug)
    if pivots != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return [row[n:] for row in red]


def det_bareiss_int(mat: list) -> int:
    """Fraction-free Bareiss determinant of an integer matrix.

    All interior divisions are exact (each intermediate entry is a minor
    of the input), so entry growth stays determinant-sized.
    """
    m = [[int(x) for x in row] for row in mat]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pkk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            mi = m[i]
            mk = m[k]
            for j in range(k + 1, n):
                mi[j] = (pkk * mi[j] - mik * mk[j]) // prev
        prev = pkk
    return sign * m[n - 1][n - 1]


def det(field: Field, mat: list) -> Scalar:
    """Exact determinant; empty matrix has determinant one.

    Rational matrices are lifted to integers row by row (common
    denominator) and handed to Bareiss; prime-field matrices run Bareiss
    directly, where division by the previous pivot is field division.
    """
    n = len(mat)
    if n == 0:
        return field.one
    if any(len(r) != n for r in mat):
        raise ShapeError("determinant needs a square matrix")
    if isinstance(field, PrimeField):
        p = field.p
        m = [[x % p for x in row] for row in mat]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            pkk = m[k][k]
            inv_prev = pow(prev, -1, p)
            for i in range(k + 1, n):
                mik = m[i][k]
                mi = m[i]
                mk = m[k]
                for j in range(k + 1, n):
                    mi[j] = (pkk * mi[j] - mik * mk[j]) * inv_prev % p
            prev = pkk
        return sign * m[n - 1][n - 1] % p
    # rational: clear denominators, integer Bareiss, undo the row scaling
    scale = Fraction(1)
    lifted = []
    for row in mat:
        row = [Fraction(x) for x in row]
        mult = lcm(*(x.denominator for x in row)) if row else 1
        scale *= mult
        lifted.append([int(x * mult) for x in row])
    return Fraction(det_bareiss_int(lifted)) / scale
