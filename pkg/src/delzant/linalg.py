"""Exact linear algebra on small integer and rational matrices.

Matrices are plain tuples/lists of row sequences.  Everything stays in
integers (Bareiss elimination) or in fractions.Fraction; there is no
floating point anywhere in this package.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def int_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("int_det needs a square matrix")
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Bareiss update: divisions are exact by construction
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det_cofactor(rows):
    """Laplace expansion along the first row.  Reference oracle for int_det."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("det_cofactor needs a square matrix")
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, head in enumerate(rows[0]):
        if head == 0:
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
        term = head * det_cofactor(minor)
        total = total - term if j % 2 else total + term
    return total


def ring_det(rows):
    """Determinant over any commutative ring with +, -, * (e.g. MultiPoly)."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        minor = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
        term = rows[0][j] * ring_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def solve_exact(rows, rhs) -> list[Fraction]:
    """Solve a square linear system exactly.  Raises ValueError if singular."""
    n = len(rows)
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot is None:
            raise ValueError("singular system")
        a[k], a[pivot] = a[pivot], a[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k] != 0:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return [a[i][n] for i in range(n)]


def invert_exact(rows) -> list[list[Fraction]]:
    """Exact inverse of a square matrix via Gauss-Jordan over Fraction."""
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        a[k], a[pivot] = a[pivot], a[k]
        inv[k], inv[pivot] = inv[pivot], inv[k]
        f = 1 / a[k][k]
        a[k] = [x * f for x in a[k]]
        inv[k] = [x * f for x in inv[k]]
        for i in range(n):
            if i != k and a[i][k] != 0:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
                inv[i] = [x - f * y for x, y in zip(inv[i], inv[k])]
    return inv


def mat_mul(a, b):
    rows = len(a)
    inner = len(b)
    cols = len(b[0])
    return [
        [sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
        for i in range(rows)
    ]


def mat_vec(a, x):
    return [sum(row[j] * x[j] for j in range(len(x))) for row in a]


def kernel_direction(rows, m: int):
    """Nonzero integer kernel vector of an (m-1) x m integer matrix.

    Components are signed maximal minors (the generalized cross product).
    Returns None when the rows have rank below m-1, i.e. the minors all vanish.
    """
    if len(rows) != m - 1:
        raise ValueError("kernel_direction expects m-1 rows")
    direction = []
    for j in range(m):
        minor = [[row[c] for c in range(m) if c != j] for row in rows]
        d = int_det(minor)
        direction.append(-d if j % 2 else d)
    if all(x == 0 for x in direction):
        return None
    return tuple(direction)


def unimodular_for_normal(n: Sequence[int]) -> list[list[int]]:
    """Unimodular U with n^T U = (1, 0, ..., 0), for primitive integer n.

    Columns 2..m of U form a lattice basis of the hyperplane {x : x.n = 0},
    and the first coordinate of U^{-1} x equals x.n.
    """
    m = len(n)
    r = list(n)
    u = [[int(i == j) for j in range(m)] for i in range(m)]

    def col_addmul(dst, src, q):
        r[dst] -= q * r[src]
        for row in u:
            row[dst] -= q * row[src]

    while True:
        nonzero = [j for j in range(m) if r[j] != 0]
        if len(nonzero) <= 1:
            break
        j = min(nonzero, key=lambda c: abs(r[c]))
        for i in nonzero:
            if i != j:
                col_addmul(i, j, r[i] // r[j])
    p = next(j for j in range(m) if r[j] != 0)
    if r[p] < 0:
        r[p] = -r[p]
        for row in u:
            row[p] = -row[p]
    if r[p] != 1:
        raise ValueError("normal vector is not primitive")
    if p != 0:
        r[0], r[p] = r[p], r[0]
        for row in u:
            row[0], row[p] = row[p], row[0]
    return u


def int_inverse_unimodular(u) -> list[list[int]]:
    """Integer inverse of a unimodular integer matrix."""
    inv = invert_exact(u)
    out = []
    for row in inv:
        out_row = []
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            out_row.append(int(x))
        out.append(out_row)
    return out
