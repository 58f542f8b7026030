"""Small exact integer linear algebra: HNF, SNF, kernels, unimodular bases.

Everything here works on tuples of tuples of Python ints.  The matrices are
tiny (dimension at most a handful), so the implementations favour clarity
and verifiable invariants over asymptotics.
"""

from __future__ import annotations

from .arith import Q

__all__ = [
    "identity_mat",
    "mat_mul",
    "mat_vec",
    "transpose",
    "det_int",
    "invert_unimodular",
    "hnf_rows",
    "hnf_transform",
    "kernel_cols",
    "snf_transforms",
    "unimodular_with_row",
    "lattice_index",
]

Mat = tuple[tuple[int, ...], ...]


def identity_mat(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a)) if a else ()


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(a: Mat, v) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def det_int(a: Mat) -> int:
    """Fraction-free (Bareiss) determinant."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def invert_unimodular(a: Mat) -> Mat:
    """Exact inverse of an integer matrix with determinant +-1."""
    n = len(a)
    aug = [[Q(v) for v in row] + [Q(1 if i == j else 0) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [v * inv for v in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[c])]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            v = aug[i][n + j]
            if v.denominator != 1:
                raise ValueError("matrix is not unimodular")
            row.append(int(v))
        out.append(tuple(row))
    return tuple(out)


def hnf_transform(mat: Mat) -> tuple[Mat, Mat]:
    """Row-style Hermite form H with unimodular U such that U @ mat = H.

    Pivots are positive, entries above a pivot lie in [0, pivot), pivot
    columns strictly increase, zero rows sink to the bottom.
    """
    a = [list(r) for r in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [list(r) for r in identity_mat(m)]
    r = 0
    for c in range(n):
        while True:
            nz = [i for i in range(r, m) if a[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(a[i][c]))
            if i0 != r:
                a[r], a[i0] = a[i0], a[r]
                u[r], u[i0] = u[i0], u[r]
            done = True
            for i in range(r + 1, m):
                if a[i][c] == 0:
                    continue
                q = a[i][c] // a[r][c]
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                if a[i][c] != 0:
                    done = False
            if done:
                break
        if r < m and a[r][c] != 0:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
                u[r] = [-x for x in u[r]]
            for i in range(r):
                q = a[i][c] // a[r][c]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
            r += 1
        if r == m:
            break
    return tuple(tuple(row) for row in a), tuple(tuple(row) for row in u)


def hnf_rows(mat: Mat) -> Mat:
    """Canonical basis (HNF, zero rows dropped) of the lattice the rows span."""
    h, _ = hnf_transform(mat)
    return tuple(row for row in h if any(row))


def kernel_cols(mat: Mat) -> list[tuple[int, ...]]:
    """Basis of the integer right kernel {v : mat @ v = 0}."""
    if not mat:
        return []
    bt = transpose(mat)
    h, u = hnf_transform(bt)
    return [u[i] for i in range(len(h)) if not any(h[i])]


def snf_transforms(mat: Mat) -> tuple[Mat, Mat, Mat]:
    """Smith form: U @ mat @ V = D, diagonal, d_i | d_{i+1}, U and V unimodular."""
    a = [list(r) for r in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [list(r) for r in identity_mat(m)]
    v = [list(r) for r in identity_mat(n)]

    def row_op(i, j, q):  # a[i] -= q*a[j]
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col i -= q*col j
        for row in a:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j] != 0]
            if not entries:
                break
            _, pi, pj = min(entries)
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            clean = True
            for i in range(t + 1, m):
                if a[i][t]:
                    row_op(i, t, a[i][t] // a[t][t])
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if a[t][j]:
                    col_op(j, t, a[t][j] // a[t][t])
                    if a[t][j]:
                        clean = False
            if not clean:
                continue
            # pivot must divide every remaining entry for the chain condition
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % a[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_op(t, offender, -1)  # fold the offending row in and restart
        if t < m and t < n and a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return (
        tuple(tuple(r) for r in u),
        tuple(tuple(r) for r in a),
        tuple(tuple(r) for r in v),
    )


def unimodular_with_row(vec) -> Mat:
    """A matrix in GL_n(Z) whose first row is the given primitive vector."""
    col = tuple((x,) for x in vec)
    h, u = hnf_transform(col)
    if h[0][0] != 1:
        raise ValueError("vector is not primitive")
    # u @ vec^T = e1, so the first row of (u^T)^{-1} = (u^{-1})^T is vec
    return transpose(invert_unimodular(u))


def lattice_index(rows, n: int) -> int:
    """Index [Z^n : L] for the lattice L spanned by the rows; 0 if rank < n."""
    h = hnf_rows(tuple(tuple(r) for r in rows))
    if len(h) < n:
        return 0
    d = det_int(h)
    return abs(d)
