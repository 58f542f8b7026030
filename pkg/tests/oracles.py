"""Independent reference implementations used only by the tests.

These deliberately take different routes than the package (Sylvester matrix
determinants instead of remainder sequences, direct expansion instead of
Horner) so that agreement is meaningful.
"""

from __future__ import annotations

from torcosets.cyclo import CycloNum, RootOfUnity, join_conductors
from torcosets.poly import MPoly


def bareiss_det(mat: list[list[MPoly]]) -> MPoly:
    """Fraction-free determinant of a matrix of polynomials."""
    n = len(mat)
    nvars = mat[0][0].nvars
    if n == 0:
        return MPoly.constant(nvars, 1)
    mat = [row[:] for row in mat]
    sign = 1
    prev = MPoly.constant(nvars, 1)
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if not mat[i][k].is_zero()), None)
        if piv is None:
            return MPoly.zero(nvars)
        if piv != k:
            mat[k], mat[piv] = mat[piv], mat[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]
                mat[i][j] = num.exact_div(prev)
            mat[i][k] = MPoly.zero(nvars)
        prev = mat[k][k]
    det = mat[n - 1][n - 1]
    return det if sign == 1 else -det


def sylvester_resultant(f: MPoly, g: MPoly, var: int) -> MPoly:
    """Resultant via the Sylvester matrix determinant."""
    nvars = f.nvars
    a = f.dense_in(var)
    b = g.dense_in(var)
    while a and a[-1].is_zero():
        a.pop()
    while b and b[-1].is_zero():
        b.pop()
    if not a or not b:
        return MPoly.zero(nvars)
    m, n = len(a) - 1, len(b) - 1
    if m == 0 and n == 0:
        return MPoly.constant(nvars, 1)
    if m == 0:
        return a[0] ** n
    if n == 0:
        return b[0] ** m
    size = m + n
    zero = MPoly.zero(nvars)
    rows = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(a)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(b)):
            row[i + j] = c
        rows.append(row)
    return bareiss_det(rows)


def eval_naive(f: MPoly, point: tuple[RootOfUnity, ...]) -> CycloNum:
    """Term-by-term torsion evaluation, no bucketing."""
    n = 1
    for c in f.terms.values():
        n = join_conductors(n, c.conductor)
    for r in point:
        n = join_conductors(n, r.field_conductor)
    total = CycloNum.zero(n)
    for e, c in f.terms.items():
        v = c.embed(n)
        for r, k in zip(point, e):
            v = v * (r**k).as_cyclonum(n)
        total = total + v
    return total
