"""Resultants and gcds over cyclotomic coefficient fields, exactly.

The bivariate resultant uses the subresultant polynomial remainder sequence
(pseudo-remainders with the classic g, h scaling), so every division along
the way is exact and no coefficient growth control is needed beyond that.
gcds use a primitive PRS with univariate content extraction.
"""

from __future__ import annotations

from .cyclo import CycloNum
from .poly import MPoly

__all__ = ["resultant_bivar", "gcd_mpoly", "univ_gcd"]


# -- dense univariate polynomials over the coefficient field -----------------


def _utrim(p: list[CycloNum]) -> list[CycloNum]:
    while p and p[-1].is_zero():
        p.pop()
    return p


def _urem(a: list[CycloNum], b: list[CycloNum]) -> list[CycloNum]:
    a = list(a)
    db = len(b) - 1
    lead_inv = b[-1].inverse()
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c.is_zero():
            continue
        q = c * lead_inv
        for j in range(db + 1):
            a[i - db + j] = a[i - db + j] - q * b[j]
    return a[:db]


def univ_gcd(a: list[CycloNum], b: list[CycloNum]) -> list[CycloNum]:
    """Monic gcd of dense univariate polynomials (empty list for gcd(0, 0))."""
    a, b = _utrim(list(a)), _utrim(list(b))
    while b:
        a, b = b, _utrim(_urem(a, b))
    if not a:
        return []
    inv = a[-1].inverse()
    return [c * inv for c in a]


# -- dense polynomials in one distinguished variable, MPoly coefficients ------


def _trim(p: list[MPoly]) -> list[MPoly]:
    while p and p[-1].is_zero():
        p.pop()
    return p


def _prem(a: list[MPoly], b: list[MPoly]) -> list[MPoly]:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b."""
    da, db = len(a) - 1, len(b) - 1
    lc = b[-1]
    r = list(a)
    for k in range(da - db, -1, -1):
        top = r[db + k]  # taken before the lc scaling: r <- lc*r - top*x^k*b
        r = [lc * c for c in r]
        if not top.is_zero():
            for j in range(db + 1):
                r[j + k] = r[j + k] - top * b[j]
    return _trim(r[:db])


def resultant_bivar(f: MPoly, g: MPoly, var: int) -> MPoly:
    """Resultant of f and g with respect to variable var.

    The result is a polynomial in the remaining variables.  Exponents of var
    must be nonnegative (content_strip beforehand); the zero polynomial is
    returned when f and g share a factor of positive var-degree, and for
    Res(f, 0).
    """
    nvars = f.nvars
    a = _trim(f.dense_in(var))
    b = _trim(g.dense_in(var))
    if not a or not b:
        return MPoly.zero(nvars)
    sign = 1
    if len(a) < len(b):
        if (len(a) - 1) % 2 and (len(b) - 1) % 2:
            sign = -1
        a, b = b, a
    if len(b) == 1:
        out = b[0] ** (len(a) - 1)
        return out if sign == 1 else -out
    one = MPoly.constant(nvars, 1)
    g_, h = one, one
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        rem = _prem(a, b)
        a = b
        divisor = g_ * h**delta
        b = [c.exact_div(divisor) for c in rem]
        if not b:
            return MPoly.zero(nvars)
        g_ = a[-1]
        if delta == 1:
            h = g_
        elif delta > 1:
            h = (g_**delta).exact_div(h ** (delta - 1))
        if len(b) == 1:
            q = len(a) - 1
            out = b[0] ** q
            if q > 1:
                out = out.exact_div(h ** (q - 1))
            return out if sign == 1 else -out


# -- gcd ----------------------------------------------------------------------


def _normalize(f: MPoly) -> MPoly:
    if f.is_zero():
        return f
    _, lc = f.lex_leading()
    return f.map_coeffs(lambda c: c * lc.inverse())


def _univ_as_mpoly(coeffs: list[CycloNum], var: int, nvars: int) -> MPoly:
    items = []
    for k, c in enumerate(coeffs):
        e = [0] * nvars
        e[var] = k
        items.append((tuple(e), c))
    return MPoly.from_terms(nvars, items)


def _content_pp(f: MPoly, var: int, other: int) -> tuple[list[CycloNum], MPoly]:
    """Univariate content (in the other variable) and primitive part."""
    cont: list[CycloNum] = []
    for c in f.dense_in(var):
        if c.is_zero():
            continue
        cont = univ_gcd(cont, c.dense_univariate(other))
        if len(cont) == 1:
            break
    if len(cont) == 1:
        return [CycloNum.one()], _normalize_by(f, cont[0])
    return cont, f.exact_div(_univ_as_mpoly(cont, other, f.nvars))


def _normalize_by(f: MPoly, c: CycloNum) -> MPoly:
    inv = c.inverse()
    return f.map_coeffs(lambda v: v * inv)


def _primitive(coeffs: list[MPoly], other: int) -> list[MPoly]:
    cont: list[CycloNum] = []
    for c in coeffs:
        if c.is_zero():
            continue
        cont = univ_gcd(cont, c.dense_univariate(other))
        if len(cont) == 1:
            break
    if len(cont) == 1:
        inv = cont[0].inverse()
        return [c * inv for c in coeffs]
    m = _univ_as_mpoly(cont, other, coeffs[0].nvars)
    return [c.exact_div(m) for c in coeffs]


def gcd_mpoly(f: MPoly, g: MPoly) -> MPoly:
    """Monic-normalized gcd; supports polynomials in at most two variables."""
    f, g = f.content_strip(), g.content_strip()
    if f.is_zero():
        return _normalize(g)
    if g.is_zero():
        return _normalize(f)
    if f.is_constant() or g.is_constant():
        return MPoly.constant(f.nvars, 1)
    used = sorted(set(f.variables_used()) | set(g.variables_used()))
    if len(used) == 1:
        v = used[0]
        d = univ_gcd(f.dense_univariate(v), g.dense_univariate(v))
        return _univ_as_mpoly(d, v, f.nvars)
    if len(used) > 2:
        raise ValueError("gcd supports at most two variables")
    var, other = used[1], used[0]
    cf, pf = _content_pp(f, var, other)
    cg, pg = _content_pp(g, var, other)
    cont = univ_gcd(cf, cg)
    a = _trim(pf.dense_in(var))
    b = _trim(pg.dense_in(var))
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        rem = _prem(a, b)
        if not rem:
            break
        a, b = b, _primitive(rem, other)
    if len(b) == 1:
        pp_gcd = MPoly.constant(f.nvars, 1)
    else:
        pp_gcd = MPoly.from_dense(_primitive(b, other), var, f.nvars)
    return _normalize(pp_gcd * _univ_as_mpoly(cont, other, f.nvars))
