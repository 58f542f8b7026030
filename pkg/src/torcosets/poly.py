"""Multivariate Laurent polynomials with cyclotomic coefficients.

Exponent vectors are arbitrary integers.  Monomial factors x^v are units on
the torus, so routines that need honest polynomials (resultants, Newton
polytopes) first shift exponents via content_strip; nothing on the zero set
inside the torus changes.
"""

from __future__ import annotations

from math import gcd

from .arith import Q
from .cyclo import CycloNum, GaloisAut, RootOfUnity, join_conductors

__all__ = ["MPoly", "evaluate_at_torsion"]


def _as_coeff(c) -> CycloNum:
    if isinstance(c, CycloNum):
        return c
    return CycloNum.from_rational(Q(c))


class MPoly:
    """A polynomial sum of coeff * x^e with CycloNum coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict):
        self.nvars = nvars
        self.terms = terms

    @staticmethod
    def from_terms(nvars: int, items) -> "MPoly":
        terms: dict = {}
        for e, c in items:
            e = tuple(int(v) for v in e)
            if len(e) != nvars:
                raise ValueError("exponent length does not match nvars")
            c = _as_coeff(c)
            if e in terms:
                c = terms[e] + c
            if c.is_zero():
                terms.pop(e, None)
            else:
                terms[e] = c
        return MPoly(nvars, terms)

    @staticmethod
    def zero(nvars: int) -> "MPoly":
        return MPoly(nvars, {})

    @staticmethod
    def constant(nvars: int, c) -> "MPoly":
        c = _as_coeff(c)
        return MPoly(nvars, {} if c.is_zero() else {(0,) * nvars: c})

    @staticmethod
    def variable(nvars: int, i: int, power: int = 1) -> "MPoly":
        e = [0] * nvars
        e[i] = power
        return MPoly(nvars, {tuple(e): CycloNum.one()})

    # -- inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(v == 0 for v in e) for e in self.terms)

    def constant_value(self) -> CycloNum:
        if self.is_zero():
            return CycloNum.zero()
        [(e, c)] = self.terms.items()
        if any(v != 0 for v in e):
            raise ValueError("not a constant")
        return c

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self.terms)

    def coeff(self, e) -> CycloNum:
        return self.terms.get(tuple(e), CycloNum.zero())

    def degree_in(self, i: int) -> int:
        """Largest exponent of variable i (0 for the zero polynomial)."""
        return max((e[i] for e in self.terms), default=0)

    def min_degree_in(self, i: int) -> int:
        return min((e[i] for e in self.terms), default=0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def variables_used(self) -> list[int]:
        return [i for i in range(self.nvars) if any(e[i] for e in self.terms)]

    def coefficient_conductor(self) -> int:
        n = 1
        for c in self.terms.values():
            n = join_conductors(n, c.conductor)
        return n

    def lex_leading(self) -> tuple[tuple[int, ...], CycloNum]:
        e = max(self.terms)
        return e, self.terms[e]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MPoly):
            return NotImplemented
        if self.nvars != other.nvars or len(self.terms) != len(other.terms):
            return False
        return all(other.terms.get(e) == c for e, c in self.terms.items())

    def __repr__(self) -> str:
        if self.is_zero():
            return "MPoly(0)"
        bits = [f"{c!r}*x^{e}" for e, c in sorted(self.terms.items())]
        return "MPoly(" + " + ".join(bits) + ")"

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: "MPoly") -> "MPoly":
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                terms.pop(e, None)
            else:
                terms[e] = s
        return MPoly(self.nvars, terms)

    def __neg__(self) -> "MPoly":
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MPoly") -> "MPoly":
        return self + (-other)

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            c = _as_coeff(other)
            if c.is_zero():
                return MPoly.zero(self.nvars)
            return MPoly(self.nvars, {e: v * c for e, v in self.terms.items()})
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                s = out.get(e)
                s = p if s is None else s + p
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return MPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ValueError("negative polynomial power")
        out = MPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def map_coeffs(self, fn) -> "MPoly":
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            if not v.is_zero():
                out[e] = v
        return MPoly(self.nvars, out)

    def exact_div(self, other: "MPoly") -> "MPoly":
        """Quotient self/other when the division is exact; raises otherwise."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")
        # Exponents can be negative, so lex descent alone does not terminate.
        # An exact quotient's support sits in the per-variable box
        # [min_i(self)-min_i(other), max_i(self)-max_i(other)]; leading
        # exponents strictly decrease, so escaping the box proves inexactness.
        lo = tuple(
            min(e[i] for e in self.terms) - min(e[i] for e in other.terms)
            for i in range(self.nvars)
        )
        hi = tuple(
            max(e[i] for e in self.terms) - max(e[i] for e in other.terms)
            for i in range(self.nvars)
        )
        rem = self
        quot: dict = {}
        le, lc = other.lex_leading()
        lc_inv = lc.inverse()
        while not rem.is_zero():
            re, rc = rem.lex_leading()
            qe = tuple(a - b for a, b in zip(re, le))
            if any(q < a or q > b for q, a, b in zip(qe, lo, hi)):
                raise ArithmeticError("division is not exact")
            qc = rc * lc_inv
            quot[qe] = qc
            rem = rem - MPoly(self.nvars, {qe: qc}) * other
        return MPoly(self.nvars, quot)

    # -- torus-specific transforms --------------------------------------------

    def content_strip(self) -> "MPoly":
        """Shift exponents so each variable's minimum is 0 (torus units only)."""
        if self.is_zero():
            return self
        mins = [min(e[i] for e in self.terms) for i in range(self.nvars)]
        if all(m == 0 for m in mins):
            return self
        return MPoly(
            self.nvars,
            {tuple(v - m for v, m in zip(e, mins)): c for e, c in self.terms.items()},
        )

    def scale_vars(self, roots: tuple) -> "MPoly":
        """Substitute x_i -> roots[i] * x_i; roots are roots of unity."""
        out: dict = {}
        for e, c in self.terms.items():
            r = RootOfUnity.one()
            for i, ei in enumerate(e):
                if ei:
                    r = r * roots[i] ** ei
            if not r.is_one:
                n = join_conductors(c.conductor, r.field_conductor)
                c = c * r.as_cyclonum(n)
            if not c.is_zero():
                out[e] = c
        return MPoly(self.nvars, out)

    def power_vars(self, k: int) -> "MPoly":
        """Substitute x_i -> x_i^k for every variable."""
        return MPoly(self.nvars, {tuple(v * k for v in e): c for e, c in self.terms.items()})

    def galois_map(self, aut: GaloisAut) -> "MPoly":
        return self.map_coeffs(lambda c: aut.apply(c if aut.conductor % c.conductor == 0 else c.embed(aut.conductor)))

    def monomial_substitute(self, mat) -> "MPoly":
        """Substitute x_j -> prod_i y_i^mat[i][j]; exponents map as e -> mat @ e."""
        n = self.nvars
        out: dict = {}
        for e, c in self.terms.items():
            ne = tuple(sum(mat[i][j] * e[j] for j in range(n)) for i in range(n))
            s = out.get(ne)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(ne, None)
            else:
                out[ne] = s
        return MPoly(n, out)

    def derivative(self, i: int) -> "MPoly":
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = e[:i] + (e[i] - 1,) + e[i + 1 :]
            v = c * e[i]
            prev = out.get(ne)
            v = v if prev is None else prev + v
            if not v.is_zero():
                out[ne] = v
            else:
                out.pop(ne, None)
        return MPoly(self.nvars, out)

    def specialize(self, i: int, value) -> "MPoly":
        """Plug a root of unity or CycloNum into variable i (exponent set to 0)."""
        if isinstance(value, RootOfUnity):
            out: dict = {}
            for e, c in self.terms.items():
                r = value ** e[i]
                if not r.is_one:
                    n = join_conductors(c.conductor, r.field_conductor)
                    c = c * r.as_cyclonum(n)
                ne = e[:i] + (0,) + e[i + 1 :]
                s = out.get(ne)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(ne, None)
                else:
                    out[ne] = s
            return MPoly(self.nvars, out)
        value = _as_coeff(value)
        pow_cache: dict[int, CycloNum] = {0: CycloNum.one()}
        inv = None
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k not in pow_cache:
                if k > 0:
                    pow_cache[k] = value**k
                else:
                    if inv is None:
                        inv = value.inverse()
                    pow_cache[k] = inv ** (-k)
            c = c * pow_cache[k]
            ne = e[:i] + (0,) + e[i + 1 :]
            s = out.get(ne)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(ne, None)
            else:
                out[ne] = s
        return MPoly(self.nvars, out)

    # -- dense views ----------------------------------------------------------

    def dense_in(self, i: int) -> list["MPoly"]:
        """Dense coefficient list in variable i, entries polynomials in the rest."""
        d = self.degree_in(i)
        if self.min_degree_in(i) < 0:
            raise ValueError("negative exponents; content_strip first")
        out = [MPoly.zero(self.nvars) for _ in range(d + 1)]
        for e, c in self.terms.items():
            ne = e[:i] + (0,) + e[i + 1 :]
            k = e[i]
            out[k] = out[k] + MPoly(self.nvars, {ne: c})
        return out

    @staticmethod
    def from_dense(coeffs: list["MPoly"], i: int, nvars: int) -> "MPoly":
        out = MPoly.zero(nvars)
        for k, c in enumerate(coeffs):
            if c.is_zero():
                continue
            shifted = MPoly(nvars, {e[:i] + (e[i] + k,) + e[i + 1 :]: v for e, v in c.terms.items()})
            out = out + shifted
        return out

    def dense_univariate(self, i: int | None = None) -> list[CycloNum]:
        """Dense CycloNum list for a polynomial using at most one variable."""
        used = self.variables_used()
        if len(used) > 1 or (used and i is not None and used != [i]):
            raise ValueError("polynomial is not univariate in the requested variable")
        if i is None:
            i = used[0] if used else 0
        d = self.degree_in(i)
        if self.min_degree_in(i) < 0:
            raise ValueError("negative exponents; content_strip first")
        out = [CycloNum.zero() for _ in range(d + 1)]
        for e, c in self.terms.items():
            out[e[i]] = out[e[i]] + c
        return out


def evaluate_at_torsion(f: MPoly, point: tuple) -> CycloNum:
    """Exact value of f at a torsion point (tuple of RootOfUnity)."""
    if len(point) != f.nvars:
        raise ValueError("point dimension does not match the polynomial")
    # group terms by the root of unity their monomial evaluates to
    buckets: dict[RootOfUnity, CycloNum] = {}
    for e, c in f.terms.items():
        r = RootOfUnity.one()
        for ri, ei in zip(point, e):
            if ei:
                r = r * ri**ei
        prev = buckets.get(r)
        buckets[r] = c if prev is None else prev + c
    total = CycloNum.zero()
    for r, c in buckets.items():
        if c.is_zero():
            continue
        n = join_conductors(c.conductor, r.field_conductor)
        total = total + c * r.as_cyclonum(n)
    return total


def primitive_exponent(e: tuple) -> tuple:
    """e divided by gcd of entries, sign-normalized (first nonzero > 0)."""
    g = 0
    for v in e:
        g = gcd(g, abs(v))
    if g == 0:
        return e
    out = tuple(v // g for v in e)
    for v in out:
        if v > 0:
            return out
        if v < 0:
            return tuple(-w for w in out)
    return out
