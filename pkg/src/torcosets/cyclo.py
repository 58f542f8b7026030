"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, zeta_N, ..., zeta_N^(phi(N)-1)
modulo the N-th cyclotomic polynomial, with arbitrary-precision rational
coordinates.  Conductors are normalized to N != 2 (mod 4), since
Q(zeta_N) = Q(zeta_(N/2)) for N = 2 (mod 4); this makes the conductor of a
represented field unique.  There is no floating point anywhere in this
module; complex() conversions exist only as debugging aids.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import gcd, lcm

from .arith import Q, divisors, euler_phi, factorize
from .errors import CapExceeded

__all__ = [
    "RootOfUnity",
    "CycloNum",
    "GaloisAut",
    "conductor_normalize",
    "cyclotomic_poly",
    "join_conductors",
    "set_max_conductor",
    "get_max_conductor",
]

_ZERO = Q(0)
_ONE = Q(1)

_max_conductor = 10_000


def set_max_conductor(cap: int) -> None:
    """Global guard against runaway conductor growth (CLI: --max-conductor)."""
    global _max_conductor
    if cap < 1:
        raise ValueError("conductor cap must be positive")
    _max_conductor = cap


def get_max_conductor() -> int:
    return _max_conductor


def conductor_normalize(n: int) -> int:
    """Unique conductor of Q(zeta_n): halve n when n = 2 (mod 4)."""
    if n < 1:
        raise ValueError("conductor must be positive")
    return n // 2 if n % 4 == 2 else n


def join_conductors(a: int, b: int) -> int:
    # lcm of two normalized conductors is never 2 mod 4
    return conductor_normalize(lcm(a, b))


def _poly_divmod_int(num: list[int], den: list[int]) -> list[int]:
    """Exact quotient of integer polynomials (dense ascending, monic-ish den)."""
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    quot = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c == 0:
            continue
        q, r = divmod(c, lead)
        if r:
            raise ArithmeticError("non-exact cyclotomic division")
        quot[i - dn] = q
        for j in range(dn + 1):
            num[i - dn + j] -= q * den[j]
    if any(num):
        raise ArithmeticError("non-exact cyclotomic division")
    return quot


@functools.cache
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, ascending degree.

    Computed by dividing x^n - 1 by the cyclotomic polynomials of the proper
    divisors of n.
    """
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in divisors(n)[:-1]:
        num = _poly_divmod_int(num, list(cyclotomic_poly(d)))
    return tuple(num)


@functools.cache
def _ctx(n: int) -> tuple[int, tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Per-conductor data: (phi(n), Phi_n, reduction rows for x^e, e in [phi, n))."""
    phi = euler_phi(n)
    poly = cyclotomic_poly(n)
    rows: list[tuple[int, ...]] = []
    if n > phi:
        cur = [-c for c in poly[:phi]]  # x^phi mod Phi_n
        rows.append(tuple(cur))
        for _ in range(phi + 1, n):
            top = cur[phi - 1]
            cur = [0] + cur[: phi - 1]
            if top:
                first = rows[0]
                for j in range(phi):
                    if first[j]:
                        cur[j] += top * first[j]
            rows.append(tuple(cur))
    return phi, poly, tuple(rows)


def _conductor_ctx(n: int):
    if n > _max_conductor:
        raise CapExceeded(f"conductor {n} exceeds the cap {_max_conductor}")
    if n % 4 == 2:
        raise ValueError(f"conductor {n} is not normalized; use {n // 2}")
    return _ctx(n)


@dataclass(frozen=True, slots=True)
class RootOfUnity:
    """A root of unity e^(2*pi*i*num/ord) in lowest terms; identity is (0, 1)."""

    num: int
    ord: int

    @staticmethod
    def make(num: int, order: int) -> "RootOfUnity":
        if order < 1:
            raise ValueError("order must be positive")
        num %= order
        if num == 0:
            return RootOfUnity(0, 1)
        g = gcd(num, order)
        return RootOfUnity(num // g, order // g)

    @staticmethod
    def one() -> "RootOfUnity":
        return RootOfUnity(0, 1)

    @staticmethod
    def minus_one() -> "RootOfUnity":
        return RootOfUnity(1, 2)

    @staticmethod
    def zeta(order: int) -> "RootOfUnity":
        return RootOfUnity.make(1, order)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        return RootOfUnity.make(self.num * other.ord + other.num * self.ord, self.ord * other.ord)

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity.make(self.num * k, self.ord)

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity.make(-self.num, self.ord)

    @property
    def is_one(self) -> bool:
        return self.ord == 1

    @property
    def field_conductor(self) -> int:
        """Conductor of Q(self): ord unless ord = 2 (mod 4), then ord/2."""
        return conductor_normalize(self.ord)

    def sort_key(self) -> tuple[int, int]:
        return (self.ord, self.num)

    def as_pair_mod(self, order: int) -> int:
        """Exponent k with self = zeta_order^k; requires ord | order."""
        if order % self.ord:
            raise ValueError("order is not a multiple of ord")
        return self.num * (order // self.ord)

    def as_cyclonum(self, conductor: int | None = None) -> "CycloNum":
        """Exact power-basis representation at the given (or minimal) conductor."""
        n = self.field_conductor if conductor is None else conductor
        k, m = self.num, self.ord
        sign = 1
        if m % 4 == 2:
            # zeta_m^k = -zeta_(m/2)^(k(1-m/2)/2) for m = 2 (mod 4), k odd
            half = m // 2
            k = (k * ((1 - half) // 2)) % half
            m = half
            sign = -1
        if n % m:
            raise ValueError(f"root of order {self.ord} does not live at conductor {n}")
        phi, _, rows = _conductor_ctx(n)
        e = (k * (n // m)) % n
        coeffs = [_ZERO] * phi
        if e < phi:
            coeffs[e] = Q(sign)
        else:
            row = rows[e - phi]
            for j in range(phi):
                if row[j]:
                    coeffs[j] = Q(sign * row[j])
        return CycloNum(n, tuple(coeffs))

    def to_complex(self) -> complex:
        import cmath

        return cmath.exp(2j * cmath.pi * self.num / self.ord)

    def to_json(self) -> dict:
        return {"num": self.num, "ord": self.ord}

    @staticmethod
    def from_json(obj: dict) -> "RootOfUnity":
        return RootOfUnity.make(int(obj["num"]), int(obj["ord"]))


class CycloNum:
    """An element of Q(zeta_N) in the power basis modulo Phi_N."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: tuple):
        self.conductor = conductor
        self.coeffs = coeffs

    # -- construction -------------------------------------------------------

    @staticmethod
    def from_rational(q) -> "CycloNum":
        return CycloNum(1, (Q(q),))

    @staticmethod
    def zero(conductor: int = 1) -> "CycloNum":
        phi, _, _ = _conductor_ctx(conductor)
        return CycloNum(conductor, (_ZERO,) * phi)

    @staticmethod
    def one() -> "CycloNum":
        return CycloNum(1, (_ONE,))

    @staticmethod
    def zeta(conductor: int) -> "CycloNum":
        n = conductor_normalize(conductor)
        if n == conductor:
            return RootOfUnity.zeta(n).as_cyclonum(n)
        return RootOfUnity.zeta(conductor).as_cyclonum(n)

    # -- basics -------------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("not a rational number")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __hash__(self):
        x = self.reduce_conductor()
        return hash((x.conductor, x.coeffs))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Q)):
            other = CycloNum.from_rational(other)
        if not isinstance(other, CycloNum):
            return NotImplemented
        if self.conductor == other.conductor:
            return self.coeffs == other.coeffs
        a, b = _common(self, other)
        return a.coeffs == b.coeffs

    def __repr__(self) -> str:
        return f"CycloNum({self.conductor}, {[str(c) for c in self.coeffs]})"

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "CycloNum":
        if isinstance(other, (int, Q)):
            other = CycloNum.from_rational(other)
        a, b = _common(self, other)
        return CycloNum(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycloNum":
        return CycloNum(self.conductor, tuple(-x for x in self.coeffs))

    def __sub__(self, other) -> "CycloNum":
        if not isinstance(other, CycloNum):
            other = CycloNum.from_rational(other)
        return self + (-other)

    def __rsub__(self, other) -> "CycloNum":
        return CycloNum.from_rational(other) + (-self)

    def __mul__(self, other) -> "CycloNum":
        if isinstance(other, (int, Q)):
            q = Q(other)
            return CycloNum(self.conductor, tuple(c * q for c in self.coeffs))
        a, b = _common(self, other)
        n = a.conductor
        phi, _, rows = _conductor_ctx(n)
        conv = [_ZERO] * (2 * phi - 1 if phi > 1 else 1)
        for i, x in enumerate(a.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(b.coeffs):
                if y == 0:
                    continue
                conv[i + j] += x * y
        out = list(conv[:phi])
        for e in range(phi, len(conv)):
            c = conv[e]
            if c == 0:
                continue
            em = e % n  # zeta_n^n = 1; 2*phi - 2 can exceed n - 1 (e.g. n = 5)
            if em < phi:
                out[em] += c
                continue
            row = rows[em - phi]
            for j in range(phi):
                if row[j]:
                    out[j] += c * row[j]
        return CycloNum(n, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        n = self.conductor
        phi, poly, _ = _conductor_ctx(n)
        r0 = [Q(c) for c in poly]
        r1 = _trim(list(self.coeffs))
        # invariant: s_i * self = r_i (mod Phi_n); Phi_n and self are coprime
        s0: list = [_ZERO]
        s1: list = [_ONE]
        while True:
            if len(r1) == 1:
                inv = 1 / r1[0]
                out = [c * inv for c in s1] + [_ZERO] * phi
                return CycloNum(n, tuple(out[:phi]))
            quot, rem = _poly_divmod_q(r0, r1)
            r0, r1 = r1, _trim(rem)
            s0, s1 = s1, _poly_sub(s0, _poly_mul(quot, s1))
            if not r1:
                raise ZeroDivisionError("element is a zero divisor (not expected in a field)")

    def __truediv__(self, other) -> "CycloNum":
        if isinstance(other, (int, Q)):
            q = Q(other)
            return CycloNum(self.conductor, tuple(c / q for c in self.coeffs))
        return self * other.inverse()

    def __pow__(self, k: int) -> "CycloNum":
        if k < 0:
            return self.inverse() ** (-k)
        out = CycloNum.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- field structure ----------------------------------------------------

    def embed(self, conductor: int) -> "CycloNum":
        """Rewrite at a larger conductor; requires self.conductor | conductor."""
        n, m = self.conductor, conductor
        if m == n:
            return self
        if m % n:
            raise ValueError(f"cannot embed conductor {n} into {m}")
        phi_m, _, rows = _conductor_ctx(m)
        step = m // n
        out = [_ZERO] * phi_m
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = i * step
            if e < phi_m:
                out[e] += c
            else:
                row = rows[e - phi_m]
                for j in range(phi_m):
                    if row[j]:
                        out[j] += c * row[j]
        return CycloNum(m, tuple(out))

    def galois(self, a: int) -> "CycloNum":
        """Image under zeta_N -> zeta_N^a; requires gcd(a, N) = 1."""
        n = self.conductor
        a %= n
        if gcd(a, n) != 1:
            raise ValueError("galois exponent must be coprime to the conductor")
        if a == 1 or n == 1:
            return self
        phi, _, rows = _conductor_ctx(n)
        out = [_ZERO] * phi
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = (i * a) % n
            if e < phi:
                out[e] += c
            else:
                row = rows[e - phi]
                for j in range(phi):
                    if row[j]:
                        out[j] += c * row[j]
        return CycloNum(n, tuple(out))

    def conductor_of(self) -> int:
        """Minimal conductor N' (N' != 2 mod 4) with self in Q(zeta_N')."""
        n = self.conductor
        for d in divisors(n):
            if d % 4 == 2:
                continue
            if self._fixed_by_subgroup(d):
                return d
        return n

    def _fixed_by_subgroup(self, d: int) -> bool:
        """Is self fixed by every zeta_N -> zeta_N^a with a = 1 (mod d)?"""
        n = self.conductor
        for a in range(1 + d, n, d):
            if gcd(a, n) != 1:
                continue
            if self.galois(a) != self:
                return False
        return True

    def reduce_conductor(self) -> "CycloNum":
        """Re-express at the minimal conductor."""
        d = self.conductor_of()
        n = self.conductor
        if d == n:
            return self
        phi_d, _, _ = _conductor_ctx(d)
        phi_n, _, _ = _conductor_ctx(n)
        # columns: zeta_d^j expressed at conductor n; solve for the coordinates
        matrix = [_power_at_conductor(d, j, n) for j in range(phi_d)]
        sol = _solve_columns(matrix, list(self.coeffs), phi_n)
        return CycloNum(d, tuple(sol))

    def as_root_of_unity(self) -> RootOfUnity | None:
        """Exact (k, m) if self is a root of unity, else None."""
        if self.is_zero():
            return None
        n = self.conductor
        order_cap = n if n % 4 == 0 else 2 * n
        if self ** order_cap != CycloNum.one():
            return None
        # trim to the exact order
        order = order_cap
        for p, e in factorize(order_cap):
            for _ in range(e):
                if order % p == 0 and self ** (order // p) == CycloNum.one():
                    order //= p
                else:
                    break
        for k in range(order):
            if gcd(k, order) == 1 or order == 1:
                if RootOfUnity.make(k, order).as_cyclonum(n) == self:
                    return RootOfUnity.make(k, order)
        return None

    # -- conversions --------------------------------------------------------

    def to_complex(self) -> complex:
        import cmath

        n = self.conductor
        z = cmath.exp(2j * cmath.pi / n)
        total = 0j
        for i, c in enumerate(self.coeffs):
            if c != 0:
                total += float(c) * z**i
        return total

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json(obj: dict) -> "CycloNum":
        n = int(obj["conductor"])
        phi, _, _ = _conductor_ctx(n)
        coeffs = tuple(Q(c) for c in obj["coeffs"])
        if len(coeffs) != phi:
            raise ValueError("coefficient vector length does not match phi(conductor)")
        return CycloNum(n, coeffs)


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_sub(a: list, b: list) -> list:
    out = list(a) + [_ZERO] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return out


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y != 0:
                out[i + j] += x * y
    return out


def _poly_divmod_q(num: list, den: list) -> tuple[list, list]:
    """Quotient and remainder over Q, dense ascending coefficients."""
    num = list(num)
    dn = len(den) - 1
    inv_lead = 1 / den[-1]
    quot = [_ZERO] * max(len(num) - dn, 0)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c == 0:
            continue
        q = c * inv_lead
        quot[i - dn] = q
        for j in range(dn + 1):
            num[i - dn + j] -= q * den[j]
    return quot, num[:dn]


def _common(a: CycloNum, b: CycloNum) -> tuple[CycloNum, CycloNum]:
    if a.conductor == b.conductor:
        return a, b
    m = join_conductors(a.conductor, b.conductor)
    return a.embed(m), b.embed(m)


@functools.cache
def _power_at_conductor(d: int, j: int, n: int) -> tuple:
    """Coefficients of zeta_d^j at conductor n (d | n)."""
    return RootOfUnity.make(j, d).as_cyclonum(n).coeffs


def _solve_columns(columns: list, target: list, nrows: int) -> list:
    """Solve sum_j x_j * columns[j] = target exactly (consistent by construction)."""
    ncols = len(columns)
    mat = [[Q(columns[j][i]) for j in range(ncols)] + [Q(target[i])] for i in range(nrows)]
    piv_rows = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if mat[i][c] != 0), None)
        if piv is None:
            raise ArithmeticError("singular system in conductor reduction")
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [v - f * w for v, w in zip(mat[i], mat[r])]
        piv_rows.append(r)
        r += 1
    for i in range(r, nrows):
        if mat[i][ncols] != 0:
            raise ArithmeticError("inconsistent system in conductor reduction")
    return [mat[i][ncols] for i in range(ncols)]


@dataclass(frozen=True, slots=True)
class GaloisAut:
    """The automorphism zeta_N -> zeta_N^a of Q(zeta_N), gcd(a, N) = 1."""

    conductor: int
    exponent: int

    @staticmethod
    def make(conductor: int, exponent: int) -> "GaloisAut":
        n = conductor_normalize(conductor)
        a = exponent % n if n > 1 else 0
        if n == 1:
            return GaloisAut(1, 0)
        if gcd(a, n) != 1:
            raise ValueError("exponent must be coprime to the conductor")
        return GaloisAut(n, a)

    @staticmethod
    def identity(conductor: int) -> "GaloisAut":
        return GaloisAut.make(conductor, 1 if conductor > 1 else 0)

    def apply(self, x: CycloNum) -> CycloNum:
        if self.conductor == 1:
            return x
        if self.conductor % x.conductor:
            raise ValueError("element conductor must divide the automorphism conductor")
        return x.galois(self.exponent % x.conductor if x.conductor > 1 else 0) if x.conductor > 1 else x

    def apply_root(self, r: RootOfUnity) -> RootOfUnity:
        if self.conductor == 1:
            return r
        if (self.conductor % r.field_conductor) != 0:
            raise ValueError("root does not live in the automorphism's field")
        return r ** self.exponent

    def compose(self, other: "GaloisAut") -> "GaloisAut":
        if self.conductor != other.conductor:
            raise ValueError("automorphisms live at different conductors")
        if self.conductor == 1:
            return self
        return GaloisAut.make(self.conductor, self.exponent * other.exponent)

    def inverse(self) -> "GaloisAut":
        if self.conductor == 1:
            return self
        return GaloisAut.make(self.conductor, pow(self.exponent, -1, self.conductor))

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "exponent": self.exponent}
