"""Small exact number-theory helpers used throughout the package.

Everything here is integer arithmetic; inputs are desk-scale (conductors and
orders up to a few thousand), so trial division is plenty.
"""

from __future__ import annotations

import functools
from math import gcd, lcm, isqrt

try:
    from gmpy2 import mpq as Q  # fast exact rationals
    from gmpy2 import is_prime as _is_prime
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Q

    def _is_prime(n: int) -> bool:
        if n < 2:
            return False
        for p in range(2, isqrt(n) + 1):
            if n % p == 0:
                return False
        return True


__all__ = [
    "Q",
    "gcd",
    "lcm",
    "factorize",
    "euler_phi",
    "divisors",
    "is_squarefree",
    "primes_up_to",
    "is_probable_prime",
    "orders_with_phi_at_most",
    "multiplicative_order",
]


@functools.cache
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((p, e), ...) with p ascending."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@functools.cache
def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorize(n):
        phi *= (p - 1) * p ** (e - 1)
    return phi


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def is_squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factorize(n))


@functools.cache
def primes_up_to(limit: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return tuple(i for i in range(limit + 1) if sieve[i])


def is_probable_prime(n: int) -> bool:
    return bool(_is_prime(n))


def orders_with_phi_at_most(bound: int) -> tuple[int, ...]:
    """All m >= 1 with euler_phi(m) <= bound, ascending.

    Generated by recursing over prime powers (phi(m) >= sqrt(m/2) keeps the
    search tree tiny), so no sieve over the full 2*bound^2 range is needed.
    """
    if bound < 1:
        return ()
    primes = [p for p in primes_up_to(bound + 1) if p - 1 <= bound]
    found: list[int] = []

    def rec(idx: int, m: int, phi: int) -> None:
        found.append(m)
        for i in range(idx, len(primes)):
            p = primes[i]
            f = phi * (p - 1)
            if f > bound:
                # primes are ascending but phi(p) = p-1 is monotone, so stop
                break
            mm, ff = m * p, f
            while ff <= bound:
                rec(i + 1, mm, ff)
                mm, ff = mm * p, ff * p

    rec(0, 1, 1)
    return tuple(sorted(found))


def multiplicative_order(a: int, n: int) -> int:
    """Order of a modulo n; requires gcd(a, n) == 1."""
    if n <= 0 or gcd(a, n) != 1:
        raise ValueError("multiplicative_order needs gcd(a, n) = 1, n > 0")
    # order divides phi; strip unnecessary prime factors from it
    order = euler_phi(n)
    for p, e in factorize(order):
        for _ in range(e):
            if pow(a, order // p, n) == 1:
                order //= p
            else:
                break
    return order
