"""Reduction of cyclotomic integers modulo a large rational prime.

This is a one-sided filter, never a decision procedure.  We choose p = 1
(mod C) and an element w of (Z/p)* whose C-th cyclotomic value is verified
to vanish: Phi_C(w) = 0 (mod p).  That makes

    Z[zeta_C] -> Z/p,  zeta_C -> w

a well-defined ring homomorphism, so a true zero always maps to 0 and a
nonzero image certifies a nonzero element.  A zero image proves nothing and
every caller in this package follows it with exact arithmetic.  The
homomorphism property is checked explicitly, so soundness does not depend
on the primality test.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .arith import factorize, is_probable_prime
from .cyclo import CycloNum, RootOfUnity, cyclotomic_poly

__all__ = ["ModContext", "mod_context", "reduce_cyclo", "reduce_root"]

_MIN_PRIME = 1 << 62


@dataclass(frozen=True, slots=True)
class ModContext:
    conductor: int
    prime: int
    root: int  # verified: Phi_conductor(root) = 0 and root has exact order conductor

    def root_power(self, e: int) -> int:
        return pow(self.root, e % self.conductor, self.prime)


@functools.cache
def mod_context(conductor: int, index: int = 0) -> ModContext:
    """The index-th usable (prime, root) pair for Z[zeta_conductor].

    Distinct indices give distinct primes, so a caller that hits a zero
    image of a nonzero element (probability about C/p) can simply move on.
    """
    c = max(conductor, 1)
    p = _MIN_PRIME // c * c + 1
    if p % 2 == 0:
        p += c  # c odd here, so this restores odd parity
    skipped = 0
    while True:
        if is_probable_prime(p):
            root = _order_c_root(p, c)
            if root is not None:
                if skipped == index:
                    return ModContext(c, p, root)
                skipped += 1
        p += c if c % 2 == 0 else 2 * c  # keep p odd
    raise AssertionError  # unreachable


def _order_c_root(p: int, c: int) -> int | None:
    """Some w with Phi_c(w) = 0 (mod p) and exact order c, or None."""
    if c == 1:
        return 1
    cofactor = (p - 1) // c
    fac = factorize(c)
    for g in range(2, 200):
        w = pow(g, cofactor, p)
        if w == 1:
            continue
        if pow(w, c, p) != 1:
            return None  # p is not what we thought; try another
        if any(pow(w, c // q, p) == 1 for q, _ in fac):
            continue
        if _phi_value(c, p, w) != 0:
            return None
        return w
    return None


def _phi_value(c: int, p: int, w: int) -> int:
    acc = 0
    for coeff in reversed(cyclotomic_poly(c)):
        acc = (acc * w + coeff) % p
    return acc


def reduce_cyclo(x: CycloNum, ctx: ModContext) -> int:
    """Image of x in Z/p; requires x.conductor | ctx.conductor.

    Denominators are inverted mod p.  They are coprime to p in practice (p
    has 62+ bits); if not, ValueError tells the caller to take the next
    context index.
    """
    c, p = ctx.conductor, ctx.prime
    if c % x.conductor:
        raise ValueError("element conductor does not divide the context conductor")
    step = c // x.conductor
    acc = 0
    for i, q in enumerate(x.coeffs):
        if q == 0:
            continue
        num, den = int(q.numerator), int(q.denominator)
        if den % p == 0:
            raise ValueError("denominator shares a factor with the modulus")
        acc += num * pow(den, -1, p) % p * ctx.root_power(i * step)
    return acc % p


def reduce_root(r: RootOfUnity, ctx: ModContext) -> int:
    """Image of a root of unity; requires its order to divide the conductor."""
    if ctx.conductor % r.ord:
        raise ValueError("root order does not divide the context conductor")
    return ctx.root_power(r.num * (ctx.conductor // r.ord))
