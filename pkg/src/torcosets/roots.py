"""Roots of unity of univariate polynomials over cyclotomic fields.

A root of unity xi of order m with f(xi) = 0, f of degree D over Q(zeta_N),
satisfies phi(m) <= D * phi(gcd(m, N)): Q(zeta_N)(xi) = Q(zeta_lcm(m,N)) has
degree phi(lcm(m, N)) = phi(m) phi(N) / phi(gcd(m, N)) over Q, and at most
D * phi(N).  That leaves finitely many candidate orders, which we scan with
a modular prescreen and confirm exactly.
"""

from __future__ import annotations

from math import gcd, lcm

from .arith import euler_phi, orders_with_phi_at_most
from .cyclo import CycloNum, RootOfUnity, join_conductors
from .modular import mod_context, reduce_cyclo
from .poly import MPoly

__all__ = ["cyclotomic_roots_univar", "candidate_orders"]


def candidate_orders(degree: int, conductor: int) -> list[int]:
    """Orders m that a torsion root of a degree-`degree` polynomial over
    Q(zeta_conductor) can have."""
    if degree < 1:
        return []
    bound = degree * euler_phi(conductor)
    return [
        m
        for m in orders_with_phi_at_most(bound)
        if euler_phi(m) <= degree * euler_phi(gcd(m, conductor))
    ]


def _exact_value(coeffs: list[CycloNum], root: RootOfUnity) -> CycloNum:
    n = root.field_conductor
    for c in coeffs:
        n = join_conductors(n, c.conductor)
    z = root.as_cyclonum(n)
    acc = CycloNum.zero(n)
    for c in reversed(coeffs):
        acc = acc * z + c.embed(n)
    return acc


def cyclotomic_roots_univar(f: MPoly, var: int | None = None) -> list[RootOfUnity]:
    """All roots of unity of a univariate polynomial, with exact confirmation.

    Monomial factors x^v are stripped first (they never vanish at a root of
    unity), so the zero polynomial is the only rejected input.
    """
    if f.is_zero():
        raise ValueError("the zero polynomial vanishes everywhere")
    stripped = f.content_strip()
    coeffs = [c.reduce_conductor() for c in stripped.dense_univariate(var)]
    degree = len(coeffs) - 1
    if degree == 0:
        return []
    conductor = 1
    for c in coeffs:
        conductor = join_conductors(conductor, c.conductor)
    found: list[RootOfUnity] = []
    for m in candidate_orders(degree, conductor):
        ctx_order = lcm(conductor, m)
        images = None
        for index in range(3):
            try:
                ctx = mod_context(ctx_order, index)
                images = [reduce_cyclo(c, ctx) for c in coeffs]
                break
            except ValueError:
                continue
        for k in range(m):
            if m > 1 and gcd(k, m) != 1:
                continue  # non-primitive powers are covered at their own order
            if images is not None:
                point = ctx.root_power(k * (ctx_order // m))
                acc = 0
                for c in reversed(images):
                    acc = (acc * point + c) % ctx.prime
                if acc:
                    continue
            root = RootOfUnity.make(k, m)
            if _exact_value(coeffs, root).is_zero():
                found.append(root)
    return sorted(found, key=RootOfUnity.sort_key)
