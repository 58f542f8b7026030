from __future__ import annotations

from math import gcd, lcm, prod

import pytest
from hypothesis import given, strategies as st

from torcosets.arith import (
    Q,
    divisors,
    euler_phi,
    factorize,
    is_probable_prime,
    is_squarefree,
    multiplicative_order,
    orders_with_phi_at_most,
    primes_up_to,
)


def phi_naive(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@given(st.integers(1, 5000))
def test_factorize_reconstructs(n):
    fac = factorize(n)
    assert prod(p**e for p, e in fac) == n
    for p, _ in fac:
        assert is_probable_prime(p)
    ps = [p for p, _ in fac]
    assert ps == sorted(ps)


@given(st.integers(1, 2000))
def test_euler_phi_matches_naive(n):
    assert euler_phi(n) == phi_naive(n)


@given(st.integers(1, 500), st.integers(1, 500))
def test_phi_lcm_gcd_identity(m, n):
    assert euler_phi(lcm(m, n)) * euler_phi(gcd(m, n)) == euler_phi(m) * euler_phi(n)


@given(st.integers(1, 1000))
def test_divisors_sorted_complete(n):
    ds = divisors(n)
    assert ds == sorted(d for d in range(1, n + 1) if n % d == 0)


@given(st.integers(1, 1000))
def test_is_squarefree(n):
    expected = all(n % (p * p) for p in range(2, n + 1))
    assert is_squarefree(n) == expected


def test_primes_up_to():
    assert list(primes_up_to(30)) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert list(primes_up_to(1)) == []


@pytest.mark.parametrize("bound", [1, 2, 4, 6, 10, 16, 24])
def test_orders_with_phi_at_most(bound):
    # phi(m) >= sqrt(m/2), so phi(m) <= B implies m <= 2B^2
    brute = [m for m in range(1, 2 * bound * bound + 2) if euler_phi(m) <= bound]
    assert orders_with_phi_at_most(bound) == tuple(brute)


def test_orders_with_phi_small():
    assert orders_with_phi_at_most(1) == (1, 2)
    assert orders_with_phi_at_most(2) == (1, 2, 3, 4, 6)


@given(st.integers(2, 400), st.integers(2, 400))
def test_multiplicative_order(a, n):
    if gcd(a, n) != 1:
        return
    k = multiplicative_order(a, n)
    assert pow(a, k, n) == 1
    assert all(pow(a, j, n) != 1 for j in range(1, k))


def test_q_is_exact():
    assert Q(1, 3) + Q(1, 6) == Q(1, 2)
    assert str(Q(-4, 6)) == "-2/3"
