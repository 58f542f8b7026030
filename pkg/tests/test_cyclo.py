from __future__ import annotations

from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from torcosets.arith import Q, euler_phi
from torcosets.cyclo import (
    CycloNum,
    GaloisAut,
    RootOfUnity,
    conductor_normalize,
    cyclotomic_poly,
    get_max_conductor,
    join_conductors,
    set_max_conductor,
)
from torcosets.errors import CapExceeded

CONDUCTORS = (1, 3, 4, 5, 7, 8, 9, 12)


@st.composite
def cyclonums(draw, conductors=CONDUCTORS):
    n = draw(st.sampled_from(conductors))
    phi = euler_phi(n)
    nums = draw(st.lists(st.integers(-9, 9), min_size=phi, max_size=phi))
    dens = draw(st.lists(st.integers(1, 6), min_size=phi, max_size=phi))
    return CycloNum(n, tuple(Q(a, b) for a, b in zip(nums, dens)))


def roots_strategy(max_order=24):
    return st.builds(RootOfUnity.make, st.integers(0, 200), st.integers(1, max_order))


# -- cyclotomic polynomials ------------------------------------------------


def test_cyclotomic_poly_tables():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    assert cyclotomic_poly(7) == (1,) * 7


@given(st.integers(1, 150))
def test_cyclotomic_poly_degree_and_divides(n):
    poly = cyclotomic_poly(n)
    assert len(poly) == euler_phi(n) + 1
    assert poly[-1] == 1
    # product over divisors reconstructs x^n - 1: check by evaluating at x = 2
    val = 1
    for d in range(1, n + 1):
        if n % d == 0:
            val *= sum(c * 2**i for i, c in enumerate(cyclotomic_poly(d)))
    assert val == 2**n - 1


def test_conductor_normalize():
    assert conductor_normalize(1) == 1
    assert conductor_normalize(2) == 1
    assert conductor_normalize(6) == 3
    assert conductor_normalize(12) == 12
    assert conductor_normalize(18) == 9
    assert join_conductors(3, 4) == 12
    assert join_conductors(4, 6) == 12
    assert join_conductors(1, 1) == 1


# -- roots of unity ---------------------------------------------------------


def test_root_canonical_form():
    assert RootOfUnity.make(4, 6) == RootOfUnity(2, 3)
    assert RootOfUnity.make(6, 6) == RootOfUnity(0, 1)
    assert RootOfUnity.make(-1, 6) == RootOfUnity(5, 6)
    assert RootOfUnity.minus_one() == RootOfUnity(1, 2)


@given(roots_strategy(), roots_strategy())
def test_root_group_law(a, b):
    p = a * b
    assert gcd(p.num, p.ord) == 1 or p.num == 0
    assert p * b.inverse() == a
    assert (a * a.inverse()).is_one


@given(roots_strategy(), st.integers(-12, 12))
def test_root_powers(r, k):
    stepwise = RootOfUnity.one()
    for _ in range(abs(k)):
        stepwise = stepwise * (r if k >= 0 else r.inverse())
    assert r**k == stepwise


def test_field_conductor():
    assert RootOfUnity.make(1, 6).field_conductor == 3
    assert RootOfUnity.make(1, 4).field_conductor == 4
    assert RootOfUnity.make(1, 2).field_conductor == 1
    assert RootOfUnity.one().field_conductor == 1


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6, 8, 10, 12, 15])
def test_root_cyclonum_round_trip(m):
    for k in range(m):
        r = RootOfUnity.make(k, m)
        v = r.as_cyclonum()
        assert v.conductor == r.field_conductor
        assert v.as_root_of_unity() == r
        # and at a larger conductor
        big = join_conductors(r.field_conductor, 24)
        assert r.as_cyclonum(big).as_root_of_unity() == r


@given(roots_strategy(12), roots_strategy(12))
def test_root_mul_matches_cyclonum_mul(a, b):
    n = join_conductors(a.field_conductor, b.field_conductor)
    prod_num = a.as_cyclonum(n) * b.as_cyclonum(n)
    assert prod_num.as_root_of_unity() == a * b


# -- cyclotomic numbers -----------------------------------------------------


def test_hexagonal_identity():
    z6 = CycloNum.zeta(6)
    assert z6.conductor == 3  # stored in Q(zeta_3)
    assert z6 + z6.inverse() == CycloNum.one()


def test_gaussian_product():
    i = CycloNum.zeta(4)
    p = (CycloNum.one() + i) * (CycloNum.one() - i)
    assert p == CycloNum.from_rational(2)
    assert p.reduce_conductor().conductor == 1


@given(cyclonums(), cyclonums(), cyclonums())
@settings(max_examples=60)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a + (-a) == CycloNum.zero(a.conductor)


@given(cyclonums())
def test_inverse_round_trip(a):
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == CycloNum.one()


@given(cyclonums(), st.integers(0, 6))
def test_pow_matches_repeated_mul(a, k):
    out = CycloNum.one()
    for _ in range(k):
        out = out * a
    assert a**k == out


@given(cyclonums())
def test_embed_round_trip(a):
    big = join_conductors(a.conductor, 24)
    lifted = a.embed(big)
    assert lifted == a
    assert lifted.conductor_of() == a.conductor_of()
    reduced = lifted.reduce_conductor()
    assert reduced.conductor == a.conductor_of()
    assert reduced == a


@given(cyclonums(), cyclonums())
def test_embed_is_ring_hom(a, b):
    big = join_conductors(join_conductors(a.conductor, b.conductor), 8)
    assert (a * b).embed(big) == a.embed(big) * b.embed(big)
    assert (a + b).embed(big) == a.embed(big) + b.embed(big)


def galois_exponents(n):
    return [a for a in range(1, n) if gcd(a, n) == 1] or [1]


@pytest.mark.parametrize("n", [3, 4, 5, 8, 9, 12])
def test_galois_group_action(n):
    z = CycloNum.zeta(n)
    x = z + CycloNum.from_rational(Q(1, 2)) * z * z
    for a in galois_exponents(n):
        sa = GaloisAut.make(n, a)
        assert sa.apply(z) == z**a
        for b in galois_exponents(n):
            sb = GaloisAut.make(n, b)
            assert sa.compose(sb).apply(x) == sa.apply(sb.apply(x))
        assert sa.inverse().apply(sa.apply(x)) == x


@given(cyclonums(), cyclonums())
@settings(max_examples=40)
def test_galois_is_ring_hom(a, b):
    n = join_conductors(a.conductor, b.conductor)
    a, b = a.embed(n), b.embed(n)
    for e in galois_exponents(n)[:3]:
        assert (a * b).galois(e) == a.galois(e) * b.galois(e)
        assert (a + b).galois(e) == a.galois(e) + b.galois(e)


@given(cyclonums())
def test_galois_preserves_conductor_of(a):
    n = a.conductor
    for e in galois_exponents(n)[:3]:
        assert a.galois(e).conductor_of() == a.conductor_of()


def test_conductor_of_examples():
    z12 = CycloNum.zeta(12)
    assert (z12**4).conductor_of() == 3  # zeta_3
    assert (z12**3).conductor_of() == 4  # i
    assert (z12**6).conductor_of() == 1  # -1
    assert CycloNum.zero(12).conductor_of() == 1
    assert z12.conductor_of() == 12


def test_non_roots_detected():
    assert CycloNum.from_rational(2).as_root_of_unity() is None
    assert CycloNum.zero(4).as_root_of_unity() is None
    one_plus_i = CycloNum.one() + CycloNum.zeta(4)
    assert one_plus_i.as_root_of_unity() is None
    assert (CycloNum.zeta(3) * 2).as_root_of_unity() is None


@given(cyclonums())
def test_hash_agrees_with_eq_across_conductors(a):
    lifted = a.embed(join_conductors(a.conductor, 24))
    assert hash(lifted) == hash(a)


def test_json_round_trips():
    x = CycloNum.zeta(12) + CycloNum.from_rational(Q(-7, 3))
    assert CycloNum.from_json(x.to_json()) == x
    assert x.to_json()["coeffs"][0] == "-7/3"
    r = RootOfUnity.make(5, 12)
    assert RootOfUnity.from_json(r.to_json()) == r


def test_division():
    z8 = CycloNum.zeta(8)
    assert (z8 * 3) / 3 == z8
    assert (z8 / z8) == CycloNum.one()


def test_conductor_cap():
    old = get_max_conductor()
    try:
        set_max_conductor(10)
        with pytest.raises(CapExceeded):
            CycloNum.zeta(11)
        set_max_conductor(old)
        assert CycloNum.zeta(11).conductor == 11
    finally:
        set_max_conductor(old)


def test_complex_sanity():
    # floats are diagnostics only, but they should point at the right place
    z = CycloNum.zeta(5).to_complex()
    assert abs(z - complex(0.309016994, 0.951056516)) < 1e-8
