import pytest
from gmpy2 import is_prime
from hypothesis import given, settings

from conftest import small_cyclonums
from torcosets.cyclo import CycloNum, RootOfUnity, cyclotomic_poly
from torcosets.modular import mod_context, reduce_cyclo, reduce_root


@pytest.mark.parametrize("c", [1, 2, 3, 4, 5, 8, 12, 60, 120])
def test_context_shape(c):
    ctx = mod_context(c)
    assert ctx.conductor == c
    assert c == 1 or ctx.prime % c == 1
    assert ctx.prime > 2**61
    assert is_prime(ctx.prime)
    # the stored root has exact multiplicative order c
    assert pow(ctx.root, c, ctx.prime) == 1
    for q in {2, 3, 5}:
        if c % q == 0:
            assert pow(ctx.root, c // q, ctx.prime) != 1
    # and is a root of the c-th cyclotomic polynomial, making the
    # evaluation map a ring homomorphism
    acc = 0
    for coeff in reversed(cyclotomic_poly(c)):
        acc = (acc * ctx.root + coeff) % ctx.prime
    assert acc == 0


def test_distinct_indices_give_distinct_primes():
    a = mod_context(12, 0)
    b = mod_context(12, 1)
    assert a.prime != b.prime


@settings(deadline=None)
@given(small_cyclonums(conductors=(3, 4)), small_cyclonums(conductors=(3, 4)))
def test_ring_homomorphism(x, y):
    n = 12
    xi, yi = x.embed(n), y.embed(n)
    ctx = mod_context(n)
    p = ctx.prime
    assert reduce_cyclo(xi + yi, ctx) == (reduce_cyclo(xi, ctx) + reduce_cyclo(yi, ctx)) % p
    assert reduce_cyclo(xi * yi, ctx) == (reduce_cyclo(xi, ctx) * reduce_cyclo(yi, ctx)) % p


def test_zero_maps_to_zero():
    ctx = mod_context(12)
    # zeta12^4 + zeta12^8 + 1 = 0 exactly; its image must be 0 mod p
    z = RootOfUnity.make(1, 3).as_cyclonum(12)
    val = z + z * z + CycloNum.one().embed(12)
    assert val.is_zero()
    assert reduce_cyclo(val, ctx) == 0


def test_root_reduction_consistency():
    ctx = mod_context(12)
    r = RootOfUnity.make(1, 6)
    img = reduce_root(r, ctx)
    assert img == pow(ctx.root, 2, ctx.prime)
    assert reduce_cyclo(r.as_cyclonum(12), ctx) == img


def test_denominator_collision_raises():
    ctx = mod_context(1)
    from torcosets.arith import Q

    bad = CycloNum(1, (Q(1, int(ctx.prime)),))
    with pytest.raises(ValueError):
        reduce_cyclo(bad, ctx)


def test_conductor_must_divide():
    ctx = mod_context(4)
    with pytest.raises(ValueError):
        reduce_cyclo(RootOfUnity.make(1, 3).as_cyclonum(), ctx)
