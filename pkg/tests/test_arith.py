import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from primdiv.arith import GF, QQ, FpElem, field_for, field_inv, is_prime, rat_canonical
from primdiv.errors import DivisionByZero, InvalidRing


def test_field_inv_examples():
    assert field_inv(1) == 1
    assert field_inv(FpElem(2, 5)) == FpElem(3, 5)
    assert field_inv(Fraction(3, 4)) == Fraction(4, 3)


@pytest.mark.parametrize("zero", [0, Fraction(0), FpElem(0, 7)])
def test_field_inv_zero(zero):
    with pytest.raises(DivisionByZero):
        field_inv(zero)


def test_rat_canonical_examples():
    assert rat_canonical(2, 4) == Fraction(1, 2)
    r = rat_canonical(3, -6)
    assert (r.numerator, r.denominator) == (-1, 2)
    z = rat_canonical(0, 7)
    assert (z.numerator, z.denominator) == (0, 1)
    with pytest.raises(DivisionByZero):
        rat_canonical(1, 0)


@given(st.integers(-10**30, 10**30), st.integers(1, 10**30), st.integers(-10**6, 10**6).filter(bool))
def test_rat_canonical_scaling(a, b, k):
    assert rat_canonical(a * k, b * k) == rat_canonical(a, b)
    r = rat_canonical(a * k, b * k)
    assert r.denominator > 0


def test_is_prime_against_sieve():
    limit = 5000
    sieve = [True] * limit
    sieve[0] = sieve[1] = False
    for i in range(2, limit):
        if sieve[i]:
            for j in range(i * i, limit, i):
                sieve[j] = False
    assert [n for n in range(limit) if is_prime(n)] == [n for n in range(limit) if sieve[n]]


def test_is_prime_large():
    assert is_prime((1 << 61) - 1)
    assert not is_prime((1 << 61) + 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7
    assert is_prime(4611686018427387847)


def test_gf_validation():
    with pytest.raises(InvalidRing):
        GF(4)
    with pytest.raises(InvalidRing):
        GF(1 << 62 | 1)
    assert field_for(0) is QQ
    assert field_for(7) is GF(7)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 101])
def test_fermat(p):
    rng = random.Random(p)
    for _ in range(50):
        a = FpElem(rng.randrange(p), p)
        assert a**p == a


def test_field_axioms_random():
    rng = random.Random(7)
    for _ in range(1000):
        p = rng.choice([0, 2, 3, 5, 7, 101])
        if p:
            a, b, c = (FpElem(rng.randrange(p), p) for _ in range(3))
        else:
            a, b, c = (Fraction(rng.randint(-50, 50), rng.randint(1, 50)) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if a:
            assert a * field_inv(a) == 1


def test_fp_mixed_moduli():
    with pytest.raises(InvalidRing):
        FpElem(1, 5) + FpElem(1, 7)


@settings(max_examples=200)
@given(st.integers(0, 10**6), st.sampled_from([2, 3, 5, 7, 101]))
def test_fp_residue_normalized(x, p):
    e = FpElem(x, p)
    assert 0 <= e.residue < p
    assert e == x
