import random

import pytest

from primdiv.corpus import random_seed
from primdiv.cyclo import (
    HomogBivar,
    SeedKind,
    SeedPair,
    cyclotomic_int,
    divisors,
    eval_symmetric,
    homog_family,
    mobius,
    power_sums,
)
from primdiv.errors import InvalidSeed, KindMismatch, NotSymmetric, OutOfRange, ParityViolation
from primdiv.mpoly import RingSpec
from primdiv.sequences import Kind, SequenceSpec, mobius_quotient

from oracles import cyclotomic, euler_phi, homogenize, u_divmod, u_mul


def test_cyclotomic_examples():
    assert cyclotomic_int(1).coeffs == (1, -1)
    # oracle: x^6 - 1 divided by Phi_1 Phi_2 Phi_3, homogenized
    assert cyclotomic_int(6).coeffs == tuple(homogenize(cyclotomic(6))) == (1, -1, 1)
    assert cyclotomic_int(12).coeffs == tuple(homogenize(cyclotomic(12))) == (1, 0, -1, 0, 1)
    with pytest.raises(OutOfRange):
        cyclotomic_int(0)
    with pytest.raises(OutOfRange):
        cyclotomic_int(10**4 + 1)


def test_cyclotomic_matches_oracle_and_degree():
    for n in range(1, 121):
        phi = cyclotomic_int(n)
        assert phi.coeffs == tuple(homogenize(cyclotomic(n)))
        assert phi.degree == euler_phi(n)


def test_product_formulas():
    for n in range(1, 201):
        prod = HomogBivar([1])
        for d in divisors(n):
            prod = prod * cyclotomic_int(d)
        assert prod.coeffs == (1,) + (0,) * (n - 1) + (-1,)
        prod = HomogBivar([1])
        for d in divisors(n):
            if d >= 2:
                prod = prod * cyclotomic_int(d)
        assert prod == homog_family("P", n)


def test_family_examples():
    assert homog_family("P", 3).coeffs == (1, 1, 1)
    assert homog_family("T", 2).coeffs == (1,)
    assert homog_family("W", 3).coeffs == (1, -1, 1)
    assert homog_family("V", 2, 3).coeffs == (1, 0, 0, 1)
    with pytest.raises(ParityViolation):
        homog_family("T", 3)
    with pytest.raises(ParityViolation):
        homog_family("W", 4)
    with pytest.raises(OutOfRange):
        homog_family("P", 0)


def test_t_times_x_plus_y_is_p():
    for m in range(2, 30, 2):
        assert homog_family("T", m) * HomogBivar([1, 1]) == homog_family("P", m)


def test_power_sum_examples():
    R = RingSpec(0, 1)
    x = R.gen(0)
    luc = SeedPair(SeedKind.LUCAS, x, R.one())
    t = power_sums(luc, 5)
    assert t[0] == R.const(2)
    # (a+b)^3 - 3ab(a+b) with a+b = x, ab = 1
    assert t[3] == x**3 - 3 * x
    leh = SeedPair(SeedKind.LEHMER, x, R.one())
    t = power_sums(leh, 4)
    t2 = x - 2
    assert t[2] == t2 and t[4] == t2 * t2 - 2
    assert t[4] == x**2 - 4 * x + 2
    with pytest.raises(ParityViolation):
        t[3]
    with pytest.raises(KindMismatch):
        power_sums(SeedPair(SeedKind.FG, x + 1, x), 3)


def test_eval_symmetric_examples():
    R = RingSpec(0, 1)
    x = R.gen(0)
    luc = SeedPair(SeedKind.LUCAS, x, R.one())
    assert eval_symmetric(cyclotomic_int(3), luc) == x**2 - 1
    assert eval_symmetric(cyclotomic_int(5), luc) == x**4 - 3 * x**2 + 1
    leh = SeedPair(SeedKind.LEHMER, x, R.one())
    assert eval_symmetric(cyclotomic_int(9), leh) == x**3 - 6 * x**2 + 9 * x - 1
    with pytest.raises(NotSymmetric):
        eval_symmetric(cyclotomic_int(1), luc)
    with pytest.raises(ParityViolation):
        eval_symmetric(homog_family("P", 2), leh)


def test_seed_validation():
    R = RingSpec(0, 2)
    x, y = R.gens()
    with pytest.raises(InvalidSeed):
        SeedPair(SeedKind.FG, R.const(2), R.const(3))
    with pytest.raises(InvalidSeed):
        SeedPair(SeedKind.FG, x * y, x)
    with pytest.raises(InvalidSeed):
        SeedPair(SeedKind.LUCAS, R.zero(), x)


def test_mobius_against_definition():
    for n in range(1, 200):
        s = sum(mobius(d) for d in divisors(n))
        assert s == (1 if n == 1 else 0)


def test_univariate_oracle_consistency():
    # x^n - 1 = prod Phi_d, checked with plain list arithmetic
    for n in (15, 30, 36):
        prod = [1]
        for d in divisors(n):
            prod = u_mul(prod, list(cyclotomic(d)))
        q, r = u_divmod(prod, [-1] + [0] * (n - 1) + [1])
        assert q == [1] and r == []


@pytest.mark.parametrize("kind,seed_kind", [(Kind.L, SeedKind.LUCAS), (Kind.U, SeedKind.LEHMER)])
def test_power_sum_path_matches_mobius_quotient(kind, seed_kind):
    rng = random.Random(f"cyclo-{kind.value}")
    for i in range(50):
        R = RingSpec(rng.choice([0, 0, 3, 5, 7]), rng.randint(1, 2))
        seed = random_seed(seed_kind, R, rng)
        spec = SequenceSpec(kind, seed, max_index=20)
        for n in range(3, 21):
            assert eval_symmetric(cyclotomic_int(n), seed).canonical() == \
                mobius_quotient(spec, n).canonical(), (i, n, seed)
