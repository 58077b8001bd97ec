import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from primdiv.corpus import random_seed
from primdiv.cyclo import SeedKind, SeedPair, cyclotomic_int, divisors, substitute
from primdiv.errors import (
    CharZero,
    DeletedIndex,
    IndexOutOfRange,
    KindMismatch,
    PreconditionViolation,
    ZeroInput,
)
from primdiv.gcd import mp_gcd
from primdiv.mpoly import Monic, RingSpec, mp_eval
from primdiv.sequences import (
    Kind,
    SequenceSpec,
    TermIndex,
    cyclotomic_value,
    frobenius_check,
    has_primitive_divisor,
    lemma_coprime_check,
    lemma_elements,
    primitive_part,
    seq_term,
    strong_div_check,
    strong_div_witness,
    valuation,
)

from oracles import lehmer_numeric, lehmer_roots, lucas_numeric, cyclotomic_numeric, u_gcd

Q1 = RingSpec(0, 1)
X = Q1.gen(0)


def lucas(s, q, **kw):
    return SequenceSpec(Kind.L, SeedPair(SeedKind.LUCAS, s, q), **kw)


def lehmer(E, q, **kw):
    return SequenceSpec(Kind.U, SeedPair(SeedKind.LEHMER, E, q), **kw)


def fg(f, g, kind=Kind.F, **kw):
    return SequenceSpec(kind, SeedPair(SeedKind.FG, f, g), **kw)


def numeric_close(poly, model, points=(0.3, 1.7, 2.5, -1.2, 4.0)):
    for t in points:
        want = model(t)
        got = complex(float(mp_eval(poly, [Fraction(t).limit_denominator(100)])))
        assert abs(got - want) <= 1e-9 * max(1.0, abs(want)), (t, got, want)


# --- terms --------------------------------------------------------------------

def test_term_examples():
    assert seq_term(lucas(X, Q1.one()), 4) == X**3 - 2 * X
    assert seq_term(lehmer(X, Q1.one()), 5) == X**2 - 3 * X + 1
    assert seq_term(fg(X + 1, X), 2) == 2 * X + 1


def test_lucas_terms_match_closed_form():
    spec = lucas(X, Q1.one())
    for n in range(1, 16):
        numeric_close(seq_term(spec, n), lambda t, n=n: lucas_numeric(t, 1, n))
    spec = lucas(X, Q1.const(-2))
    for n in range(1, 12):
        numeric_close(seq_term(spec, n), lambda t, n=n: lucas_numeric(t, -2, n))


def test_lehmer_terms_match_closed_form():
    spec = lehmer(X, Q1.one())
    for n in range(1, 16):
        numeric_close(seq_term(spec, n), lambda t, n=n: lehmer_numeric(t, 1, n), points=(0.3, 2.5, 5.0, 7.5))


def test_index_bounds():
    spec = lucas(X, Q1.one(), max_index=10)
    with pytest.raises(IndexOutOfRange):
        seq_term(spec, 0)
    with pytest.raises(IndexOutOfRange):
        seq_term(spec, 11)
    with pytest.raises(KindMismatch):
        SequenceSpec(Kind.U, SeedPair(SeedKind.LUCAS, X, Q1.one()))


def test_term_index():
    assert TermIndex.of(10, 5).deleted
    assert not TermIndex.of(10, 3).deleted
    assert not TermIndex.of(10, 0).deleted


def test_product_formula_for_f():
    R = RingSpec(0, 2)
    x, y = R.gens()
    spec = fg(x**2 + y, x - 2 * y)
    for n in range(1, 25):
        prod = R.one()
        for d in divisors(n):
            prod = prod * substitute(cyclotomic_int(d), spec.seed.first, spec.seed.second)
        assert prod == seq_term(spec, n)


# --- strong divisibility ------------------------------------------------------

def test_strong_div_examples():
    spec = fg(X + 1, X)
    assert strong_div_check(spec, 4, 6)
    assert strong_div_witness(spec, 4, 6) == X + Fraction(1, 2)
    # independent Euclid on expanded coefficient lists
    F4 = [1, 4, 6, 4]
    F6 = [1, 6, 15, 20, 15, 6]
    assert u_gcd(F4, F6) == [Fraction(1, 2), 1]
    L = lucas(X, Q1.one())
    assert strong_div_check(L, 2, 3)
    assert u_gcd([0, 1], [-1, 0, 1]) == [1]
    for k in range(1, 12):
        assert strong_div_check(L, 1, k)
    with pytest.raises(IndexOutOfRange):
        strong_div_check(L, 0, 3)


@pytest.mark.parametrize("kind,seed_kind", [(Kind.F, SeedKind.FG), (Kind.L, SeedKind.LUCAS), (Kind.U, SeedKind.LEHMER)])
def test_strong_divisibility_random(kind, seed_kind):
    rng = random.Random(f"strong-{kind.value}")
    for _ in range(20):
        R = RingSpec(rng.choice([0, 3, 5, 7]), rng.randint(1, 3))
        spec = SequenceSpec(kind, random_seed(seed_kind, R, rng), max_index=20)
        for n in range(2, 21):
            for m in range(1, n):
                assert strong_div_check(spec, m, n), (spec.seed, m, n)


def test_s_is_not_a_strong_divisibility_sequence():
    # S_1 = f + g does not divide S_2 = f^2 + g^2 outside characteristic 2,
    # so gcd(S_1, S_2) = 1 while S_gcd(1,2) = S_1 is not a unit.
    spec = fg(X + 1, X, Kind.S)
    assert not strong_div_check(spec, 1, 2)
    assert mp_gcd(seq_term(spec, 1), seq_term(spec, 2)).is_unit()
    # what does hold: S_m | S_n when n/m is odd
    for m in range(1, 8):
        for k in (1, 3, 5):
            assert seq_term(spec, m * k).try_div(seq_term(spec, m)) is not None
    F2 = RingSpec(2, 1)
    x = F2.gen(0)
    # in characteristic 2, S and F coincide
    assert strong_div_check(fg(x + 1, x, Kind.S), 1, 2)


# --- primitive parts ------------------------------------------------------------

def test_primitive_part_examples():
    rep = primitive_part(fg(X + 1, X), 3)
    assert rep.primitive_part == (3 * X**2 + 3 * X + 1).canonical()
    assert rep.primitive_part == X**2 + X + Fraction(1, 3)
    assert rep.degree == 2 and rep.coprime_witness == [(1, True)]
    assert primitive_part(lucas(X, Q1.one()), 4).primitive_part == X**2 - 2
    assert primitive_part(lehmer(X, Q1.one()), 9).primitive_part == X**3 - 6 * X**2 + 9 * X - 1
    rep = primitive_part(lehmer(X, Q1.one()), 3)
    assert rep.primitive_part == X - 1 and has_primitive_divisor(lehmer(X, Q1.one()), 3)


def test_primitive_part_preconditions():
    F5 = RingSpec(5, 1)
    x = F5.gen(0)
    with pytest.raises(DeletedIndex):
        has_primitive_divisor(fg(x + 1, x), 5)
    with pytest.raises(PreconditionViolation):
        primitive_part(fg(X + 1, X), 2)


def test_f_has_primitive_divisor_over_rationals():
    spec = fg(X + 1, X)
    for n in range(3, 25):
        assert has_primitive_divisor(spec, n)


def test_golden_values_against_numeric_models():
    numeric_close(seq_term(lucas(X, Q1.one()), 5), lambda t: lucas_numeric(t, 1, 5))
    numeric_close(X**4 - 3 * X**2 + 1, lambda t: lucas_numeric(t, 1, 5))
    numeric_close(X**2 - 3 * X + 1, lambda t: lehmer_numeric(t, 1, 5), points=(0.5, 3.0, 6.0))

    def phi9(t):
        lam, eta = lehmer_roots(t, 1)
        return cyclotomic_numeric(9, lam, eta)

    numeric_close(X**3 - 6 * X**2 + 9 * X - 1, phi9, points=(0.5, 3.0, 6.0))
    assert cyclotomic_value(lehmer(X, Q1.one()), 9) == X**3 - 6 * X**2 + 9 * X - 1


@pytest.mark.parametrize("kind,seed_kind", [(Kind.F, SeedKind.FG), (Kind.S, SeedKind.FG),
                                            (Kind.L, SeedKind.LUCAS), (Kind.U, SeedKind.LEHMER)])
def test_primitive_part_equals_cyclotomic_value(kind, seed_kind):
    rng = random.Random(f"pp-{kind.value}")
    for _ in range(6):
        R = RingSpec(rng.choice([0, 3, 5, 7]), rng.randint(1, 2))
        spec = SequenceSpec(kind, random_seed(seed_kind, R, rng), max_index=24)
        p = R.characteristic
        for n in range(3, 17):
            if p and n % p == 0:
                continue
            rep = primitive_part(spec, n)
            assert rep.primitive_part == cyclotomic_value(spec, n).canonical()
            assert rep.term.try_div(rep.primitive_part) is not None


# --- hypotheses of the Lucas and Lehmer statements ------------------------------

def test_lehmer_seed_with_unit_third_term():
    # E = x, q = x - 1 is a valid seed, yet U_3 = E - q = 1 has no prime divisor.
    spec = lehmer(X, X - 1)
    assert seq_term(spec, 3) == Q1.one()
    assert not has_primitive_divisor(spec, 3)
    assert primitive_part(spec, 3).primitive_part == cyclotomic_value(spec, 3).canonical()
    for n in range(4, 20):
        assert has_primitive_divisor(spec, n)


def test_lucas_seed_with_unit_third_term():
    spec = lucas(X, X**2 - 1)
    assert seq_term(spec, 3) == Q1.one()
    assert not has_primitive_divisor(spec, 3)
    for n in range(4, 20):
        assert has_primitive_divisor(spec, n)


# --- valuation and Frobenius ----------------------------------------------------

def test_valuation_examples():
    assert valuation((X - 1) ** 2 * (X + 2), Monic(X - 1)) == 2
    U9 = seq_term(lehmer(X, Q1.one()), 9)
    assert mp_eval(X**3 - 6 * X**2 + 9 * X - 1, [1]) == 3
    assert valuation(U9, X - 1) == 1
    assert valuation(X**2 + 1, X - 1) == 0
    with pytest.raises(ZeroInput):
        valuation(Q1.zero(), X - 1)
    with pytest.raises(PreconditionViolation):
        valuation(X, 2 * X)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 5), st.integers(0, 5), st.integers(-4, 4))
def test_valuation_of_constructed_products(a, b, c):
    pi = X - 1
    other = X + c if c != -1 else X + 7
    assert valuation(pi**a * other**b, pi) == a


def test_frobenius_examples():
    F5 = RingSpec(5, 1)
    x = F5.gen(0)
    spec = fg(x + 1, x)
    assert seq_term(spec, 5) == F5.one()
    assert frobenius_check(spec, 1)
    F3 = RingSpec(3, 1)
    x = F3.gen(0)
    assert frobenius_check(fg(x + 1, x), 2)
    with pytest.raises(CharZero):
        frobenius_check(fg(X + 1, X), 1)


# --- coprimality lemmas -----------------------------------------------------------

def test_lemma_examples():
    E1 = SeedPair(SeedKind.LEHMER, X, Q1.one())
    assert lemma_coprime_check("L_ABN", E1, 0, 3)
    assert lemma_elements("L_ABN", E1, 0, 3) == (X - 1, X)
    L1 = SeedPair(SeedKind.LUCAS, X, Q1.one())
    assert lemma_coprime_check("L_PMPN2", L1, 2, 3)
    assert lemma_elements("L_PMPN2", L1, 2, 3) == (X, X**2 - 1)
    with pytest.raises(PreconditionViolation, match="odd n"):
        lemma_coprime_check("L_PMPN_ODD", E1, 3, 4)
    with pytest.raises(PreconditionViolation, match="LEHMER"):
        lemma_coprime_check("L_PMN", L1, 3, 3)


def test_lemma_elements_match_sequence_terms():
    spec = lehmer(X, Q1.const(3))
    seed = spec.seed
    for m in (1, 3, 5):
        for n in (3, 5):
            a, _ = lemma_elements("L_PMN", seed, m, n)
            assert a == seq_term(spec, m * n).try_div(seq_term(spec, n))
    for n in (2, 4, 6):
        _, b = lemma_elements("L_PMPN_MIX", seed, 1, n)
        assert b == seq_term(spec, n)
