"""The sequences F, S, L, U over ``K[x1..xr]`` and the checks built on them.

* ``F_n = f**n - g**n`` and ``S_n = f**n + g**n``
* ``L_n = (a**n - b**n)/(a - b)`` with ``a + b = s``, ``a*b = q``
* ``U_n`` the Lehmer sequence with ``(l + e)**2 = E``, ``l*e = q``

Terms always come from recurrences or plain powers.  Primitive parts come
from the divisor structure of the index (Mobius inversion), so comparing a
primitive part against a cyclotomic value computed by
:func:`primdiv.cyclo.eval_symmetric` compares two independent routes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd

from .cyclo import SeedKind, SeedPair, cyclotomic_int, divisors, eval_symmetric, homog_family
from .errors import (
    CharZero,
    DeletedIndex,
    IndexOutOfRange,
    KindMismatch,
    PreconditionViolation,
    ZeroInput,
)
from .gcd import mp_gcd
from .mpoly import Monic, MPoly

DEFAULT_MAX_INDEX = 64


class Kind(str, enum.Enum):
    F = "F"
    S = "S"
    L = "L"
    U = "U"


SEED_KIND = {Kind.F: SeedKind.FG, Kind.S: SeedKind.FG, Kind.L: SeedKind.LUCAS, Kind.U: SeedKind.LEHMER}


@dataclass(frozen=True)
class SequenceSpec:
    """A sequence kind together with its seed pair.

    Terms are memoized per instance; the cache only ever grows and never
    changes an entry once written.
    """

    kind: Kind
    seed: SeedPair
    max_index: int = DEFAULT_MAX_INDEX
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if SEED_KIND[self.kind] is not self.seed.kind:
            raise KindMismatch(f"{self.kind.value} sequences need a {SEED_KIND[self.kind].value} seed")

    @property
    def ring(self):
        return self.seed.ring

    def term(self, n: int) -> MPoly:
        return seq_term(self, n)

    def terms(self, n_max: int) -> list[MPoly]:
        return [seq_term(self, n) for n in range(1, n_max + 1)]


@dataclass(frozen=True)
class TermIndex:
    n: int
    deleted: bool

    @classmethod
    def of(cls, n: int, characteristic: int) -> "TermIndex":
        return cls(n, characteristic > 0 and n % characteristic == 0)


@dataclass(frozen=True)
class PrimitivePartReport:
    n: TermIndex
    term: MPoly
    primitive_part: MPoly
    degree: int
    coprime_witness: list[tuple[int, bool]]


def _fill_powers(spec: SequenceSpec, n: int):
    c = spec._cache
    fp = c.setdefault("fpow", [spec.ring.one()])
    gp = c.setdefault("gpow", [spec.ring.one()])
    f, g = spec.seed.first, spec.seed.second
    while len(fp) <= n:
        fp.append(fp[-1] * f)
        gp.append(gp[-1] * g)
    return fp, gp


def _fill_recurrence(spec: SequenceSpec, n: int) -> list[MPoly]:
    terms = spec._cache.setdefault("terms", [None])
    if len(terms) > n:
        return terms
    ring = spec.ring
    first, q = spec.seed.first, spec.seed.second
    if spec.kind is Kind.L:
        # L_1 = 1, L_2 = s, L_{k+2} = s L_{k+1} - q L_k
        if len(terms) == 1:
            terms.extend([ring.one(), first])
        while len(terms) <= n:
            terms.append(first * terms[-1] - q * terms[-2])
    else:
        # U_1 = U_2 = 1, U_3 = E - q, U_4 = E - 2q,
        # U_{k+4} = (E - 2q) U_{k+2} - q**2 U_k
        consts = spec._cache.setdefault("lehmer", (first - q.scale(2), q * q))
        t2, q2 = consts
        if len(terms) == 1:
            terms.extend([ring.one(), ring.one(), first - q, t2])
        while len(terms) <= n:
            terms.append(t2 * terms[-2] - q2 * terms[-4])
    return terms


def seq_term(spec: SequenceSpec, n: int) -> MPoly:
    """The ``n``-th term, exact."""
    if not isinstance(n, int) or n < 1 or n > spec.max_index:
        raise IndexOutOfRange(f"index must be in 1..{spec.max_index}, got {n!r}")
    if spec.kind in (Kind.F, Kind.S):
        fp, gp = _fill_powers(spec, n)
        return fp[n] - gp[n] if spec.kind is Kind.F else fp[n] + gp[n]
    return _fill_recurrence(spec, n)[n]


def _cofactor(spec: SequenceSpec, n: int, d: int) -> MPoly | None:
    """``term_n / term_d`` if exact, else ``None``; memoized per spec."""
    cache = spec._cache.setdefault("cofactors", {})
    if (n, d) not in cache:
        cache[(n, d)] = seq_term(spec, n).try_div(seq_term(spec, d))
    return cache[(n, d)]


def strong_div_witness(spec: SequenceSpec, m: int, n: int) -> MPoly | None:
    """``gcd(term_m, term_n)`` when ``term_gcd(m,n)`` divides both, else ``None``.

    With ``d = term_gcd(m,n)`` dividing both, ``gcd(d*u, d*v) = d * gcd(u, v)``.
    """
    k = gcd(m, n)
    u = _cofactor(spec, m, k)
    if u is None:
        return None
    v = _cofactor(spec, n, k)
    if v is None:
        return None
    return (seq_term(spec, k) * mp_gcd(u, v)).canonical()


def strong_div_check(spec: SequenceSpec, m: int, n: int) -> bool:
    """Whether ``gcd(term_m, term_n)`` equals ``term_gcd(m,n)`` up to a unit."""
    if m < 1 or n < 1:
        raise IndexOutOfRange("indices must be positive")
    g = strong_div_witness(spec, m, n)
    if g is None:
        return False
    return g == seq_term(spec, gcd(m, n)).canonical()


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def mobius_quotient(spec: SequenceSpec, n: int, primes: list[int] | None = None) -> MPoly:
    """``prod_{d | n} term_d ** mu(n/d)`` using only exact divisions.

    One prime of ``n`` at a time, each value is divided by its neighbour
    with that prime removed from the index.  For any sequence of the form
    ``term_m = prod_{d | m} Q_d`` each of these divisions is exact.
    ``primes`` restricts the product to ``n/d`` built from those primes.
    """
    if primes is None:
        primes = _prime_factors(n)
    level = {n: seq_term(spec, n)}
    for ell in primes:
        level.update({m // ell: seq_term(spec, m // ell) for m in list(level)})
    for ell in primes:
        nxt = {}
        for m, v in level.items():
            if (n // m) % ell:
                nxt[m] = v.exact_div(level[m // ell])
        level = nxt
    return level[n]


def _check_index(spec: SequenceSpec, n: int):
    if not isinstance(n, int) or n < 3:
        raise PreconditionViolation(f"primitive parts are defined from the third term on, got n={n!r}")
    p = spec.ring.characteristic
    if p and n % p == 0:
        raise DeletedIndex(f"index {n} is divisible by the characteristic {p}")
    if n > spec.max_index:
        raise IndexOutOfRange(f"index must be at most {spec.max_index}")


def primitive_part(spec: SequenceSpec, n: int) -> PrimitivePartReport:
    """Product of the primitive prime divisors of ``term_n``, with certificate.

    The certificate is a list ``(d, coprime)`` over earlier indices ``d``:
    the proper divisors of ``n`` for F, L and U (their strong
    divisibility makes that enough), every ``d < n`` for S.

    ``S_n = F_2n / F_n`` is the product of ``Phi_d(f, g)`` over the ``d | 2n``
    with the same power of 2 as ``2n``.  Inverting over the odd primes of
    ``n`` alone therefore leaves ``Phi_2n(f, g)``, using S terms only.
    """
    _check_index(spec, n)
    term = seq_term(spec, n)
    if spec.kind is Kind.S:
        pp = mobius_quotient(spec, n, [ell for ell in _prime_factors(n) if ell != 2])
        earlier = range(1, n)
    else:
        pp = mobius_quotient(spec, n)
        earlier = [d for d in divisors(n) if d < n]
    pp = pp.canonical()
    witness = [(d, mp_gcd(pp, seq_term(spec, d)).is_unit()) for d in earlier]
    return PrimitivePartReport(
        n=TermIndex.of(n, spec.ring.characteristic),
        term=term,
        primitive_part=pp,
        degree=pp.degree(),
        coprime_witness=witness,
    )


def has_primitive_divisor(spec: SequenceSpec, n: int) -> bool:
    report = primitive_part(spec, n)
    return report.degree >= 1 and all(ok for _, ok in report.coprime_witness)


def cyclotomic_value(spec: SequenceSpec, n: int) -> MPoly:
    """``Phi_n`` at the seed (``Phi_2n`` for S), through power sums or substitution."""
    index = 2 * n if spec.kind is Kind.S else n
    return eval_symmetric(cyclotomic_int(index), spec.seed)


def valuation(h: MPoly, pi: MPoly | Monic) -> int:
    """Largest ``k`` with ``pi**k`` dividing ``h``.

    ``pi`` must be monic and nonconstant; irreducibility is not checked.
    """
    if isinstance(pi, MPoly):
        pi = Monic(pi)
    if h.is_zero():
        raise ZeroInput("valuation of the zero polynomial")
    k = 0
    cur = h
    while True:
        nxt = cur.try_div(pi.poly)
        if nxt is None:
            return k
        k += 1
        cur = nxt


def frobenius_check(spec: SequenceSpec, n: int) -> bool:
    """``F_{pn} == F_n ** p`` in characteristic ``p``."""
    p = spec.ring.characteristic
    if p == 0:
        raise CharZero("the Frobenius identity needs a positive characteristic")
    if spec.kind is not Kind.F:
        raise KindMismatch("frobenius_check applies to F sequences")
    return seq_term(spec, p * n) == seq_term(spec, n) ** p


LEMMAS = ("L_PMPN2", "L_PMPN_ODD", "L_PMPN_MIX", "L_PMN", "L_ABN")


def lemma_elements(lemma: str, seed: SeedPair, m: int, n: int) -> tuple[MPoly, MPoly]:
    """The two ring elements that the named coprimality lemma is about."""
    lemma = lemma.upper()
    want = SeedKind.LUCAS if lemma == "L_PMPN2" else SeedKind.LEHMER
    if seed.kind is not want:
        raise PreconditionViolation(f"{lemma} needs a {want.value} seed, got {seed.kind.value}")
    odd = lambda k: isinstance(k, int) and k >= 1 and k % 2 == 1  # noqa: E731
    if lemma == "L_PMPN2":
        if m < 1 or n < 1 or gcd(m, n) != 1:
            raise PreconditionViolation(f"{lemma} needs coprime positive m, n, got ({m}, {n})")
        return eval_symmetric(homog_family("P", m), seed), eval_symmetric(homog_family("P", n), seed)
    if lemma == "L_PMPN_ODD":
        if not odd(m):
            raise PreconditionViolation(f"{lemma} needs odd m, got {m}")
        if not odd(n):
            raise PreconditionViolation(f"{lemma} needs odd n, got {n}")
        if gcd(m, n) != 1:
            raise PreconditionViolation(f"{lemma} needs coprime m, n, got ({m}, {n})")
        return eval_symmetric(homog_family("P", m), seed), eval_symmetric(homog_family("P", n), seed)
    if lemma == "L_PMPN_MIX":
        if not odd(m):
            raise PreconditionViolation(f"{lemma} needs odd m, got {m}")
        if n < 2 or n % 2:
            raise PreconditionViolation(f"{lemma} needs even n, got {n}")
        if gcd(m, n) != 1:
            raise PreconditionViolation(f"{lemma} needs coprime m, n, got ({m}, {n})")
        return eval_symmetric(homog_family("P", m), seed), eval_symmetric(homog_family("T", n), seed)
    if lemma == "L_PMN":
        if not odd(m):
            raise PreconditionViolation(f"{lemma} needs odd m, got {m}")
        if not odd(n):
            raise PreconditionViolation(f"{lemma} needs odd n, got {n}")
        return eval_symmetric(homog_family("V", m, n), seed), eval_symmetric(homog_family("W", n), seed)
    if lemma == "L_ABN":
        if not odd(n):
            raise PreconditionViolation(f"{lemma} needs odd n, got {n}")
        return eval_symmetric(homog_family("P", n), seed), seed.first
    raise ValueError(f"unknown lemma {lemma!r}")


def lemma_coprime_check(lemma: str, seed: SeedPair, m: int, n: int) -> bool:
    """True iff the lemma's two ring elements have a unit gcd."""
    a, b = lemma_elements(lemma, seed, m, n)
    return mp_gcd(a, b).is_unit()
