"""Factorization of univariate polynomials over F_p.

Squarefree decomposition (with p-th roots for the parts the derivative
cannot see), distinct-degree factorization, then Cantor-Zassenhaus
equal-degree splitting.  All randomness comes from an explicit generator.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import upoly_fp as up
from .arith import FpElem
from .errors import CharZero, ConstantInput, SplitBudgetExhausted, WrongArity, ZeroInput
from .mpoly import MPoly, RingSpec

SPLIT_BUDGET = 64
DEFAULT_SEED = 20240229


@dataclass(frozen=True)
class FactorizationFp:
    unit: FpElem
    factors: list[tuple[MPoly, int]]

    def expand(self) -> MPoly:
        ring = RingSpec(self.unit.modulus, 1)
        out = ring.const(self.unit)
        for f, k in self.factors:
            out = out * f**k
        return out


def _dense(h: MPoly) -> tuple[list[int], int]:
    if h.ring.num_vars != 1:
        raise WrongArity(f"expected a univariate polynomial, got {h.ring.num_vars} variables")
    p = h.ring.characteristic
    if p == 0:
        raise CharZero("factorization is only over F_p")
    if h.is_zero():
        raise ZeroInput("cannot factor the zero polynomial")
    return [int(c) for c in h.dense_univariate()], p


def _lift(ring, f: list[int]) -> MPoly:
    return MPoly.from_dense_univariate(ring, f)


def _sqf(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Squarefree parts of a monic ``f`` with their multiplicities."""
    out = []
    c = up.gcd(f, up.derivative(f, p), p)
    w = up.quo(f, c, p)
    i = 1
    while not up.is_one(w):
        y = up.gcd(w, c, p)
        z = up.quo(w, y, p)
        if not up.is_one(z):
            out.append((z, i))
        i += 1
        w = y
        c = up.quo(c, y, p)
    if not up.is_one(c):
        # what is left has all multiplicities divisible by p
        out.extend((g, k * p) for g, k in _sqf(up.pth_root(c, p), p))
    return out


def squarefree_decomp(h: MPoly) -> list[tuple[MPoly, int]]:
    """Monic squarefree parts ``(g, k)`` with ``h = lc * prod g**k``, sorted by ``k``."""
    f, p = _dense(h)
    if len(f) == 1:
        return []
    parts = _sqf(up.monic(f, p), p)
    return [(_lift(h.ring, g), k) for g, k in sorted(parts, key=lambda t: t[1])]


def _ddf(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Split a squarefree monic ``f`` into products of same-degree irreducibles."""
    out = []
    h = up.X
    d = 0
    while 2 * (d + 1) <= up.degree(f):
        d += 1
        h = up.powmod(h, p, f, p)
        g = up.gcd(up.sub(h, up.X, p), f, p)
        if not up.is_one(g):
            out.append((g, d))
            f = up.quo(f, g, p)
            h = up.rem(h, f, p)
    if up.degree(f) > 0:
        out.append((f, up.degree(f)))
    return out


def _split_candidate(f: list[int], d: int, p: int, rng: random.Random) -> list[int]:
    n = up.degree(f)
    a = up.strip([rng.randrange(p) for _ in range(n)])
    if up.degree(a) < 1:
        return [1]
    if p == 2:
        # absolute trace a + a**2 + ... + a**(2**(d-1)) lands in F_2 on each factor
        t, s = a, a
        for _ in range(d - 1):
            s = up.mulmod(s, s, f, p)
            t = up.add(t, s, p)
        return up.gcd(t, f, p)
    g = up.gcd(a, f, p)
    if not up.is_one(g):
        return g
    b = up.powmod(a, (p**d - 1) // 2, f, p)
    return up.gcd(up.sub(b, [1], p), f, p)


def _edf(f: list[int], d: int, p: int, rng: random.Random) -> list[list[int]]:
    """Irreducible factors of a monic ``f`` whose factors all have degree ``d``."""
    if up.degree(f) == d:
        return [f]
    for _ in range(SPLIT_BUDGET):
        g = _split_candidate(f, d, p, rng)
        if 0 < up.degree(g) < up.degree(f):
            return _edf(g, d, p, rng) + _edf(up.quo(f, g, p), d, p, rng)
    raise SplitBudgetExhausted(f"no split of a degree-{up.degree(f)} product after {SPLIT_BUDGET} tries")


def factor_fp(h: MPoly, rng: random.Random | int | None = None) -> FactorizationFp:
    """Complete factorization into monic irreducibles with multiplicities."""
    f, p = _dense(h)
    if not isinstance(rng, random.Random):
        rng = random.Random(DEFAULT_SEED if rng is None else rng)
    unit = FpElem(f[-1], p)
    if len(f) == 1:
        return FactorizationFp(unit, [])
    found = []
    for part, k in _sqf(up.monic(f, p), p):
        for g, d in _ddf(part, p):
            found.extend((irr, k) for irr in _edf(g, d, p, rng))
    found.sort(key=lambda t: (len(t[0]), t[0][::-1]))
    return FactorizationFp(unit, [(_lift(h.ring, g), k) for g, k in found])


def is_irreducible_fp(h: MPoly) -> bool:
    """Rabin's test."""
    f, p = _dense(h)
    n = len(f) - 1
    if n < 1:
        raise ConstantInput("irreducibility of a constant")
    f = up.monic(f, p)
    if n == 1:
        return True
    xp = [up.X]
    for _ in range(n):
        xp.append(up.powmod(xp[-1], p, f, p))
    if up.sub(xp[n], up.X, p):
        return False
    for ell in _prime_divisors(n):
        if not up.is_one(up.gcd(up.sub(xp[n // ell], up.X, p), f, p)):
            return False
    return True


def _prime_divisors(n: int) -> list[int]:
    return [d for d in range(2, n + 1) if n % d == 0 and all(d % e for e in range(2, d))]
