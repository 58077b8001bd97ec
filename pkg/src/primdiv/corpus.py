"""Random seed pairs for the verification suites.

Seed entries are sparse polynomials of total degree at most 3 with at most
four terms; pairs are drawn until they pass :class:`SeedPair` validation.
"""

from __future__ import annotations

import random
from itertools import combinations_with_replacement

from .cyclo import SeedKind, SeedPair
from .errors import InvalidSeed
from .mpoly import MPoly, RingSpec

MAX_DEGREE = 3
MAX_TERMS = 4
COEFF_BOUND = 3


def _monomials(r: int, max_degree: int) -> list[tuple[int, ...]]:
    out = []
    for d in range(max_degree + 1):
        for combo in combinations_with_replacement(range(r), d):
            e = [0] * r
            for v in combo:
                e[v] += 1
            out.append(tuple(e))
    return out


def random_poly(ring: RingSpec, rng: random.Random, max_degree: int = MAX_DEGREE,
                max_terms: int = MAX_TERMS) -> MPoly:
    monos = _monomials(ring.num_vars, max_degree)
    k = rng.randint(1, min(max_terms, len(monos)))
    chosen = rng.sample(monos, k)
    p = ring.characteristic
    terms = []
    for e in chosen:
        if p:
            c = rng.randrange(1, p)
        else:
            c = rng.choice([c for c in range(-COEFF_BOUND, COEFF_BOUND + 1) if c])
        terms.append((e, c))
    return MPoly.from_terms(ring, terms)


def random_seed(kind: SeedKind, ring: RingSpec, rng: random.Random, max_tries: int = 1000) -> SeedPair:
    for _ in range(max_tries):
        a, b = random_poly(ring, rng), random_poly(ring, rng)
        try:
            return SeedPair(kind, a, b)
        except InvalidSeed:
            continue
    raise RuntimeError("could not draw a valid seed pair")


def seed_corpus(kind: SeedKind, ring: RingSpec, count: int, rand_seed: int) -> list[SeedPair]:
    rng = random.Random(f"{kind.value}:{ring.characteristic}:{ring.num_vars}:{rand_seed}")
    return [random_seed(SeedKind(kind), ring, rng) for _ in range(count)]
