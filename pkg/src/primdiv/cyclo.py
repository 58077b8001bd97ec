"""Homogeneous integer bivariate polynomials and their evaluation at seed pairs.

The roots ``a, b`` of ``T**2 - s*T + q`` (Lucas) or of the Lehmer quartic
are never represented.  A symmetric homogeneous form ``A(X, Y)`` is
evaluated at ``(a, b)`` by pairing ``X**(d-i) Y**i`` with ``X**i Y**(d-i)``,
which gives ``(ab)**i * (a**(d-2i) + b**(d-2i))``: a power of the seed
product times a power sum, both computable inside the polynomial ring.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    InvalidSeed,
    KindMismatch,
    NotDivisible,
    NotSymmetric,
    OutOfRange,
    ParityViolation,
    RingMismatch,
)
from .gcd import mp_gcd
from .mpoly import MPoly

MAX_CYCLOTOMIC_INDEX = 10**4


@dataclass(frozen=True)
class HomogBivar:
    """Homogeneous ``sum_k coeffs[k] * X**(d-k) * Y**k`` over the integers."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a homogeneous form needs at least one coefficient")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_symmetric(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __mul__(self, other: "HomogBivar") -> "HomogBivar":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return HomogBivar(out)

    def exact_div(self, other: "HomogBivar") -> "HomogBivar":
        """Quotient over the integers; raises ``NotDivisible`` otherwise."""
        a = list(self.coeffs)
        b = list(other.coeffs)
        if not any(b):
            raise ZeroDivisionError("division by the zero form")
        # Leading zeros of b are powers of Y and must be matched in a.
        while b[0] == 0:
            if a[0] != 0:
                raise NotDivisible("form is not divisible by Y")
            a.pop(0)
            b.pop(0)
        if len(a) < len(b):
            raise NotDivisible("divisor has larger degree")
        q = [0] * (len(a) - len(b) + 1)
        for i in range(len(q)):
            c, r = divmod(a[i], b[0])
            if r:
                raise NotDivisible("non-integral quotient coefficient")
            q[i] = c
            if c:
                for j, bj in enumerate(b):
                    a[i + j] -= c * bj
        if any(a):
            raise NotDivisible("nonzero remainder")
        return HomogBivar(q)

    def inflate(self, n: int) -> "HomogBivar":
        """``A(X**n, Y**n)``."""
        out = [0] * (self.degree * n + 1)
        for k, c in enumerate(self.coeffs):
            out[k * n] = c
        return HomogBivar(out)

    def __call__(self, x, y):
        d = self.degree
        return sum(c * x ** (d - k) * y**k for k, c in enumerate(self.coeffs))

    def __str__(self):
        d = self.degree
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                mono = "*".join(
                    s for s in (_pw("X", d - k), _pw("Y", k)) if s
                )
                parts.append((c, mono))
        if not parts:
            return "0"
        out = []
        for c, mono in parts:
            mag = abs(c)
            body = mono if mag == 1 and mono else (f"{mag}*{mono}" if mono else str(mag))
            if not out:
                out.append(f"-{body}" if c < 0 else body)
            else:
                out.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(out)


def _pw(name, e):
    return "" if e == 0 else (name if e == 1 else f"{name}^{e}")


# --- cyclotomic polynomials ------------------------------------------------


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


def _u_inflate(f: list[int], n: int) -> list[int]:
    out = [0] * ((len(f) - 1) * n + 1)
    for i, c in enumerate(f):
        out[i * n] = c
    return out


def _u_exact_div_monic(f: list[int], g: list[int]) -> list[int]:
    """Exact quotient of integer polynomials (low degree first), ``g`` monic."""
    r = list(f)
    dg = len(g) - 1
    q = [0] * (len(f) - dg)
    for i in range(len(f) - 1, dg - 1, -1):
        c = r[i]
        if c:
            q[i - dg] = c
            off = i - dg
            for j in range(dg + 1):
                r[off + j] -= c * g[j]
    if any(r[:dg]):
        raise NotDivisible("cyclotomic construction left a remainder")
    return q


@lru_cache(maxsize=256)
def _cyclotomic_univariate(n: int) -> tuple[int, ...]:
    # Phi_{l*m}(x) = Phi_m(x**l) / Phi_m(x) for a prime l not dividing m,
    # then Phi_n(x) = Phi_rad(n)(x**(n/rad(n))).
    f = [-1, 1]
    rad = 1
    for ell in _prime_factors(n):
        f = _u_exact_div_monic(_u_inflate(f, ell), f)
        rad *= ell
    if n != rad:
        f = _u_inflate(f, n // rad)
    return tuple(f)


def cyclotomic_int(n: int) -> HomogBivar:
    """The homogeneous ``n``-th cyclotomic form, degree ``phi(n)``."""
    if not isinstance(n, int) or not 1 <= n <= MAX_CYCLOTOMIC_INDEX:
        raise OutOfRange(f"cyclotomic index must be in 1..{MAX_CYCLOTOMIC_INDEX}, got {n!r}")
    u = _cyclotomic_univariate(n)
    # coefficient of X**(d-k) Y**k is the coefficient of x**(d-k)
    return HomogBivar(u[::-1])


def homog_family(kind: str, m: int, n: int | None = None) -> HomogBivar:
    """The auxiliary forms P, T, W and V.

    * ``P_m = (X**m - Y**m)/(X - Y)``
    * ``T_m = P_m/(X + Y)`` for even ``m``
    * ``W_m = (X**m + Y**m)/(X + Y)`` for odd ``m``
    * ``V`` with arguments ``(m, n)``: ``P_m(X**n, Y**n)``
    """
    kind = kind.upper()
    if not isinstance(m, int) or m < 1:
        raise OutOfRange(f"index must be a positive integer, got {m!r}")
    if kind == "P":
        return HomogBivar([1] * m)
    if kind == "T":
        if m % 2:
            raise ParityViolation(f"T_m needs even m, got {m}")
        return homog_family("P", m).exact_div(HomogBivar([1, 1]))
    if kind == "W":
        if m % 2 == 0:
            raise ParityViolation(f"W_m needs odd m, got {m}")
        return HomogBivar([(-1) ** k for k in range(m)])
    if kind == "V":
        if not isinstance(n, int) or n < 1:
            raise OutOfRange(f"V needs a positive inner exponent, got {n!r}")
        return homog_family("P", m).inflate(n)
    raise ValueError(f"unknown family {kind!r}")


# --- seed pairs and power sums --------------------------------------------


class SeedKind(str, enum.Enum):
    FG = "FG"
    LUCAS = "LUCAS"
    LEHMER = "LEHMER"


@dataclass(frozen=True)
class SeedPair:
    """Ring data determining a sequence.

    ``FG``: ``(f, g)``.  ``LUCAS``: ``(s, q) = (a + b, a*b)``.
    ``LEHMER``: ``(E, q) = ((a + b)**2, a*b)``.
    """

    kind: SeedKind
    first: MPoly
    second: MPoly

    def __post_init__(self):
        object.__setattr__(self, "kind", SeedKind(self.kind))
        a, b = self.first, self.second
        if a.ring != b.ring:
            raise RingMismatch("seed entries live in different rings")
        if a.is_zero() or b.is_zero():
            raise InvalidSeed("seed entries must be nonzero")
        if a.is_constant() and b.is_constant():
            raise InvalidSeed("seed entries must not both be constants")
        if not mp_gcd(a, b).is_unit():
            raise InvalidSeed("seed entries must be coprime")

    @property
    def ring(self):
        return self.first.ring


class PowerSums:
    """``t_k = a**k + b**k`` for ``k <= k_max``.

    For a Lehmer seed only even ``k`` give elements of the ring; asking
    for an odd one raises ``ParityViolation``.
    """

    def __init__(self, seed: SeedPair, k_max: int):
        if seed.kind is SeedKind.FG:
            raise KindMismatch("power sums of (f, g) are plain powers; no recurrence needed")
        self.seed = seed
        self.k_max = k_max
        ring = seed.ring
        two = ring.const(2)
        s, q = seed.first, seed.second
        if seed.kind is SeedKind.LUCAS:
            vals = [two, s]
            for _ in range(2, k_max + 1):
                vals.append(s * vals[-1] - q * vals[-2])
            self._vals = vals[: k_max + 1]
        else:
            t2 = s - q.scale(2)
            q2 = q * q
            vals = {0: two, 2: t2}
            for k in range(4, k_max + 1, 2):
                vals[k] = t2 * vals[k - 2] - q2 * vals[k - 4]
            self._vals = [vals.get(k) for k in range(k_max + 1)]

    def __len__(self):
        return self.k_max + 1

    def __getitem__(self, k: int) -> MPoly:
        if not 0 <= k <= self.k_max:
            raise IndexError(k)
        if self.seed.kind is SeedKind.LEHMER and k % 2:
            raise ParityViolation(f"odd power sum t_{k} of a Lehmer pair is not in the ring")
        return self._vals[k]


def power_sums(seed: SeedPair, k_max: int) -> PowerSums:
    return PowerSums(seed, k_max)


def substitute(template: HomogBivar, f: MPoly, g: MPoly) -> MPoly:
    """``template(f, g)`` by homogeneous Horner evaluation."""
    c = template.coeffs
    acc = f.ring.const(c[0])
    gk = f.ring.one()
    for k in range(1, len(c)):
        gk = gk * g
        acc = acc * f
        if c[k]:
            acc = acc + gk.scale(c[k])
    return acc


def eval_symmetric(template: HomogBivar, seed: SeedPair) -> MPoly:
    """Value of a symmetric form at the pair described by ``seed``."""
    if not template.is_symmetric():
        raise NotSymmetric("template is not symmetric in X and Y")
    d = template.degree
    if seed.kind is SeedKind.FG:
        return substitute(template, seed.first, seed.second)
    if seed.kind is SeedKind.LEHMER and d % 2:
        raise ParityViolation("odd-degree forms have no value in the ring at a Lehmer pair")
    t = power_sums(seed, d)
    q = seed.second
    ring = seed.ring
    c = template.coeffs
    half = d // 2
    # sum_i c_i q**i t_{d-2i} (+ c_{d/2} q**(d/2) when d is even), Horner in q
    acc = ring.const(c[half]) if d % 2 == 0 else t[d - 2 * half].scale(c[half])
    for i in range(half - 1, -1, -1):
        acc = acc * q
        if c[i]:
            acc = acc + t[d - 2 * i].scale(c[i])
    return acc


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("Mobius function needs a positive integer")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))

