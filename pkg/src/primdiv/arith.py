"""Exact coefficient arithmetic: integers, rationals and prime fields.

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`,
both already exact and canonical.  Prime-field elements get a small value
class, :class:`FpElem`.  Polynomial code does not use ``FpElem`` on its hot
paths; it stores raw residues and goes through a :class:`Field` object.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import DivisionByZero, InvalidRing

# Largest modulus accepted for a prime field.
MAX_PRIME = 1 << 62

_TRIAL_LIMIT = 1 << 21
# Deterministic for every n < 3.3e24, which covers all n < 2**64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


@lru_cache(maxsize=None)
def _small_primes(limit: int = 1 << 11) -> tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(limit ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _miller_rabin(n: int, base: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(base, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic primality test for ``n < 2**64``.

    Trial division by every odd number up to ``2**21`` (stopping at the
    square root), then Miller-Rabin with a fixed base set that is known to
    be exact below ``3.3e24``.
    """
    if n < 2:
        return False
    for p in _small_primes():
        if n == p:
            return True
        if n % p == 0:
            return False
    limit = min(_TRIAL_LIMIT, int(n ** 0.5) + 1)
    d = _small_primes()[-1] + 2
    while d <= limit:
        if n % d == 0:
            return n == d
        d += 2
    if d * d > n:
        return True
    return all(_miller_rabin(n, b) for b in _MR_BASES)


def rat_canonical(num: int, den: int) -> Fraction:
    """Build the reduced rational ``num/den`` with a positive denominator."""
    if den == 0:
        raise DivisionByZero("rational with zero denominator")
    return Fraction(num, den)


@dataclass(frozen=True, slots=True)
class FpElem:
    """An element of the prime field with ``modulus`` elements."""

    residue: int
    modulus: int

    def __post_init__(self):
        if not 0 <= self.residue < self.modulus:
            object.__setattr__(self, "residue", self.residue % self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, FpElem):
            if other.modulus != self.modulus:
                raise InvalidRing(
                    f"cannot combine elements mod {self.modulus} and mod {other.modulus}"
                )
            return other.residue
        if isinstance(other, int):
            return other % self.modulus
        if isinstance(other, Fraction):
            return fraction_mod(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElem((self.residue + o) % self.modulus, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElem((self.residue - o) % self.modulus, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElem((o - self.residue) % self.modulus, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElem(self.residue * o % self.modulus, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElem(-self.residue % self.modulus, self.modulus)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * field_inv(FpElem(o, self.modulus))

    def __pow__(self, e: int):
        if e < 0:
            return field_inv(self) ** (-e)
        return FpElem(pow(self.residue, e, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, FpElem):
            return self.residue == other.residue and self.modulus == other.modulus
        if isinstance(other, int):
            return self.residue == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.modulus))

    def __bool__(self):
        return self.residue != 0

    def __int__(self):
        return self.residue

    def __repr__(self):
        return f"{self.residue} (mod {self.modulus})"


Scalar = Union[int, Fraction, FpElem]


def fraction_mod(x: Fraction, p: int) -> int:
    den = x.denominator % p
    if den == 0:
        raise DivisionByZero(f"denominator {x.denominator} is not invertible mod {p}")
    return x.numerator * pow(den, -1, p) % p


def field_inv(a: Scalar) -> Scalar:
    """Multiplicative inverse in Q (for ``int``/``Fraction``) or in F_p."""
    if isinstance(a, FpElem):
        if a.residue == 0:
            raise DivisionByZero(f"0 has no inverse mod {a.modulus}")
        return FpElem(pow(a.residue, -1, a.modulus), a.modulus)
    if a == 0:
        raise DivisionByZero("0 has no inverse in Q")
    inv = 1 / Fraction(a)
    return inv.numerator if inv.denominator == 1 else inv


class Field:
    """Coefficient field of a polynomial ring.

    Coefficients are stored raw: ``int`` or ``Fraction`` over Q (a
    ``Fraction`` only when the denominator is not 1), an ``int`` in
    ``[0, p)`` over F_p.
    """

    characteristic: int

    def convert(self, x):
        raise NotImplementedError

    def inv(self, c):
        raise NotImplementedError

    def to_public(self, c) -> Scalar:
        raise NotImplementedError


class RationalField(Field):
    characteristic = 0

    def convert(self, x):
        if isinstance(x, bool):
            return int(x)
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction):
            return x.numerator if x.denominator == 1 else x
        if isinstance(x, FpElem):
            raise InvalidRing("cannot map a prime-field element into Q")
        raise TypeError(f"cannot convert {type(x).__name__} to a rational")

    def inv(self, c):
        return field_inv(c)

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero in Q")
        if type(a) is int and type(b) is int and a % b == 0:
            return a // b
        q = Fraction(a) / b
        return q.numerator if q.denominator == 1 else q

    def to_public(self, c):
        return c

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    def __init__(self, p: int):
        self.characteristic = p

    def convert(self, x):
        p = self.characteristic
        if isinstance(x, FpElem):
            if x.modulus != p:
                raise InvalidRing(f"element mod {x.modulus} used in GF({p})")
            return x.residue
        if isinstance(x, int):
            return x % p
        if isinstance(x, Fraction):
            return fraction_mod(x, p)
        raise TypeError(f"cannot convert {type(x).__name__} to GF({p})")

    def inv(self, c):
        if c % self.characteristic == 0:
            raise DivisionByZero(f"0 has no inverse mod {self.characteristic}")
        return pow(c, -1, self.characteristic)

    def div(self, a, b):
        return a * self.inv(b) % self.characteristic

    def to_public(self, c):
        return FpElem(c, self.characteristic)

    def __repr__(self):
        return f"GF({self.characteristic})"


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    """The prime field with ``p`` elements; ``p`` is validated once here."""
    if not isinstance(p, int) or p < 2 or p >= MAX_PRIME or not is_prime(p):
        raise InvalidRing(f"characteristic {p!r} is not a prime below 2**62")
    return PrimeField(p)


def field_for(characteristic: int) -> Field:
    return QQ if characteristic == 0 else GF(characteristic)
