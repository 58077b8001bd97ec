"""Sylvester matrices and exact resultants of homogeneous integer forms."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .cyclo import HomogBivar, homog_family
from .errors import ConstantInput, NotDivisible, OutOfRange, PreconditionViolation

MAX_DIMENSION = 200


@dataclass(frozen=True)
class SylvesterMatrix:
    rows: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def sylvester(a: HomogBivar, b: HomogBivar) -> SylvesterMatrix:
    """Standard layout: ``deg b`` shifted copies of ``a`` above ``deg a`` copies of ``b``."""
    m, n = a.degree, b.degree
    if m < 1 or n < 1:
        raise ConstantInput("Sylvester matrix needs two non-constant forms")
    size = m + n
    if size > MAX_DIMENSION:
        raise OutOfRange(f"Sylvester matrix of dimension {size} exceeds {MAX_DIMENSION}")
    rows = []
    for i in range(n):
        rows.append(tuple([0] * i + list(a.coeffs) + [0] * (size - m - 1 - i)))
    for i in range(m):
        rows.append(tuple([0] * i + list(b.coeffs) + [0] * (size - n - 1 - i)))
    return SylvesterMatrix(tuple(rows))


def det_exact(matrix: SylvesterMatrix | Sequence[Sequence[int]]) -> int:
    """Integer determinant by single-step Bareiss elimination.

    Each division by the previous pivot is exact; this is checked.
    """
    rows = matrix.as_lists() if isinstance(matrix, SylvesterMatrix) else [list(r) for r in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    M = rows
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        rowk = M[k]
        for i in range(k + 1, n):
            rowi = M[i]
            lead = rowi[k]
            for j in range(k + 1, n):
                num = pivot * rowi[j] - lead * rowk[j]
                q, r = divmod(num, prev)
                if r:
                    raise NotDivisible("Bareiss step was not exact")
                rowi[j] = q
            rowi[k] = 0
        prev = pivot
    return sign * M[n - 1][n - 1]


def resultant(a: HomogBivar, b: HomogBivar) -> int:
    """``Res(a, b)``; a constant form ``c`` gives ``c**deg(other)``."""
    if a.degree == 0:
        return a.coeffs[0] ** b.degree
    if b.degree == 0:
        return b.coeffs[0] ** a.degree
    return det_exact(sylvester(a, b))


LEMMAS = ("RES2", "MIX", "PMN", "ABN")


def lemma_forms(lemma: str, m: int, n: int) -> tuple[HomogBivar, HomogBivar]:
    """The pair of forms whose resultant the named lemma claims is a unit."""
    lemma = lemma.upper()
    if lemma == "RES2":
        if m < 1 or n < 1 or gcd(m, n) != 1:
            raise PreconditionViolation(f"RES2 needs coprime positive m, n; gcd({m}, {n}) = {gcd(m, n)}")
        return homog_family("P", m), homog_family("P", n)
    if lemma == "MIX":
        if m < 1 or m % 2 == 0:
            raise PreconditionViolation(f"MIX needs odd m, got {m}")
        if n < 4 or n % 2:
            raise PreconditionViolation(f"MIX needs even n >= 4, got {n}")
        if gcd(m, n) != 1:
            raise PreconditionViolation(f"MIX needs coprime m, n; gcd({m}, {n}) = {gcd(m, n)}")
        return homog_family("P", m), homog_family("T", n)
    if lemma == "PMN":
        if m < 3 or n < 3 or m % 2 == 0 or n % 2 == 0:
            raise PreconditionViolation(f"PMN needs odd m, n >= 3, got ({m}, {n})")
        return homog_family("V", m, n), homog_family("W", n)
    if lemma == "ABN":
        if n < 3 or n % 2 == 0:
            raise PreconditionViolation(f"ABN needs odd n >= 3, got {n}")
        return homog_family("P", n), HomogBivar([1, 2, 1])
    raise ValueError(f"unknown lemma {lemma!r}")


@dataclass(frozen=True)
class LemmaResult:
    lemma: str
    m: int
    n: int
    value: int
    passed: bool


def resultant_lemma_check(lemma: str, m: int, n: int) -> LemmaResult:
    """Compute the lemma's resultant and test that it is +1 or -1."""
    a, b = lemma_forms(lemma, m, n)
    value = resultant(a, b)
    return LemmaResult(lemma.upper(), m, n, value, value in (1, -1))
