"""Sparse multivariate polynomials over Q or F_p.

Monomials are packed into a single Python ``int``: one 32-bit field for the
total degree followed by one field per variable, most significant first.
Integer order on packed keys is then graded lexicographic order
(``x1 > x2 > ...``), monomial multiplication is integer addition, and a
divisibility test is one masked subtraction.  Exponents stay below
``2**31`` so the top bit of each field can act as a borrow guard.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .arith import Field, FpElem, Scalar, field_for
from .errors import (
    ArityMismatch,
    DivisionByZero,
    InvalidRing,
    NotDivisible,
    PreconditionViolation,
    RingMismatch,
    TermLimitExceeded,
    ZeroInput,
)

FIELD_BITS = 32
FIELD_MASK = (1 << FIELD_BITS) - 1
MAX_EXPONENT = (1 << (FIELD_BITS - 1)) - 1
MAX_VARS = 8
MAX_TERMS = 10**6


class _NegInf:
    """Degree of the zero polynomial: below every integer, no arithmetic."""

    __slots__ = ()

    def __lt__(self, other):
        return not isinstance(other, _NegInf)

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return isinstance(other, _NegInf)

    def __eq__(self, other):
        return isinstance(other, _NegInf)

    def __hash__(self):
        return hash("-inf-degree")

    def __repr__(self):
        return "-inf"


NEG_INF = _NegInf()


@dataclass(frozen=True)
class RingSpec:
    """The ring ``K[x1, ..., xr]`` with ``K = Q`` (characteristic 0) or ``F_p``."""

    characteristic: int = 0
    num_vars: int = 1
    field: Field = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.num_vars, int) or not 1 <= self.num_vars <= MAX_VARS:
            raise InvalidRing(f"number of variables must be in 1..{MAX_VARS}, got {self.num_vars!r}")
        # field_for validates primality once per modulus.
        object.__setattr__(self, "field", field_for(self.characteristic))
        r = self.num_vars
        shifts = tuple(FIELD_BITS * (r - 1 - i) for i in range(r))
        guard = sum(1 << (FIELD_BITS * i + FIELD_BITS - 1) for i in range(r + 1))
        object.__setattr__(self, "_shifts", shifts)
        object.__setattr__(self, "_deg_shift", FIELD_BITS * r)
        object.__setattr__(self, "_guard", guard)

    @property
    def p(self) -> int:
        return self.characteristic

    def var_names(self) -> tuple[str, ...]:
        if self.num_vars <= 3:
            return ("x", "y", "z")[: self.num_vars]
        return tuple(f"x{i + 1}" for i in range(self.num_vars))

    def pack(self, exps: Sequence[int]) -> int:
        if len(exps) != self.num_vars:
            raise ArityMismatch(f"expected {self.num_vars} exponents, got {len(exps)}")
        key = 0
        deg = 0
        for e in exps:
            if e < 0 or e > MAX_EXPONENT:
                raise ValueError(f"exponent {e} out of range")
            key = (key << FIELD_BITS) | e
            deg += e
        return key | (deg << self._deg_shift)

    def unpack(self, key: int) -> tuple[int, ...]:
        return tuple((key >> s) & FIELD_MASK for s in self._shifts)

    def key_degree(self, key: int) -> int:
        return key >> self._deg_shift

    def key_var_degree(self, key: int, var: int) -> int:
        return (key >> self._shifts[var]) & FIELD_MASK

    def key_divides(self, small: int, big: int) -> bool:
        g = self._guard
        return ((big | g) - small) & g == g

    def var_key(self, var: int, e: int = 1) -> int:
        return (e << self._shifts[var]) | (e << self._deg_shift)

    def zero(self) -> "MPoly":
        return MPoly(self, {})

    def one(self) -> "MPoly":
        return MPoly(self, {0: 1})

    def const(self, c) -> "MPoly":
        c = self.field.convert(c)
        return MPoly(self, {0: c} if c else {})

    def gen(self, var: int) -> "MPoly":
        if not 0 <= var < self.num_vars:
            raise ArityMismatch(f"variable index {var} outside 0..{self.num_vars - 1}")
        return MPoly(self, {self.var_key(var): 1})

    def gens(self) -> tuple["MPoly", ...]:
        return tuple(self.gen(i) for i in range(self.num_vars))

    def __str__(self):
        k = "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"
        return f"{k}[{', '.join(self.var_names())}]"


def _clean(ring: RingSpec, d: dict) -> dict:
    """Drop zero coefficients and normalize their representation."""
    p = ring.characteristic
    if p:
        return {k: c % p for k, c in d.items() if c % p}
    out = {}
    for k, c in d.items():
        if c:
            if type(c) is Fraction and c.denominator == 1:
                c = c.numerator
            out[k] = c
    return out


class MPoly:
    """Immutable sparse polynomial; ``_t`` maps packed monomials to raw coefficients."""

    __slots__ = ("ring", "_t", "_keys", "_memo", "__weakref__")

    def __init__(self, ring: RingSpec, terms: dict):
        self.ring = ring
        self._t = terms
        self._keys = None
        self._memo = None

    def memo(self) -> dict:
        """Per-instance scratch space for derived data (safe: instances are immutable)."""
        if self._memo is None:
            self._memo = {}
        return self._memo

    # construction ---------------------------------------------------------

    @classmethod
    def from_terms(cls, ring: RingSpec, terms: Iterable[tuple[Sequence[int], Scalar]] | Mapping) -> "MPoly":
        if isinstance(terms, Mapping):
            terms = terms.items()
        conv = ring.field.convert
        d: dict = {}
        for exps, c in terms:
            k = ring.pack(tuple(exps))
            d[k] = d.get(k, 0) + conv(c)
        return cls(ring, _clean(ring, d))

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction, FpElem)):
            return self.ring.const(other)
        return NotImplemented

    # inspection -----------------------------------------------------------

    def _sorted_keys(self) -> list[int]:
        if self._keys is None:
            self._keys = sorted(self._t, reverse=True)
        return self._keys

    @property
    def terms(self) -> list[tuple[tuple[int, ...], Scalar]]:
        """Terms in graded-lex descending order, coefficients as field scalars."""
        pub = self.ring.field.to_public
        return [(self.ring.unpack(k), pub(self._t[k])) for k in self._sorted_keys()]

    def raw_items(self):
        return self._t.items()

    def exponent_items(self) -> list[tuple[tuple[int, ...], object]]:
        """``(exponent tuple, raw coefficient)`` pairs, computed once."""
        memo = self.memo()
        items = memo.get("exps")
        if items is None:
            unpack = self.ring.unpack
            items = memo["exps"] = [(unpack(k), c) for k, c in self._t.items()]
        return items

    def __len__(self):
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def is_unit(self) -> bool:
        return len(self._t) == 1 and 0 in self._t

    def degree(self, var: int | None = None):
        """Total degree, or the degree in ``var``; the zero polynomial has ``NEG_INF``."""
        if not self._t:
            return NEG_INF
        if var is None:
            return self.ring.key_degree(max(self._t))
        s = self.ring._shifts[var]
        return max((k >> s) & FIELD_MASK for k in self._t)

    def degrees(self) -> tuple[int, ...]:
        if not self._t:
            raise ZeroInput("the zero polynomial has no degree vector")
        memo = self.memo()
        degs = memo.get("degrees")
        if degs is None:
            degs = memo["degrees"] = tuple(
                max((k >> s) & FIELD_MASK for k in self._t) for s in self.ring._shifts
            )
        return degs

    def variables(self) -> tuple[int, ...]:
        """Indices of the variables that occur."""
        if not self._t:
            return ()
        return tuple(i for i, d in enumerate(self.degrees()) if d > 0)

    def leading_term(self) -> tuple[tuple[int, ...], Scalar]:
        if not self._t:
            raise ZeroInput("the zero polynomial has no leading term")
        k = self._sorted_keys()[0]
        return self.ring.unpack(k), self.ring.field.to_public(self._t[k])

    def lc(self) -> Scalar:
        return self.leading_term()[1]

    def _lead(self) -> tuple[int, object]:
        k = max(self._t)
        return k, self._t[k]

    def constant_value(self) -> Scalar:
        return self.ring.field.to_public(self._t.get(0, 0))

    # arithmetic -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.ring == other.ring and self._t == other._t
        if isinstance(other, (int, Fraction, FpElem)):
            try:
                return self._t == self.ring.const(other)._t
            except (InvalidRing, DivisionByZero):
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self._t.items())))

    def __bool__(self):
        return bool(self._t)

    def __neg__(self):
        p = self.ring.characteristic
        if p:
            return MPoly(self.ring, {k: p - c for k, c in self._t.items()})
        return MPoly(self.ring, {k: -c for k, c in self._t.items()})

    def __pos__(self):
        return self

    def _addsub(self, other: "MPoly", sign: int) -> "MPoly":
        p = self.ring.characteristic
        d = dict(self._t)
        for k, c in other._t.items():
            v = d.get(k)
            if v is None:
                d[k] = c if sign > 0 else (p - c if p else -c)
                continue
            v = v + c if sign > 0 else v - c
            if p:
                v %= p
            elif type(v) is Fraction and v.denominator == 1:
                v = v.numerator
            if v:
                d[k] = v
            else:
                del d[k]
        return MPoly(self.ring, d)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._addsub(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._addsub(other, -1)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other._addsub(self, -1)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mp_mul(self, other)

    __rmul__ = __mul__

    def scale(self, c) -> "MPoly":
        c = self.ring.field.convert(c)
        if not c:
            return self.ring.zero()
        return MPoly(self.ring, _clean(self.ring, {k: v * c for k, v in self._t.items()}))

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result = self.ring.one()
        if e == 0:
            return result
        # Repeated multiplication by a sparse base beats squaring here.
        if len(self._t) <= 8:
            for _ in range(e):
                result = mp_mul(result, self)
            return result
        base = self
        while e:
            if e & 1:
                result = mp_mul(result, base)
            e >>= 1
            if e:
                base = mp_mul(base, base)
        return result

    def exact_div(self, other: "MPoly") -> "MPoly":
        return mp_exact_div(self, other)

    def try_div(self, other: "MPoly") -> "MPoly | None":
        try:
            return mp_exact_div(self, other)
        except NotDivisible:
            return None

    def divides(self, other: "MPoly") -> bool:
        """True when ``self`` divides ``other`` exactly."""
        return other.try_div(self) is not None

    def canonical(self) -> "MPoly":
        """Scale to graded-lex leading coefficient 1; zero stays zero."""
        if not self._t:
            return self
        _, c = self._lead()
        if c == 1:
            return self
        f = self.ring.field
        return self.scale(f.inv(c))

    def monic(self) -> "MPoly":
        return self.canonical()

    def eval(self, point: Sequence[Scalar]) -> Scalar:
        return mp_eval(self, point)

    def __str__(self):
        from .polytext import format_poly

        return format_poly(self)

    def __repr__(self):
        return f"MPoly({str(self)!r}, {self.ring})"

    # views ------------------------------------------------------------------

    def coefficients_in(self, var: int) -> dict[int, "MPoly"]:
        """Split as ``sum_e c_e * var**e``; each ``c_e`` is free of ``var``."""
        r = self.ring
        s = r._shifts[var]
        ds = r._deg_shift
        parts: dict[int, dict] = {}
        for k, c in self._t.items():
            e = (k >> s) & FIELD_MASK
            parts.setdefault(e, {})[k - (e << s) - (e << ds)] = c
        return {e: MPoly(r, d) for e, d in parts.items()}

    @classmethod
    def from_coefficients_in(cls, ring: RingSpec, var: int, coeffs: Mapping[int, "MPoly"]) -> "MPoly":
        s = ring._shifts[var]
        ds = ring._deg_shift
        d = {}
        for e, c in coeffs.items():
            off = (e << s) | (e << ds)
            for k, v in c._t.items():
                d[k + off] = v
        return cls(ring, d)

    def dense_univariate(self) -> list:
        """Raw coefficient list, low degree first; only for one-variable rings."""
        if self.ring.num_vars != 1:
            raise ArityMismatch("dense_univariate needs a one-variable ring")
        if not self._t:
            return []
        ds = self.ring._deg_shift
        n = max(self._t) >> ds
        out = [0] * (n + 1)
        for k, c in self._t.items():
            out[k >> ds] = c
        return out

    @classmethod
    def from_dense_univariate(cls, ring: RingSpec, coeffs: Sequence) -> "MPoly":
        if ring.num_vars != 1:
            raise ArityMismatch("from_dense_univariate needs a one-variable ring")
        conv = ring.field.convert
        d = {}
        for e, c in enumerate(coeffs):
            c = conv(c)
            if c:
                d[ring.var_key(0, e)] = c
        return cls(ring, d)


def _check_rings(a: MPoly, b: MPoly) -> RingSpec:
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")
    return a.ring


def mp_mul(a: MPoly, b: MPoly) -> MPoly:
    """Exact product of two polynomials over the same ring."""
    ring = _check_rings(a, b)
    if not a._t or not b._t:
        return ring.zero()
    at, bt = a._t, b._t
    if len(at) < len(bt):
        at, bt = bt, at
    if len(bt) == 1:
        ((kb, cb),) = bt.items()
        d = {ka + kb: ca * cb for ka, ca in at.items()}
        return MPoly(ring, _clean(ring, d))
    if len(at) * len(bt) > 50 * MAX_TERMS:
        raise TermLimitExceeded("product too large")
    d: dict = {}
    get = d.get
    bitems = list(bt.items())
    for ka, ca in at.items():
        for kb, cb in bitems:
            k = ka + kb
            d[k] = get(k, 0) + ca * cb
    out = _clean(ring, d)
    if len(out) > MAX_TERMS:
        raise TermLimitExceeded(f"product has {len(out)} terms")
    return MPoly(ring, out)


def mp_exact_div(a: MPoly, b: MPoly) -> MPoly:
    """Return ``q`` with ``q * b == a``.

    Raises ``NotDivisible`` as soon as a leading remainder term is not a
    multiple of the leading term of ``b``.
    """
    ring = _check_rings(a, b)
    if not b._t:
        raise DivisionByZero("polynomial division by zero")
    if not a._t:
        return a
    p = ring.characteristic
    f = ring.field
    lb_key, lb_c = b._lead()
    if len(b._t) == 1:
        quot = {}
        for k, c in a._t.items():
            if not ring.key_divides(lb_key, k):
                raise NotDivisible("monomial divisor does not divide every term")
            quot[k - lb_key] = f.div(c, lb_c)
        return MPoly(ring, quot)
    if ring.key_degree(max(a._t)) < ring.key_degree(lb_key):
        raise NotDivisible("divisor has larger degree")
    inv_lb = f.inv(lb_c) if p else None
    int_lb = type(lb_c) is int
    tail = [(k, c) for k, c in b._t.items() if k != lb_key]
    rem = dict(a._t)
    heap = [-k for k in rem]
    heapq.heapify(heap)
    quot = {}
    guard = ring._guard
    pop, push = heapq.heappop, heapq.heappush
    while heap:
        k = -pop(heap)
        c = rem.pop(k)
        if p:
            c %= p
        if not c:
            continue
        if ((k | guard) - lb_key) & guard != guard:
            raise NotDivisible("leading remainder term not divisible")
        qk = k - lb_key
        if p:
            qc = c * inv_lb % p
        elif int_lb and type(c) is int and c % lb_c == 0:
            qc = c // lb_c
        else:
            qc = Fraction(c) / lb_c
            if qc.denominator == 1:
                qc = qc.numerator
        quot[qk] = qc
        for kb, cb in tail:
            kk = qk + kb
            v = rem.get(kk)
            if v is None:
                rem[kk] = -qc * cb
                push(heap, -kk)
            else:
                rem[kk] = v - qc * cb
        if len(quot) > MAX_TERMS:
            raise TermLimitExceeded("quotient too large")
    return MPoly(ring, _clean(ring, quot))


def mp_eval(a: MPoly, point: Sequence[Scalar]) -> Scalar:
    """Evaluate at a point given as field scalars (ints, Fractions or FpElems)."""
    ring = a.ring
    if len(point) != ring.num_vars:
        raise ArityMismatch(f"point has {len(point)} coordinates, ring has {ring.num_vars} variables")
    f = ring.field
    vals = [f.convert(x) for x in point]
    p = ring.characteristic
    total = 0
    for k, c in a._t.items():
        term = c
        for v, s in zip(vals, ring._shifts):
            e = (k >> s) & FIELD_MASK
            if e:
                term = term * (pow(v, e, p) if p else v**e)
        total += term
        if p:
            total %= p
    return f.to_public(f.convert(total) if not p else total % p)


@dataclass(frozen=True)
class Monic:
    """A nonconstant polynomial with graded-lex leading coefficient 1."""

    poly: MPoly

    def __post_init__(self):
        if self.poly.is_constant():
            raise PreconditionViolation("a monic divisor must be nonconstant")
        if self.poly._lead()[1] != 1:
            raise PreconditionViolation("leading coefficient is not 1")
