"""Auxiliary fields used to specialize polynomials for coprimality certificates.

Characteristic 0 maps into F_q with q = 2**61 - 1.  A prime characteristic
p maps into F_p itself when p is large, and otherwise into GF(p**k) with
p**k >= 2**15, whose elements are stored as discrete logarithms so that both
multiplication and (through a Zech table) addition are single lookups.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import upoly_fp as up

MERSENNE_61 = (1 << 61) - 1
_MIN_ORDER = 1 << 15


class ModularImage:
    """Images in a prime field F_q, elements are ints in ``[0, q)``."""

    def __init__(self, q: int, source_char: int):
        self.q = q
        self.source_char = source_char
        self.key = ("mod", q)

    def coeff(self, c):
        """Image of a raw ring coefficient, or ``None`` if it has no image."""
        q = self.q
        if type(c) is Fraction:
            den = c.denominator % q
            if not den:
                return None
            return c.numerator * pow(den, -1, q) % q
        return c % q

    def random_point(self, rng):
        return rng.randrange(1, self.q)

    def image_terms(self, poly):
        """Terms of ``poly`` with coefficients mapped in, or ``None`` if one has no image."""
        memo = poly.memo()
        key = ("img",) + self.key
        if key not in memo:
            out = []
            for exps, c in poly.exponent_items():
                v = self.coeff(c)
                if v is None:
                    out = None
                    break
                out.append((exps, v))
            memo[key] = out
        return memo[key]

    def univariate(self, terms, var, point):
        """Coefficient list (low first) of the specialization keeping ``var`` free."""
        q = self.q
        out: dict[int, int] = {}
        nvars = len(point)
        top = [0] * nvars
        for exps, _ in terms:
            for i in range(nvars):
                if exps[i] > top[i]:
                    top[i] = exps[i]
        tables = []
        for i in range(nvars):
            row = [1]
            if i != var:
                x = point[i]
                for _ in range(top[i]):
                    row.append(row[-1] * x % q)
            tables.append(row)
        others = [i for i in range(nvars) if i != var]
        for exps, v in terms:
            for i in others:
                e = exps[i]
                if e:
                    v = v * tables[i][e] % q
            ev = exps[var]
            out[ev] = out.get(ev, 0) + v
        if not out:
            return []
        dense = [0] * (max(out) + 1)
        for e, v in out.items():
            dense[e] = v % q
        return up.strip(dense)

    def gcd_degree(self, f, g) -> int:
        return up.degree(up.gcd(f, g, self.q))


class ZechImage:
    """GF(p**k) in logarithmic representation; ``ZERO`` marks the zero element."""

    def __init__(self, p: int, k: int, exp_table: list[int], log_table: list[int], zech: list[int]):
        self.p = p
        self.k = k
        self.order = p**k - 1
        self.ZERO = self.order
        self.exp = exp_table
        self.log = log_table
        self.zech = zech
        self.minus_one = 0 if p == 2 else self.order // 2
        self.key = ("zech", p, k)

    def coeff(self, c):
        return self.log[c % self.p]

    def random_point(self, rng):
        return rng.randrange(0, self.order)

    def image_terms(self, poly):
        memo = poly.memo()
        key = ("img",) + self.key
        if key not in memo:
            log, p = self.log, self.p
            memo[key] = [(exps, log[c % p]) for exps, c in poly.exponent_items()]
        return memo[key]

    def add(self, a, b):
        Z = self.ZERO
        if a == Z:
            return b
        if b == Z:
            return a
        z = self.zech[(b - a) % self.order]
        if z == Z:
            return Z
        return (a + z) % self.order

    def univariate(self, terms, var, point):
        Z = self.ZERO
        n = self.order
        add = self.add
        out: dict[int, int] = {}
        for exps, v in terms:
            if v == Z:
                continue
            for i, e in enumerate(exps):
                if e and i != var:
                    v += point[i] * e
            v %= n
            ev = exps[var]
            out[ev] = add(out.get(ev, Z), v)
        dense = [Z] * (max(out) + 1 if out else 0)
        for e, v in out.items():
            dense[e] = v
        while dense and dense[-1] == Z:
            dense.pop()
        return dense

    def _rem(self, f, g):
        Z, n, zech, m1 = self.ZERO, self.order, self.zech, self.minus_one
        r = list(f)
        dg = len(g) - 1
        inv_lead = (-g[-1]) % n
        for i in range(len(r) - 1, dg - 1, -1):
            c = r[i]
            if c == Z:
                continue
            # subtract (c / lead) * x**(i-dg) * g
            factor = (c + inv_lead + m1) % n
            off = i - dg
            for j, gj in enumerate(g):
                if gj == Z:
                    continue
                t = (factor + gj) % n
                a = r[off + j]
                if a == Z:
                    r[off + j] = t
                else:
                    z = zech[(t - a) % n]
                    r[off + j] = Z if z == Z else (a + z) % n
        r = r[:dg]
        while r and r[-1] == Z:
            r.pop()
        return r

    def gcd_degree(self, f, g) -> int:
        while g:
            f, g = g, self._rem(f, g)
        return len(f) - 1


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


def _is_irreducible(m: list[int], p: int) -> bool:
    k = len(m) - 1
    xp = up.X
    for _ in range(k):
        xp = up.powmod(xp, p, m, p)
    if up.sub(xp, up.X, p) != []:
        return False
    for ell in _prime_factors(k):
        xq = up.X
        for _ in range(k // ell):
            xq = up.powmod(xq, p, m, p)
        if up.degree(up.gcd(up.sub(xq, up.X, p), m, p)) != 0:
            return False
    return True


def _primitive_modulus(p: int, k: int) -> list[int]:
    """First monic degree-k polynomial (in a fixed enumeration) with x primitive."""
    order = p**k - 1
    ells = _prime_factors(order)
    for idx in range(1, p**k):
        low = [(idx // p**j) % p for j in range(k)]
        if low[0] == 0:
            continue
        m = low + [1]
        if not _is_irreducible(m, p):
            continue
        if all(up.powmod(up.X, order // ell, m, p) != [1] for ell in ells):
            return m
    raise AssertionError(f"no primitive polynomial of degree {k} over GF({p})")


@lru_cache(maxsize=None)
def _zech_image(p: int) -> ZechImage:
    k = 1
    while p**k < _MIN_ORDER:
        k += 1
    m = _primitive_modulus(p, k)
    q = p**k
    order = q - 1
    low = m[:k]
    exp_table = [0] * order
    log_table = [order] * q
    cur = [1] + [0] * (k - 1)
    weights = [p**j for j in range(k)]
    for i in range(order):
        code = sum(d * w for d, w in zip(cur, weights))
        exp_table[i] = code
        log_table[code] = i
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [(c - top * mj) % p for c, mj in zip(cur, low)]
    # 1 + g**i: adding one only touches the constant digit.
    zech = [order] * order
    for i in range(order):
        code = exp_table[i]
        c0 = code % p
        code1 = code - c0 + (c0 + 1) % p
        zech[i] = log_table[code1] if code1 else order
    return ZechImage(p, k, exp_table, log_table, zech)


def image_field(characteristic: int):
    if characteristic == 0:
        return ModularImage(MERSENNE_61, 0)
    if characteristic >= _MIN_ORDER:
        return ModularImage(characteristic, characteristic)
    return _zech_image(characteristic)
