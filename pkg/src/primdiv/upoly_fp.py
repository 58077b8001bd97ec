"""Dense univariate polynomials over F_p as plain int lists, low degree first.

Every function returns normalized lists (no trailing zeros); the zero
polynomial is ``[]``.
"""

from __future__ import annotations

from .errors import DivisionByZero


def strip(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f: list[int]) -> int:
    return len(f) - 1


def add(f, g, p):
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = (out[i] + c) % p
    return strip(out)


def sub(f, g, p):
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % p
    return strip(out)


def scale(f, c, p):
    c %= p
    if not c:
        return []
    return [a * c % p for a in f]


def mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return strip([c % p for c in out])


def monic(f, p):
    if not f:
        return []
    lc = f[-1]
    if lc == 1:
        return list(f)
    return scale(f, pow(lc, -1, p), p)


def divmod_(f, g, p):
    if not g:
        raise DivisionByZero("division by the zero polynomial")
    if len(f) < len(g):
        return [], list(f)
    r = list(f)
    dg = len(g) - 1
    inv = pow(g[-1], -1, p)
    q = [0] * (len(f) - dg)
    for i in range(len(f) - 1, dg - 1, -1):
        c = r[i] % p
        if not c:
            continue
        c = c * inv % p
        q[i - dg] = c
        off = i - dg
        for j in range(dg + 1):
            r[off + j] -= c * g[j]
    return strip(q), strip([c % p for c in r[:dg]])


def rem(f, g, p):
    return divmod_(f, g, p)[1]


def quo(f, g, p):
    return divmod_(f, g, p)[0]


def gcd(f, g, p):
    """Monic gcd; ``gcd([], []) == []``."""
    while g:
        f, g = g, rem(f, g, p)
    return monic(f, p)


def derivative(f, p):
    return strip([i * c % p for i, c in enumerate(f)][1:])


def mulmod(f, g, m, p):
    return rem(mul(f, g, p), m, p)


def powmod(f, e, m, p):
    """``f**e mod m`` by square and multiply."""
    result = [1]
    base = rem(f, m, p)
    while e:
        if e & 1:
            result = mulmod(result, base, m, p)
        e >>= 1
        if e:
            base = mulmod(base, base, m, p)
    return rem(result, m, p) if len(m) > 1 else []


def pth_root(f, p):
    """``g`` with ``g**p == f``, for ``f`` whose exponents are all multiples of ``p``.

    Over a prime field the Frobenius map fixes every coefficient, so the
    root is read off by thinning the exponents.
    """
    if any(c for i, c in enumerate(f) if i % p):
        raise ValueError("not a p-th power")
    return strip(f[::p])


def compose_xp(f, p):
    """``f(x**p)``."""
    if not f:
        return []
    out = [0] * ((len(f) - 1) * p + 1)
    for i, c in enumerate(f):
        out[i * p] = c
    return out


def is_one(f):
    return f == [1]


X = [0, 1]
