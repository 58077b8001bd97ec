"""Multivariate gcd, content and primitive part.

The gcd recurses on the lowest-index variable that occurs (Gauss's lemma):
the gcd of the contents times the gcd of the primitive parts, the latter
from a subresultant pseudo-remainder sequence over the coefficient ring.

Before any of that, :func:`certify_coprime` tries to prove the inputs
coprime by specialization: if for every shared variable ``v`` some
specialization of the other variables keeps both ``v``-degrees and gives
coprime univariate images, the gcd has degree 0 in every variable.  A
failed attempt proves nothing and just falls through to the exact route.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import upoly_fp as up
from ._evalfield import image_field
from .errors import BothZero, RingMismatch, ZeroInput
from .mpoly import MPoly

CERTIFY_TRIES = 8
_CERT_SEED = 0x5EED


def certify_coprime(a: MPoly, b: MPoly, tries: int = CERTIFY_TRIES) -> bool:
    """Return True only when ``gcd(a, b)`` is proven to be a unit.

    ``False`` means "not proven", not "not coprime".
    """
    if a.is_zero() or b.is_zero():
        return a.is_unit() or b.is_unit()
    if a.is_unit() or b.is_unit():
        return True
    ring = a.ring
    common = set(a.variables()) & set(b.variables())
    if not common:
        return True
    img = image_field(ring.characteristic)
    rng = random.Random(_CERT_SEED)
    ta, tb = img.image_terms(a), img.image_terms(b)
    if ta is None or tb is None:
        return False
    da, db = a.degrees(), b.degrees()
    for v in sorted(common):
        for _ in range(tries):
            point = [img.random_point(rng) for _ in range(ring.num_vars)]
            fa = _image(img, a, ta, v, point)
            if len(fa) - 1 != da[v]:
                continue
            fb = _image(img, b, tb, v, point)
            if len(fb) - 1 != db[v]:
                continue
            if img.gcd_degree(fa, fb) == 0:
                break
        else:
            return False
    return True


def _image(img, poly: MPoly, terms, var: int, point: list) -> list:
    # The certificate generator is reseeded on every call, so the same
    # points come back whenever a term is tested against several others.
    key = ("uni", img.key, var, tuple(point))
    memo = poly.memo()
    f = memo.get(key)
    if f is None:
        f = memo[key] = img.univariate(terms, var, point)
    return f


def _field_euclid(a: MPoly, b: MPoly, var: int) -> MPoly:
    """Monic gcd of two polynomials that involve only ``var``."""
    ring = a.ring
    ca = a.coefficients_in(var)
    cb = b.coefficients_in(var)
    p = ring.characteristic

    def dense(c):
        n = max(c)
        out = [0] * (n + 1)
        for e, poly in c.items():
            out[e] = poly._t.get(0, 0)
        return out

    fa, fb = dense(ca), dense(cb)
    if p:
        g = up.gcd(fa, fb, p)
    else:
        g = _rational_euclid(fa, fb)
    one = ring.one()
    return MPoly.from_coefficients_in(
        ring, var, {e: one.scale(c) for e, c in enumerate(g) if c}
    )


def _rational_euclid(f: list, g: list) -> list:
    f = [Fraction(c) for c in f]
    g = [Fraction(c) for c in g]
    while g and g[-1] == 0:
        g.pop()
    while g:
        r = list(f)
        dg = len(g) - 1
        lead = g[-1]
        for i in range(len(r) - 1, dg - 1, -1):
            c = r[i]
            if c:
                c /= lead
                off = i - dg
                for j in range(dg + 1):
                    r[off + j] -= c * g[j]
        r = r[:dg]
        while r and r[-1] == 0:
            r.pop()
        f, g = g, r
    lead = f[-1]
    return [c / lead for c in f]


def _content_in(a: MPoly, var: int) -> MPoly:
    coeffs = sorted(a.coefficients_in(var).values(), key=len)
    g = coeffs[0]
    for c in coeffs[1:]:
        if g.is_unit():
            break
        g = _gcd(g, c)
    return g.canonical()


def mp_content_primpart(a: MPoly, main_var: int) -> tuple[MPoly, MPoly]:
    """Split ``a`` as content times primitive part with respect to ``main_var``.

    The primitive part is returned in canonical (monic) form and the
    content carries whatever unit is left, so ``content * primpart == a``.
    """
    if a.is_zero():
        raise ZeroInput("content of the zero polynomial")
    if not 0 <= main_var < a.ring.num_vars:
        raise ValueError(f"main variable {main_var} out of range")
    c = _content_in(a, main_var)
    pp = a.exact_div(c).canonical()
    return a.exact_div(pp), pp


# Subresultant PRS over D[var], D = K[other variables].  Polynomials in var
# are dense lists of MPoly coefficients, low degree first.


def _dense_in(a: MPoly, var: int) -> list[MPoly]:
    c = a.coefficients_in(var)
    zero = a.ring.zero()
    return [c.get(e, zero) for e in range(max(c) + 1)]


def _strip(f: list[MPoly]) -> list[MPoly]:
    while f and f[-1].is_zero():
        f.pop()
    return f


def _prem(A: list[MPoly], B: list[MPoly]) -> list[MPoly]:
    """``lc(B)**(deg A - deg B + 1) * A mod B``."""
    R = list(A)
    n = len(B) - 1
    lcB = B[-1]
    e = len(A) - len(B) + 1
    while len(R) - 1 >= n and R:
        lead = R[-1]
        shift = len(R) - 1 - n
        R = [r * lcB for r in R]
        for j in range(n + 1):
            R[shift + j] = R[shift + j] - lead * B[j]
        R.pop()
        _strip(R)
        e -= 1
    if e > 0 and R:
        f = lcB**e
        R = [r * f for r in R]
    return R


def _subresultant_gcd(pa: MPoly, pb: MPoly, var: int) -> MPoly:
    """Gcd of two polynomials primitive with respect to ``var``."""
    ring = pa.ring
    A, B = _dense_in(pa, var), _dense_in(pb, var)
    if len(A) < len(B):
        A, B = B, A
    g = h = ring.one()
    while True:
        delta = len(A) - len(B)
        R = _prem(A, B)
        if not R:
            break
        if len(R) == 1:
            return ring.one()
        A = B
        div = g * h**delta
        B = [r.exact_div(div) for r in R]
        g = A[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = (g**delta).exact_div(h ** (delta - 1))
    last = MPoly.from_coefficients_in(ring, var, {e: c for e, c in enumerate(B) if not c.is_zero()})
    return mp_content_primpart(last, var)[1]


def _gcd(a: MPoly, b: MPoly) -> MPoly:
    """Gcd of two nonzero polynomials, up to a unit."""
    ring = a.ring
    if a.is_constant() or b.is_constant():
        return ring.one()
    if certify_coprime(a, b):
        return ring.one()
    small, big = (a, b) if len(a) <= len(b) else (b, a)
    if all(x <= y for x, y in zip(small.degrees(), big.degrees())):
        if big.try_div(small) is not None:
            return small
    va, vb = set(a.variables()), set(b.variables())
    var = min(va | vb)
    if var not in va:
        return _gcd_with_coefficients(a, b, var)
    if var not in vb:
        return _gcd_with_coefficients(b, a, var)
    ca, cb = _content_in(a, var), _content_in(b, var)
    pa, pb = a.exact_div(ca), b.exact_div(cb)
    c = _gcd(ca, cb)
    if set(pa.variables()) | set(pb.variables()) == {var}:
        g = _field_euclid(pa, pb, var)
    else:
        g = _subresultant_gcd(pa, pb, var)
    return c * g


def _gcd_with_coefficients(a: MPoly, b: MPoly, var: int) -> MPoly:
    """Gcd when ``var`` occurs in ``b`` but not in ``a``."""
    g = a
    for c in sorted(b.coefficients_in(var).values(), key=len):
        g = _gcd(g, c)
        if g.is_constant():
            break
    return g


def mp_gcd(a: MPoly, b: MPoly) -> MPoly:
    """Canonical (monic) greatest common divisor."""
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    if a.is_zero():
        return b.canonical()
    if b.is_zero():
        return a.canonical()
    return _gcd(a, b).canonical()


def is_coprime(a: MPoly, b: MPoly) -> bool:
    return mp_gcd(a, b).is_unit()


def gcd_with_known_divisor(a: MPoly, b: MPoly, d: MPoly) -> MPoly | None:
    """``gcd(a, b)`` computed through a claimed common divisor ``d``.

    Uses ``gcd(d*u, d*v) = d * gcd(u, v)``; returns ``None`` when ``d`` does
    not divide both inputs, which already rules out ``gcd(a, b) ~ d``.
    """
    u = a.try_div(d)
    if u is None:
        return None
    v = b.try_div(d)
    if v is None:
        return None
    if u.is_zero() or v.is_zero():
        return mp_gcd(a, b)
    return (d * _gcd(u, v)).canonical()


__all__ = [
    "certify_coprime",
    "gcd_with_known_divisor",
    "is_coprime",
    "mp_content_primpart",
    "mp_gcd",
]
