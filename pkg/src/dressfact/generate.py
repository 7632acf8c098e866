"""Seeded random instances shaped after the hypotheses of each factorization rule.

Every pair is assembled from chosen rational roots and root-free quadratic
factors, so the facts the rules care about (roots, multiplicities, signs,
shared roots) are known by construction.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable

from .dressring import DressElem, make
from .polyratq import ONE, Poly, X

_GRID = [Fraction(n, d) for d in (1, 2, 3) for n in range(-9, 10)]
_GRID = sorted(set(_GRID))


class UnknownProfile(ValueError):
    pass


def _rat(rng: random.Random, lo: int = -4, hi: int = 4) -> Fraction:
    return Fraction(rng.randint(lo * 3, hi * 3), rng.choice((1, 2, 3)) * 3)


def _nonzero_rat(rng: random.Random) -> Fraction:
    while True:
        c = _rat(rng, -3, 3)
        if c:
            return c


def _quad(rng: random.Random) -> Poly:
    # (X - b)^2 + c^2, monic and positive on R
    b = _rat(rng, -2, 2)
    c = _nonzero_rat(rng)
    return (X - b) ** 2 + c * c


def _gamma(rng: random.Random, degree: int) -> Poly:
    g = ONE
    for _ in range(degree // 2):
        g = g * _quad(rng)
    return g


def _roots(rng: random.Random, n: int, avoid=(), lo=None, hi=None) -> list[Fraction]:
    pool = [t for t in _GRID if t not in avoid]
    if lo is not None:
        pool = [t for t in pool if t > lo]
    if hi is not None:
        pool = [t for t in pool if t < hi]
    return sorted(rng.sample(pool, n))


def _from_roots(roots, mults) -> Poly:
    p = ONE
    for r, m in zip(roots, mults):
        p = p * (X - r) ** m
    return p


def _odd_mult(rng: random.Random) -> int:
    return rng.choice((1, 1, 1, 3))


def _over(rng: random.Random, x: Poly, y: Poly, strict: bool = False) -> tuple[DressElem, DressElem]:
    """Put both numerators over a random Gamma+ denominator of large enough degree."""
    n = max(x.degree, y.degree)
    if strict:
        n += 1
    n += n % 2
    n += 2 * rng.randint(0, 1)
    g = _gamma(rng, n)
    return make(x, g), make(y, g)


def _maybe_swap(rng: random.Random, p, q):
    return (q, p) if rng.random() < 0.5 else (p, q)


def _semidefinite(rng: random.Random):
    k = rng.randint(0, 2)
    a = _roots(rng, k)
    x = _from_roots(a, [rng.choice((2, 2, 4)) for _ in a]) * _gamma(rng, 2 * rng.randint(0, 1))
    x = x * (_nonzero_rat(rng))
    j = rng.randint(0, 3)
    b = _roots(rng, j, avoid=a)
    y = _from_roots(b, [rng.randint(1, 2) for _ in b]) * _gamma(rng, 2 * rng.randint(0, 1))
    y = y * _nonzero_rat(rng)
    return _maybe_swap(rng, *_over(rng, x, y))


def _sign_condition(rng: random.Random):
    k = rng.randint(1, 3)
    a = _roots(rng, k, lo=Fraction(-4), hi=Fraction(4))
    x = _from_roots(a, [rng.randint(1, 2) for _ in a]) * _nonzero_rat(rng)
    j = rng.randint(0, 2)
    side = rng.choice(("left", "right"))
    if side == "left":
        b = _roots(rng, j, hi=a[0])
    else:
        b = _roots(rng, j, lo=a[-1])
    y = _from_roots(b, [rng.randint(1, 2) for _ in b]) * _nonzero_rat(rng)
    if rng.random() < 0.3:
        y = y * _quad(rng)
    while x.degree < y.degree:
        x = x * _quad(rng)
    p, q = _over(rng, x, y)
    # p dominates in degree and q has one sign at the roots of p: case (i)
    return _maybe_swap(rng, p, q)


def _odd_odd(rng: random.Random):
    u = _rat(rng, -2, 2)
    y = (X - u) ** _odd_mult(rng) * _gamma(rng, 2 * rng.randint(0, 1)) * _nonzero_rat(rng)
    k = rng.choice((1, 3, 3, 5))
    a = _roots(rng, k, avoid=(u,))
    if rng.random() < 0.7 and not (a[0] < u < a[-1]):
        # straddle u so q changes sign across the roots of p
        a[0] = _roots(rng, 1, hi=u)[0] if a[0] > u else a[0]
        a[-1] = _roots(rng, 1, lo=u)[0] if a[-1] < u else a[-1]
        a = sorted(set(a))
        if len(a) % 2 == 0:
            a.append(_roots(rng, 1, avoid=[u] + a)[0])
    x = _from_roots(a, [1] * len(a)) * _nonzero_rat(rng)
    if rng.random() < 0.3:
        x = x * _quad(rng)
    return _maybe_swap(rng, *_over(rng, x, y))


def _shared_rational_root(rng: random.Random):
    z = _rat(rng, -2, 2)
    k = _odd_mult(rng)
    y = (X - z) ** k * _gamma(rng, 2 * rng.randint(0, 1)) * _nonzero_rat(rng)
    h = rng.randint(1, 4)
    rest = rng.randint(0, 3)
    if (h + rest) % 2 == 0:
        rest += 1
    a = _roots(rng, rest, avoid=(z,))
    x = (X - z) ** h * _from_roots(a, [1] * rest) * _nonzero_rat(rng)
    return _maybe_swap(rng, *_over(rng, x, y))


def _even_count_above(rng: random.Random, u: Fraction, n: int) -> list[Fraction]:
    # n distinct roots avoiding u with an even number of them above u
    while True:
        a = _roots(rng, n, avoid=(u,))
        if sum(t > u for t in a) % 2 == 0:
            return a


def _even_odd(rng: random.Random):
    if rng.random() < 0.3:
        w = _rat(rng, -2, 2)
        x = (X - w) ** rng.choice((2, 2, 4)) * _gamma(rng, 2 * rng.randint(0, 1)) * _nonzero_rat(rng)
        j = rng.choice((1, 3))
        b = _roots(rng, j, avoid=(w,))
        y = _from_roots(b, [1] * j) * _nonzero_rat(rng)
        return _over(rng, x, y)
    u = _rat(rng, -2, 2)
    y = (X - u) ** _odd_mult(rng) * _gamma(rng, 2 * rng.randint(0, 1)) * _nonzero_rat(rng)
    n = rng.choice((2, 2, 4, 4))
    a = _even_count_above(rng, u, n)
    if rng.random() < 0.7 and all(t > u for t in a):
        a = _even_count_above(rng, u, n)
    x = _from_roots(a, [1] * n) * _nonzero_rat(rng)
    return _over(rng, x, y)


def _even_odd_common(rng: random.Random):
    z = _rat(rng, -2, 2)
    if rng.random() < 0.5:
        # p has z as its only root; ybar has the sign of its lc at z
        k = rng.choice((2, 4))
        x = (X - z) ** k * _gamma(rng, 2 * rng.randint(0, 1)) * _nonzero_rat(rng)
        h = rng.randint(1, 3)
        n = rng.randint(0, 2)
        if (h + n) % 2 == 0:
            n += 1
        b = _even_count_above(rng, z, n)
        y = (X - z) ** h * _from_roots(b, [1] * n) * _nonzero_rat(rng)
    else:
        h = _odd_mult(rng)
        y = (X - z) ** h * _gamma(rng, 2 * rng.randint(0, 1)) * _nonzero_rat(rng)
        k = rng.randint(1, 3)
        n = rng.randint(0, 2)
        if (k + n) % 2 == 1:
            n += 1
        a = _even_count_above(rng, z, n)
        x = (X - z) ** k * _from_roots(a, [1] * n) * _nonzero_rat(rng)
    return _over(rng, x, y, strict=True)


def _example_like(rng: random.Random, index: int):
    g = X * X + 1
    if index == 0:
        return make(X * X - 1, g), make(X, g)
    a, m, b = _roots(rng, 3)
    p = (X - a) * (X - b) * _nonzero_rat(rng)
    q = (X - m) * _nonzero_rat(rng)
    return make(p, g), make(q, g)


PROFILES: dict[str, Callable] = {
    "semidefinite": _semidefinite,
    "sign-condition": _sign_condition,
    "odd-odd": _odd_odd,
    "shared-rational-root": _shared_rational_root,
    "even-odd": _even_odd,
    "even-odd-common": _even_odd_common,
    "example-like": None,
}


def generate_instance(seed: int, profile: str, index: int = 0) -> tuple[DressElem, DressElem]:
    """Deterministic pair ``(p, q)`` for ``profile``; same arguments, same pair."""
    if profile not in PROFILES:
        raise UnknownProfile(f"unknown profile {profile!r}; choose from {', '.join(PROFILES)}")
    rng = random.Random(f"{profile}:{seed}:{index}")
    if profile == "example-like":
        return _example_like(rng, index)
    return PROFILES[profile](rng)
