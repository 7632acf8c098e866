"""Random test data shared by the test modules (independent of dressfact.generate)."""

from __future__ import annotations

import random
from fractions import Fraction

from dressfact.dressring import DressElem, make
from dressfact.idemfact import Mat2
from dressfact.polyratq import ONE, Poly, X


def rat(rng: random.Random, span: int = 5) -> Fraction:
    return Fraction(rng.randint(-span * 4, span * 4), rng.choice((1, 2, 3, 4)))


def nonzero_rat(rng: random.Random, span: int = 5) -> Fraction:
    while True:
        c = rat(rng, span)
        if c:
            return c


def rootless_quadratic(rng: random.Random) -> Poly:
    b, c = rat(rng, 3), nonzero_rat(rng, 3)
    return (X - b) ** 2 + c * c


def gamma_plus(rng: random.Random, degree: int) -> Poly:
    g = ONE
    for _ in range(degree // 2):
        g = g * rootless_quadratic(rng)
    return g


def random_poly(rng: random.Random, max_degree: int = 4) -> Poly:
    return Poly([rat(rng, 3) for _ in range(rng.randint(0, max_degree) + 1)])


def random_elem(rng: random.Random, allow_zero: bool = True) -> DressElem:
    """Numerator with random rational roots, denominator a random Gamma+ product."""
    while True:
        k = rng.randint(0, 3)
        num = Poly.const(nonzero_rat(rng, 3))
        for _ in range(k):
            num = num * (X - rat(rng, 3))
        if rng.random() < 0.3:
            num = num * rootless_quadratic(rng)
        if rng.random() < 0.15:
            num = Poly.const(0) if allow_zero else num
        dd = num.degree if num else 0
        g = gamma_plus(rng, dd + dd % 2 + 2 * rng.randint(0, 1))
        if not allow_zero and not num:
            continue
        return make(num, g)


def random_unit(rng: random.Random) -> DressElem:
    d = 2 * rng.randint(0, 1)
    return make(gamma_plus(rng, d) * nonzero_rat(rng), gamma_plus(rng, d))


def random_idempotent(rng: random.Random) -> Mat2:
    """Rank-one idempotent ``col * row`` with ``row . col = 1``.

    ``col = (s, t)`` with ``s`` a unit, so ``u = (1 - t v) / s`` stays in D.
    """
    s, t, v = random_unit(rng), random_elem(rng), random_elem(rng)
    u = (1 - t * v) * make(s.den, s.num)
    m = Mat2(s * u, s * v, t * u, t * v)
    return Mat2(m.d, m.c, m.b, m.a) if rng.random() < 0.5 else m


def random_singular(rng: random.Random) -> Mat2:
    """Nonzero rank-one matrix ``col * row``; trace 1 in about half the cases."""
    if rng.random() < 0.5:
        return random_idempotent(rng)
    while True:
        s, t = random_elem(rng), random_elem(rng)
        u, v = random_elem(rng), random_elem(rng)
        m = Mat2(s * u, s * v, t * u, t * v)
        if not m.is_zero():
            return m
