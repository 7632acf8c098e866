"""
Exact univariate polynomials over the rationals.

Besides ring arithmetic this module carries the real-root machinery used by
everything above it: Sturm sequences for exact root counting, isolation of
real roots by bisection, sign determination of one polynomial at the real
roots of another, and membership in

* ``Gamma``  -- nonzero polynomials without real roots;
* ``Gamma+`` -- polynomials that are positive on the whole real line.

No floating point is used anywhere.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence, Union

from .errors import BothZero, ZeroInput

Rational = Fraction
Number = Union[int, Fraction]

NEG_INF = float("-inf")


def _q(c: Number) -> Fraction:
    return c if type(c) is Fraction else Fraction(c)


def _sign(c: Fraction) -> int:
    return (c > 0) - (c < 0)


@dataclass(frozen=True)
class Poly:
    """Dense polynomial, ``coeffs[i]`` is the coefficient of ``X**i``.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = [_q(c) for c in self.coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def _raw(cls, cs: list) -> "Poly":
        # cs must already hold Fractions; only trailing zeros are stripped
        while cs and not cs[-1]:
            cs.pop()
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", tuple(cs))
        return p

    @classmethod
    def const(cls, c: Number) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "Poly":
        return cls((0,) * k + (c,))

    @classmethod
    def from_roots(cls, roots: Iterable[Number], c: Number = 1) -> "Poly":
        """``c * prod(X - r)`` over the given roots (repeats allowed)."""
        p = cls.const(c)
        for r in roots:
            p = p * cls((-_q(r), 1))
        return p

    # -- basic accessors ---------------------------------------------------

    @property
    def degree(self):
        """Degree as an int, ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, t: Number) -> Fraction:
        return eval_poly(self, t)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] += c
        return Poly._raw(cs)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _q(other)
            return Poly._raw([c * a for a in self.coeffs]) if c else Poly()
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        cs = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    cs[i + j] += ai * bj
        return Poly._raw(cs)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result, base = Poly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = len(other.coeffs) - 1
        inv = 1 / other.lc
        if len(r) - 1 < db:
            return Poly(), self
        q = [Fraction(0)] * (len(r) - db)
        b = other.coeffs
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k] * inv
            q[k - db] = c
            if c:
                for j in range(db + 1):
                    r[k - db + j] -= c * b[j]
        return Poly._raw(q), Poly._raw(r[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        """Quotient of a division known to be exact; raises otherwise."""
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self * (1 / self.lc)

    def derivative(self, j: int = 1) -> "Poly":
        return derivative(self, j)

    def compose_shift(self, a: Number) -> "Poly":
        """``f(X + a)``."""
        out = Poly()
        lin = Poly((_q(a), 1))
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def primitive_integer(self) -> "Poly":
        """Positive multiple with coprime integer coefficients and lc > 0."""
        if not self.coeffs:
            return self
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for n in ints:
            g = math.gcd(g, n)
        s = 1 if ints[-1] > 0 else -1
        return Poly._raw([Fraction(s * n // g) for n in ints])

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            neg = c < 0
            a = -c if neg else c
            if k == 0:
                body = str(a)
            else:
                mono = "X" if k == 1 else f"X^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"

    # -- cached root data --------------------------------------------------

    @cached_property
    def squarefree_part(self) -> "Poly":
        """Monic product of the distinct irreducible factors."""
        if self.is_constant():
            return Poly.const(1) if self.coeffs else self
        return self.exact_div(gcd(self, self.derivative())).monic()

    @cached_property
    def sturm(self) -> tuple[tuple[int, ...], ...]:
        """Sturm sequence of the squarefree part, as integer coefficient lists."""
        return _int_sturm(self.squarefree_part)


X = Poly.x()
ONE = Poly.const(1)
ZERO = Poly()


def eval_poly(f: Poly, t: Number) -> Fraction:
    t = _q(t)
    acc = Fraction(0)
    for c in reversed(f.coeffs):
        acc = acc * t + c
    return acc


def derivative(f: Poly, j: int = 1) -> Poly:
    if j < 0:
        raise ValueError("derivative order must be nonnegative")
    cs = list(f.coeffs)
    for _ in range(j):
        cs = [i * c for i, c in enumerate(cs)][1:]
    return Poly._raw(cs)


def _int_content_free(cs: list[int]) -> list[int]:
    g = 0
    for c in cs:
        g = math.gcd(g, c)
    return [c // g for c in cs] if g > 1 else cs


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    # pseudo-remainder of a by b over Z, little-endian, no trailing zeros
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [c * lb for c in a]
        for j, bj in enumerate(b):
            a[shift + j] -= la * bj
        a.pop()
        while a and not a[-1]:
            a.pop()
    return a


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; ``gcd(0, g)`` is ``g`` made monic.

    Runs a primitive remainder sequence over the integers, which keeps the
    coefficient growth of plain Euclid over Q in check.
    """
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    if f.is_zero() or g.is_zero():
        return (f or g).monic()
    if f.degree == 0 or g.degree == 0:
        return ONE
    a = [int(c) for c in f.primitive_integer().coeffs]
    b = [int(c) for c in g.primitive_integer().coeffs]
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_prem(a, b)
        a, b = b, _int_content_free(r) if r else r
    return Poly._raw([Fraction(c) for c in a]).monic()


def lcm(f: Poly, g: Poly) -> Poly:
    if f.is_zero() or g.is_zero():
        return ZERO
    return (f * g).exact_div(gcd(f, g)).monic()


def squarefree_decompose(f: Poly) -> tuple[Fraction, list[tuple[Poly, int]]]:
    """Yun's algorithm.

    Returns ``(content, parts)`` with ``f == content * prod(p**m)``, every
    part monic and squarefree, parts pairwise coprime, multiplicities
    strictly increasing.
    """
    if f.is_zero():
        raise ZeroInput("squarefree decomposition of 0")
    content = f.lc
    f = f.monic()
    parts: list[tuple[Poly, int]] = []
    if f.degree == 0:
        return content, parts
    df = f.derivative()
    a0 = gcd(f, df)
    b = f.exact_div(a0)
    c = df.exact_div(a0)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = gcd(b, d)
        if a.degree > 0:
            parts.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return content, parts


# -- Sturm machinery --------------------------------------------------------


def _int_coeffs(f: Poly) -> list[int]:
    return [int(c) for c in f.primitive_integer().coeffs]


def _int_sturm(f: Poly) -> tuple[tuple[int, ...], ...]:
    # Sturm sequence with every term rescaled by a positive rational so the
    # coefficients stay primitive integers
    a = _int_coeffs(f)
    b = _int_coeffs(f.derivative()) if len(a) > 1 else []
    seq = [a]
    while b:
        seq.append(b)
        # dividing by a positive-leading copy of b keeps every scaling
        # factor of the pseudo-remainder positive
        r = _int_prem(a, b if b[-1] > 0 else [-c for c in b])
        if not r:
            break
        r = [-c for c in _int_content_free(r)]
        a, b = b, r
    return tuple(tuple(t) for t in seq)


def sturm_sequence(f: Poly) -> tuple[Poly, ...]:
    """Signed remainder sequence ``f, f', -rem, ...``.

    Each term is scaled by a positive constant to keep coefficients small;
    signs, and therefore variation counts, are unaffected.
    """
    if f.is_zero():
        raise ZeroInput("Sturm sequence of 0")
    s = 1 if f.lc > 0 else -1
    return tuple(Poly._raw([Fraction(s * c) for c in t]) for t in _int_sturm(f * s))


def _variations(signs: Iterable[int]) -> int:
    n, prev = 0, 0
    for s in signs:
        if s:
            if prev and s != prev:
                n += 1
            prev = s
    return n


def _int_sign_at(cs: Sequence[int], num: int, den: int) -> int:
    # sign of den^deg * f(num/den) with den > 0, all in integers
    acc, dpow = 0, 1
    for c in reversed(cs):
        acc = acc * num + c * dpow
        dpow *= den
    return (acc > 0) - (acc < 0)


def _var_at(seq, t: Fraction) -> int:
    n, d = t.numerator, t.denominator
    return _variations(_int_sign_at(p, n, d) for p in seq)


def _var_pos_inf(seq) -> int:
    return _variations((p[-1] > 0) - (p[-1] < 0) for p in seq)


def _var_neg_inf(seq) -> int:
    return _variations(((p[-1] > 0) - (p[-1] < 0)) * (-1) ** (len(p) - 1) for p in seq)


class IntervalKind(str, enum.Enum):
    OPEN = "open"  # (lo, hi)
    HALF_OPEN = "half-open"  # (lo, hi]
    CLOSED = "closed"  # [lo, hi], lo == hi allowed (exact point)
    WHOLE_LINE = "whole-line"


@dataclass(frozen=True)
class Interval:
    lo: Optional[Fraction]
    hi: Optional[Fraction]
    kind: IntervalKind

    def __post_init__(self):
        if self.kind is IntervalKind.WHOLE_LINE:
            return
        object.__setattr__(self, "lo", _q(self.lo))
        object.__setattr__(self, "hi", _q(self.hi))
        if self.lo > self.hi or (self.lo == self.hi and self.kind is not IntervalKind.CLOSED):
            raise ValueError(f"empty interval {self.lo}, {self.hi}")

    @classmethod
    def open(cls, lo: Number, hi: Number) -> "Interval":
        return cls(lo, hi, IntervalKind.OPEN)

    @classmethod
    def half_open(cls, lo: Number, hi: Number) -> "Interval":
        return cls(lo, hi, IntervalKind.HALF_OPEN)

    @classmethod
    def closed(cls, lo: Number, hi: Number) -> "Interval":
        return cls(lo, hi, IntervalKind.CLOSED)

    @classmethod
    def point(cls, t: Number) -> "Interval":
        return cls(t, t, IntervalKind.CLOSED)

    @classmethod
    def whole_line(cls) -> "Interval":
        return cls(None, None, IntervalKind.WHOLE_LINE)

    @property
    def is_point(self) -> bool:
        return self.kind is IntervalKind.CLOSED and self.lo == self.hi

    def contains(self, t: Number) -> bool:
        t = _q(t)
        k = self.kind
        if k is IntervalKind.WHOLE_LINE:
            return True
        if k is IntervalKind.OPEN:
            return self.lo < t < self.hi
        if k is IntervalKind.HALF_OPEN:
            return self.lo < t <= self.hi
        return self.lo <= t <= self.hi

    def __str__(self) -> str:
        k = self.kind
        if k is IntervalKind.WHOLE_LINE:
            return "(-oo, oo)"
        if self.is_point:
            return f"{{{self.lo}}}"
        left = "[" if k is IntervalKind.CLOSED else "("
        right = ")" if k is IntervalKind.OPEN else "]"
        return f"{left}{self.lo}, {self.hi}{right}"


WHOLE_LINE = Interval.whole_line()


def _count_half_open(f: Poly, a: Fraction, b: Fraction) -> int:
    # distinct roots in (a, b]; valid even when a or b is a root since the
    # sequence is built from the squarefree part
    seq = f.sturm
    return _var_at(seq, a) - _var_at(seq, b)


def count_real_roots(f: Poly, interval: Interval = WHOLE_LINE) -> int:
    """Number of distinct real roots of ``f`` in ``interval`` (exact)."""
    if f.is_zero():
        raise ZeroInput("root count of the zero polynomial")
    if f.degree == 0:
        return 0
    kind = interval.kind
    if kind is IntervalKind.WHOLE_LINE:
        return _var_neg_inf(f.sturm) - _var_pos_inf(f.sturm)
    a, b = interval.lo, interval.hi
    if a == b:
        return int(eval_poly(f, a) == 0)
    n = _count_half_open(f, a, b)
    if kind is IntervalKind.OPEN:
        n -= eval_poly(f, b) == 0
    elif kind is IntervalKind.CLOSED:
        n += eval_poly(f, a) == 0
    return n


def cauchy_bound(f: Poly) -> Fraction:
    """Strict upper bound on the absolute value of every complex root."""
    lc = abs(f.lc)
    return 1 + max((abs(c) / lc for c in f.coeffs[:-1]), default=Fraction(0))


def _denominator_bound(g: Poly) -> int:
    # any rational root of g has a denominator dividing this integer
    return int(g.primitive_integer().lc)


def _refine_to_rational(g: Poly, a: Fraction, b: Fraction):
    """Exact root of squarefree ``g`` in ``(a, b)`` if it is rational.

    ``g`` must have exactly one root in the open interval.  Returns the
    Fraction, or the original endpoints when the root is irrational.
    """
    a0, b0 = a, b
    L = _denominator_bound(g)
    while (b - a) * L >= 1:
        m = (a + b) / 2
        if eval_poly(g, m) == 0:
            return m
        if count_real_roots(g, Interval.open(a, m)) == 1:
            b = m
        else:
            a = m
    lo_k = math.floor(a * L) + 1
    hi_k = math.ceil(b * L) - 1
    for k in range(lo_k, hi_k + 1):
        t = Fraction(k, L)
        if eval_poly(g, t) == 0:
            return t
    return a0, b0


def isolate_real_roots(f: Poly) -> list[tuple[Interval, int]]:
    """Isolating intervals of the distinct real roots, sorted left to right.

    Each entry pairs an interval holding exactly one root with the root's
    multiplicity in ``f``.  Rational roots are always returned as exact
    points; irrational ones get an open interval with rational endpoints.
    """
    if f.is_zero():
        raise ZeroInput("root isolation of the zero polynomial")
    g = f.squarefree_part
    if g.degree <= 0:
        return []
    B = cauchy_bound(g)
    found: list[tuple[Fraction, Fraction]] = []
    stack = [(-B, B)]
    while stack:
        a, b = stack.pop()
        n = count_real_roots(g, Interval.open(a, b))
        if n == 0:
            continue
        if n == 1:
            found.append((a, b))
            continue
        m = (a + b) / 2
        if eval_poly(g, m) == 0:
            found.append((m, m))
        stack.append((m, b))
        stack.append((a, m))
    found.sort()

    _, parts = squarefree_decompose(f)
    out = []
    for a, b in found:
        if a == b:
            loc = a
        else:
            loc = _refine_to_rational(g, a, b)
        if isinstance(loc, Fraction):
            iv = Interval.point(loc)
        else:
            iv = Interval.open(*loc)
        mult = next(m for p, m in parts if count_real_roots(p, iv) == 1)
        out.append((iv, mult))
    return out


class SignAtRoots(str, enum.Enum):
    UNIFORM_POSITIVE = "UniformPositive"
    UNIFORM_NEGATIVE = "UniformNegative"
    MIXED = "Mixed"
    SHARED_ROOT = "SharedRoot"
    NO_REAL_ROOTS = "NoRealRoots"

    @property
    def is_uniform(self) -> bool:
        """True for the outcomes a sign condition accepts (vacuous included)."""
        return self in (
            SignAtRoots.UNIFORM_POSITIVE,
            SignAtRoots.UNIFORM_NEGATIVE,
            SignAtRoots.NO_REAL_ROOTS,
        )


def sign_at_root(y: Poly, x: Poly, iv: Interval) -> int:
    """Sign of ``y`` at the unique root of ``x`` inside ``iv``.

    Returns 0 when the root is also a root of ``y``.
    """
    if iv.is_point:
        return _sign(eval_poly(y, iv.lo))
    if count_real_roots(gcd(x, y), iv):
        return 0
    g = x.squarefree_part
    a, b = iv.lo, iv.hi
    while True:
        if count_real_roots(y, Interval.closed(a, b)) == 0:
            return _sign(eval_poly(y, (a + b) / 2))
        m = (a + b) / 2
        if eval_poly(g, m) == 0:
            return _sign(eval_poly(y, m))
        if count_real_roots(g, Interval.open(a, m)) == 1:
            b = m
        else:
            a = m


def sign_at_roots(y: Poly, x: Poly) -> SignAtRoots:
    """Classify the sign of ``y`` at every distinct real root of ``x``."""
    if x.is_zero() or y.is_zero():
        raise ZeroInput("sign_at_roots needs nonzero polynomials")
    if count_real_roots(x) == 0:
        return SignAtRoots.NO_REAL_ROOTS
    if count_real_roots(gcd(x, y)) > 0:
        return SignAtRoots.SHARED_ROOT
    signs = {sign_at_root(y, x, iv) for iv, _ in isolate_real_roots(x)}
    if signs == {1}:
        return SignAtRoots.UNIFORM_POSITIVE
    if signs == {-1}:
        return SignAtRoots.UNIFORM_NEGATIVE
    return SignAtRoots.MIXED


def is_gamma(f: Poly) -> bool:
    """Nonzero and without real roots."""
    return bool(f) and count_real_roots(f) == 0


def is_gamma_plus(f: Poly) -> bool:
    """Positive on the whole real line."""
    return is_gamma(f) and f.lc > 0
