"""
Elements of the minimal Dress ring D of R(X), restricted to rational data.

An element is a reduced fraction ``f/g`` where ``g`` has no real roots and
``deg f <= deg g``.  The canonical form keeps ``g`` monic (hence positive on
the real line) and pushes every constant into the numerator, so two equal
elements are equal field by field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import NotAUnit, NotInDress, ZeroDenominator, ZeroInput
from .polyratq import (
    NEG_INF,
    ONE,
    ZERO,
    Interval,
    Number,
    Poly,
    count_real_roots,
    gcd,
    is_gamma,
    isolate_real_roots,
    lcm,
    squarefree_decompose,
)


@dataclass(frozen=True)
class DressElem:
    """Canonical ``num/den``; build instances with :func:`make`."""

    num: Poly
    den: Poly

    @property
    def deg(self):
        return deg(self)

    @property
    def lc(self) -> Fraction:
        """Leading coefficient of the numerator (the denominator is monic)."""
        return self.num.lc

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __call__(self, t: Number) -> Fraction:
        return self.num(t) / self.den(t)

    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return neg(self)

    def __sub__(self, other):
        return add(self, neg(_coerce(other)))

    def __rsub__(self, other):
        return add(_coerce(other), neg(self))

    def __mul__(self, other):
        if isinstance(other, DressElem):
            return mul(self, other)
        return scalar_mul(other, self)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"DressElem({self})"


def _coerce(v) -> DressElem:
    if isinstance(v, DressElem):
        return v
    return constant(v)


def _normalize(f: Poly, g: Poly) -> DressElem:
    if g.is_zero():
        raise ZeroDenominator("zero denominator")
    if f.is_zero():
        return ZERO_ELEM
    h = gcd(f, g) if g.degree > 0 else ONE
    if h.degree > 0:
        f = f.exact_div(h)
        g = g.exact_div(h)
    c = g.lc
    if c != 1:
        f = f * (1 / c)
        g = g * (1 / c)
    return DressElem(f, g)


def make(f: Poly, g: Poly = ONE) -> DressElem:
    """Reduce ``f/g`` to canonical form and check membership in D.

    Raises :class:`NotInDress` when the reduced denominator has a real root
    or the numerator degree exceeds the denominator degree.
    """
    e = _normalize(f, g)
    if e.den.degree > 0 and not is_gamma(e.den):
        raise NotInDress(
            NotInDress.DENOMINATOR_HAS_REAL_ROOT,
            f"not in D: denominator {e.den} has a real root",
        )
    if e.num.degree > e.den.degree:
        raise NotInDress(
            NotInDress.DEGREE_TOO_LARGE,
            "not in D: degree of numerator exceeds denominator",
        )
    return e


def constant(c: Number) -> DressElem:
    return make(Poly.const(c))


ZERO_ELEM = DressElem(ZERO, ONE)
ONE_ELEM = DressElem(ONE, ONE)


def deg(p: DressElem):
    """D-degree ``deg num - deg den``; ``NEG_INF`` for zero."""
    if p.num.is_zero():
        return NEG_INF
    return p.num.degree - p.den.degree


# Ring operations.  D is closed under them, so only the normalization half of
# make() runs; the denominators are products of monic Gamma polynomials and
# numerator degrees cannot outgrow them.


def add(p: DressElem, q: DressElem) -> DressElem:
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    if p.den == q.den:
        return _normalize(p.num + q.num, p.den)
    g = lcm(p.den, q.den)
    return _normalize(p.num * g.exact_div(p.den) + q.num * g.exact_div(q.den), g)


def neg(p: DressElem) -> DressElem:
    return DressElem(-p.num, p.den)


def sub(p: DressElem, q: DressElem) -> DressElem:
    return add(p, neg(q))


def mul(p: DressElem, q: DressElem) -> DressElem:
    if p.is_zero() or q.is_zero():
        return ZERO_ELEM
    if p == ONE_ELEM:
        return q
    if q == ONE_ELEM:
        return p
    # cancel crosswise first so the gcds stay small
    g1 = gcd(p.num, q.den)
    g2 = gcd(q.num, p.den)
    return _normalize(
        p.num.exact_div(g1) * q.num.exact_div(g2),
        p.den.exact_div(g2) * q.den.exact_div(g1),
    )


def scalar_mul(c: Number, p: DressElem) -> DressElem:
    c = Fraction(c)
    if not c:
        return ZERO_ELEM
    return DressElem(p.num * c, p.den)


def is_unit(p: DressElem) -> bool:
    return bool(p) and deg(p) == 0 and is_gamma(p.num)


def invert(p: DressElem) -> DressElem:
    if not is_unit(p):
        raise NotAUnit(f"{p} is not a unit of D")
    return _normalize(p.den, p.num)


def div(p: DressElem, u: DressElem) -> DressElem:
    """``p / u`` for a unit ``u``."""
    return mul(p, invert(u))


def _odd_parts_rootless(p: DressElem) -> bool:
    _, parts = squarefree_decompose(p.num)
    return all(m % 2 == 0 or is_gamma(part) for part, m in parts)


def is_nonneg(p: DressElem) -> bool:
    """``p(t) >= 0`` for every real ``t``."""
    if p.is_zero():
        raise ZeroInput("semidefiniteness of 0")
    return p.num.lc > 0 and _odd_parts_rootless(p)


def is_nonpos(p: DressElem) -> bool:
    if p.is_zero():
        raise ZeroInput("semidefiniteness of 0")
    return p.num.lc < 0 and _odd_parts_rootless(p)


def is_semidefinite(p: DressElem) -> bool:
    return is_nonneg(p) or is_nonpos(p)


def common_denominator(p: DressElem, q: DressElem) -> tuple[Poly, Poly, Poly]:
    """``(x, y, g)`` with ``p = x/g``, ``q = y/g`` and ``g`` the monic lcm."""
    g = lcm(p.den, q.den)
    return p.num * g.exact_div(p.den), q.num * g.exact_div(q.den), g


def weakly_comaximal(p: DressElem, q: DressElem) -> bool:
    """The numerators over a common denominator share no real root."""
    if p.is_zero() or q.is_zero():
        raise ZeroInput("weak comaximality needs nonzero elements")
    x, y, _ = common_denominator(p, q)
    return is_gamma(gcd(x, y))


@dataclass(frozen=True)
class RootLocation:
    """Where a single real root sits: exactly, or inside an isolating interval."""

    exact: Optional[Fraction]
    interval: Interval
    multiplicity: int

    @property
    def is_rational(self) -> bool:
        return self.exact is not None


@dataclass(frozen=True)
class RootInfo:
    distinct_count: int
    unique_root: Optional[RootLocation] = None


def root_info(p: Union[DressElem, Poly]) -> RootInfo:
    """Distinct real roots of the numerator, with the root itself when unique."""
    num = p.num if isinstance(p, DressElem) else p
    if num.is_zero():
        raise ZeroInput("root info of 0")
    if count_real_roots(num) != 1:
        return RootInfo(count_real_roots(num))
    ((iv, m),) = isolate_real_roots(num)
    return RootInfo(1, RootLocation(iv.lo if iv.is_point else None, iv, m))
