"""
Certified searches for the auxiliary polynomials the factorizations need.

* :func:`find_eta` / :func:`find_beta` produce ``eta`` (resp. ``beta``) without
  real roots such that ``delta = x*eta + y**2`` (resp. ``x**2 + y*beta``) is
  positive on the real line and has degree ``2*deg y`` (resp. ``2*deg x``).
* :func:`find_r_one_root` / :func:`find_r_two_roots` produce a rational shear
  ``r`` for which ``r*x + y`` has exactly one (resp. two) distinct real roots.

Candidates follow a fixed halving schedule and each one is accepted only after
an exact Sturm-based check, so every returned certificate is correct no matter
how the schedule behaves.  Certificates carry their inputs and can re-verify
themselves from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionViolated, SearchExhausted
from .polyratq import (
    Poly,
    SignAtRoots,
    X,
    count_real_roots,
    gcd,
    is_gamma,
    is_gamma_plus,
    sign_at_roots,
)

DEFAULT_MAX_STEPS = 256

_X2_PLUS_1 = X * X + 1


@dataclass(frozen=True)
class EtaCert:
    """Witness for ``delta = x*eta + y**2`` (kind ``"eta"``) or
    ``delta = x**2 + y*eta`` (kind ``"beta"``, ``eta`` playing beta)."""

    eta: Poly
    delta: Poly
    scale_steps: int
    x: Poly
    y: Poly
    kind: str = "eta"

    @property
    def beta(self) -> Poly:
        return self.eta

    def verify(self) -> bool:
        x, y, w = self.x, self.y, self.eta
        if self.kind == "eta":
            expected, ref = x * w + y * y, y
        else:
            expected, ref = x * x + y * w, x
        n = ref.degree
        return (
            expected == self.delta
            and is_gamma(w)
            and is_gamma_plus(self.delta)
            and self.delta.degree == 2 * n
            and n - 1 <= w.degree <= n
        )


@dataclass(frozen=True)
class ShearCert:
    """``r*x + y`` has exactly ``root_count`` distinct real roots.

    When ``uniform_sign`` is set, ``x`` also has one and the same sign at all
    of those roots.
    """

    r: Fraction
    root_count: int
    halving_steps: int
    x: Poly
    y: Poly
    uniform_sign: bool = False

    @property
    def sheared(self) -> Poly:
        return self.x * self.r + self.y

    def verify(self) -> bool:
        if not self.r:
            return False
        s = self.sheared
        if s.is_zero() or count_real_roots(s) != self.root_count:
            return False
        if self.uniform_sign:
            return sign_at_roots(self.x, s) in (
                SignAtRoots.UNIFORM_POSITIVE,
                SignAtRoots.UNIFORM_NEGATIVE,
            )
        return True


def _witness_sign(s: SignAtRoots, what: str) -> int:
    if s in (SignAtRoots.UNIFORM_POSITIVE, SignAtRoots.NO_REAL_ROOTS):
        return 1
    if s is SignAtRoots.UNIFORM_NEGATIVE:
        return -1
    raise PreconditionViolated(f"{what} is {s.value}, need a uniform sign")


def _scaled_search(x: Poly, y: Poly, ref: Poly, other: Poly, kind: str, max_steps: int) -> EtaCert:
    if x.is_zero() or y.is_zero():
        raise PreconditionViolated("x and y must be nonzero")
    if x.degree != y.degree:
        raise PreconditionViolated(f"deg x = {x.degree} differs from deg y = {y.degree}")
    n = ref.degree
    if kind == "eta":
        sigma = _witness_sign(sign_at_roots(x, y), "sign of x at the roots of y")
    else:
        sigma = _witness_sign(sign_at_roots(y, x), "sign of y at the roots of x")
    shape = _X2_PLUS_1 ** (n // 2)
    square = ref * ref
    c = Fraction(sigma)
    for step in range(max_steps + 1):
        w = shape * c
        delta = other * w + square
        if delta.degree == 2 * n and is_gamma_plus(delta):
            return EtaCert(w, delta, step, x, y, kind)
        c /= 2
    raise SearchExhausted(f"no {kind} found within {max_steps} halving steps")


def find_eta(x: Poly, y: Poly, max_steps: int = DEFAULT_MAX_STEPS) -> EtaCert:
    """``eta = ±c*(X^2+1)^m`` with ``x*eta + y^2`` positive of degree ``2 deg y``.

    Needs ``deg x == deg y`` and ``x`` of constant sign at the real roots of
    ``y`` (vacuous when ``y`` has none).
    """
    return _scaled_search(x, y, y, x, "eta", max_steps)


def find_beta(x: Poly, y: Poly, max_steps: int = DEFAULT_MAX_STEPS) -> EtaCert:
    """Mirror of :func:`find_eta` for ``x^2 + y*beta``."""
    return _scaled_search(x, y, x, y, "beta", max_steps)


def _shear_checks(x: Poly, y: Poly) -> None:
    if x.is_zero() or y.is_zero():
        raise PreconditionViolated("x and y must be nonzero")
    if y.degree % 2 == 0:
        raise PreconditionViolated(f"deg y = {y.degree} is not odd")
    if x.degree <= y.degree:
        raise PreconditionViolated("need deg x > deg y")
    if count_real_roots(gcd(x, y)):
        raise PreconditionViolated("x and y have a common real root")
    if count_real_roots(y) != 1:
        raise PreconditionViolated("y must have a unique real root")
    s = sign_at_roots(y, x)
    if s is not SignAtRoots.MIXED:
        raise PreconditionViolated(f"sign of y at the roots of x is {s.value}, need Mixed")


def _halving(x: Poly, y: Poly, target: int, uniform: bool, max_steps: int) -> ShearCert:
    sigma = 1 if x.lc * y.lc > 0 else -1
    r = Fraction(sigma)
    for step in range(max_steps + 1):
        cert = ShearCert(r, target, step, x, y, uniform)
        if cert.verify():
            return cert
        r /= 2
    raise SearchExhausted(f"no shear with {target} root(s) within {max_steps} halving steps")


def find_r_one_root(x: Poly, y: Poly, max_steps: int = DEFAULT_MAX_STEPS) -> ShearCert:
    """Rational ``r`` such that ``r*x + y`` has a unique real root.

    Both degrees odd, ``deg x > deg y``, no common roots, ``y`` with a unique
    real root and changing sign across the roots of ``x``.
    """
    if x.degree % 2 == 0:
        raise PreconditionViolated(f"deg x = {x.degree} is not odd")
    _shear_checks(x, y)
    return _halving(x, y, 1, False, max_steps)


def find_r_two_roots(x: Poly, y: Poly, max_steps: int = DEFAULT_MAX_STEPS) -> ShearCert:
    """Rational ``r`` such that ``r*x + y`` has exactly two distinct real roots.

    Same hypotheses as :func:`find_r_one_root` except ``deg x`` is even.  When
    ``x`` at the root of ``y`` has the sign of ``lc(x)``, the certificate also
    guarantees that ``x`` has the same sign at both roots of ``r*x + y``.
    """
    if x.is_zero() or x.degree % 2 == 1:
        raise PreconditionViolated(f"deg x = {x.degree} is not even")
    _shear_checks(x, y)
    s = sign_at_roots(x, y)
    want_uniform = (s is SignAtRoots.UNIFORM_POSITIVE) == (x.lc > 0)
    return _halving(x, y, 2, want_uniform, max_steps)
