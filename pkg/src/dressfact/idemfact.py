"""
Idempotent factorization of singular row-form matrices ``[[p, q], [0, 0]]``
over the minimal Dress ring.

Every ``factor_*`` engine returns a :class:`FactorizationCert`: an ordered
chain of idempotent matrices whose product is the input, plus a trace of the
rules that produced it and the witnesses they found.  Engines reduce to each
other through three similarity moves:

* swap   -- ``[[p, q]] <-> [[q, p]]`` (costs one extra idempotent factor);
* shear  -- ``[[p, q + r p]] -> [[p, q]]`` by an upper unitriangular conjugator;
* peel   -- ``[[u p', u q']] = [[u, 0]] [[p', q']]`` with ``[[u, 0]]`` expanded
  into two idempotents.

The base case writes ``[[x/g, y/g]] = [[delta/(g eta), 0]] T`` where
``delta = x eta + y^2`` comes from :func:`~dressfact.search.find_eta` and
``T = [[x eta, y eta], [x y, y^2]] / delta`` is idempotent.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Mapping, Optional, Union

from .dressring import (
    ONE_ELEM,
    ZERO_ELEM,
    DressElem,
    common_denominator,
    constant,
    deg,
    div,
    is_semidefinite,
    is_unit,
    make,
    root_info,
    weakly_comaximal,
)
from .errors import (
    NoApplicableRule,
    NotInDress,
    NotRowForm,
    NotSingular,
    PreconditionViolated,
    SearchExhausted,
    UnsupportedIrrationalSharedRoot,
)
from .polyratq import (
    Number,
    Poly,
    SignAtRoots,
    X,
    count_real_roots,
    gcd,
    is_gamma,
    sign_at_roots,
)
from .search import DEFAULT_MAX_STEPS, find_eta, find_r_one_root, find_r_two_roots

Entry = Union[DressElem, Number]


def _e(v: Entry) -> DressElem:
    return v if isinstance(v, DressElem) else constant(v)


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix over D, row-major."""

    a: DressElem
    b: DressElem
    c: DressElem
    d: DressElem

    @classmethod
    def of(cls, a: Entry, b: Entry, c: Entry, d: Entry) -> "Mat2":
        return cls(_e(a), _e(b), _e(c), _e(d))

    @classmethod
    def row(cls, p: Entry, q: Entry) -> "Mat2":
        return cls(_e(p), _e(q), ZERO_ELEM, ZERO_ELEM)

    def entries(self) -> tuple[DressElem, DressElem, DressElem, DressElem]:
        return self.a, self.b, self.c, self.d

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    @property
    def trace(self) -> DressElem:
        return self.a + self.d

    @property
    def det(self) -> DressElem:
        return self.a * self.d - self.b * self.c

    def is_singular(self) -> bool:
        return self.a * self.d == self.b * self.c

    def is_row_form(self) -> bool:
        return self.c.is_zero() and self.d.is_zero()

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries())

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


IDENTITY = Mat2(ONE_ELEM, ZERO_ELEM, ZERO_ELEM, ONE_ELEM)
ZERO_MAT = Mat2(ZERO_ELEM, ZERO_ELEM, ZERO_ELEM, ZERO_ELEM)
# [[1, 1], [0, 0]] turns [[0, 0], [q, p]] into [[q, p], [0, 0]]
SWAP_IDEMPOTENT = Mat2.of(1, 1, 0, 0)


def is_idempotent(m: Mat2) -> bool:
    """Exact test of ``M M = M``.

    By Cayley-Hamilton ``M^2 = tr(M) M - det(M) I``, so ``M^2 = M`` iff
    ``(tr M - 1) M = det(M) I``: either the trace is 1 and the determinant
    vanishes, or ``M`` is scalar, i.e. ``0`` or ``I``.  This avoids squaring
    matrices whose entries have large denominators.
    """
    if m.trace == ONE_ELEM:
        return m.is_singular()
    return m == ZERO_MAT or m == IDENTITY


def product(chain) -> Mat2:
    out = IDENTITY
    for t in chain:
        out = out @ t
    return out


@dataclass(frozen=True)
class RuleStep:
    """One applied rule; ``params`` holds its witnesses in text form."""

    rule: str
    params: Mapping[str, str] = field(default_factory=dict)

    def __str__(self) -> str:
        if not self.params:
            return self.rule
        inner = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.rule}({inner})"


@dataclass(frozen=True)
class FactorizationCert:
    input: Mat2
    chain: tuple[Mat2, ...]
    trace: tuple[RuleStep, ...] = ()
    rule: str = ""  # dispatcher rule that produced the chain, when known

    def product(self) -> Mat2:
        return product(self.chain)

    def rules(self) -> list[str]:
        return [s.rule for s in self.trace]


# -- verification ------------------------------------------------------------


def _in_dress(e: DressElem) -> bool:
    try:
        return make(e.num, e.den) == e
    except NotInDress:
        return False


def chain_failure(cert: FactorizationCert) -> Optional[tuple[int, str]]:
    """First problem found in ``cert`` as ``(index, reason)``, or None.

    Index ``len(chain)`` stands for the product check.
    """
    for i, t in enumerate(cert.chain):
        if not all(_in_dress(e) for e in t.entries()):
            return i, "entry outside D"
        if not is_idempotent(t):
            return i, "factor is not idempotent"
    if not cert.chain:
        return 0, "empty chain"
    if cert.product() != cert.input:
        return len(cert.chain), "product differs from input"
    return None


def verify_chain(cert: FactorizationCert) -> bool:
    """Exact re-check: idempotent factors, entries in D, product equal to input."""
    return chain_failure(cert) is None


def _finish(cert: FactorizationCert) -> FactorizationCert:
    bad = chain_failure(cert)
    if bad is not None:
        raise AssertionError(f"internal error, certificate fails at {bad}: {cert.input}")
    return cert


# -- elementary factorizations and the similarity toolkit -------------------------------------


def base_r0(p: Entry, side: str = "left") -> FactorizationCert:
    """Two-factor chains for ``[[p, 0], [0, 0]]`` (left) or ``[[0, p], [0, 0]]`` (right)."""
    p = _e(p)
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    if p.is_zero():
        return FactorizationCert(ZERO_MAT, (ZERO_MAT,), (RuleStep("ZeroMatrix"),))
    if side == "left":
        chain = (Mat2.of(1, -1, 0, 0), Mat2(ONE_ELEM, ZERO_ELEM, ONE_ELEM - p, ZERO_ELEM))
        return FactorizationCert(Mat2.row(p, 0), chain, (RuleStep("R0Left", {"p": str(p)}),))
    chain = (Mat2.of(1, 0, 0, 0), Mat2(ZERO_ELEM, p, ZERO_ELEM, ONE_ELEM))
    return FactorizationCert(Mat2.row(0, p), chain, (RuleStep("R0Right", {"q": str(p)}),))


def _require_row(cert: FactorizationCert) -> None:
    if not cert.input.is_row_form():
        raise PreconditionViolated("certificate input is not row-form")


def _perm(t: Mat2) -> Mat2:
    return Mat2(t.d, t.c, t.b, t.a)


def swap_conjugate(cert: FactorizationCert) -> FactorizationCert:
    """Chain for ``[[q, p]]`` from a chain for ``[[p, q]]``.

    Conjugating by the permutation matrix gives ``[[0, 0], [q, p]]``; one
    extra idempotent ``[[1, 1], [0, 0]]`` moves it back to row form.  Swapping
    twice returns the original chain.
    """
    _require_row(cert)
    target = Mat2.row(cert.input.b, cert.input.a)
    chain = (SWAP_IDEMPOTENT,) + tuple(_perm(t) for t in cert.chain)
    if len(chain) > 2 and chain[1] == _perm(SWAP_IDEMPOTENT):
        # undo a previous swap when the remaining factors already suffice
        rest = chain[2:]
        if product(rest) == target:
            chain = rest
    return FactorizationCert(target, chain, (RuleStep("Swap"),) + cert.trace)


def shear_conjugate(cert: FactorizationCert, r: Entry) -> FactorizationCert:
    """Chain for ``[[p, q]]`` from a chain for ``[[p, q + r p]]``."""
    _require_row(cert)
    r = _e(r)
    if r.is_zero():
        return cert
    p, q_shift = cert.input.a, cert.input.b
    chain = tuple(
        Mat2(t.a + r * t.c, t.b + r * (t.d - t.a) - r * r * t.c, t.c, t.d - r * t.c)
        for t in cert.chain
    )
    target = Mat2.row(p, q_shift - r * p)
    return FactorizationCert(target, chain, (RuleStep("Shear", {"r": str(r)}),) + cert.trace)


def _prepend_diag(u: DressElem, cert: FactorizationCert, step: RuleStep) -> FactorizationCert:
    left = base_r0(u, "left")
    target = Mat2.row(u * cert.input.a, u * cert.input.b)
    return FactorizationCert(target, left.chain + cert.chain, (step,) + left.trace + cert.trace)


_X2_PLUS_1 = X * X + 1


def peel_tau(x: Poly, y: Poly, g: Poly) -> tuple[FactorizationCert, tuple[DressElem, DressElem]]:
    """Split ``[[x/g, y/g]] = [[tau/g, 0]] [[x/tau, y/tau]]`` with ``tau = (X^2+1)^m``.

    ``2m`` is ``max(deg x, deg y)`` rounded up to even.  Returns the chain for
    the diagonal factor and the residual pair.
    """
    n = max(x.degree, y.degree)
    if n == float("-inf"):
        raise PreconditionViolated("x and y are both zero")
    if n >= g.degree:
        raise PreconditionViolated("peeling needs max(deg x, deg y) < deg gamma")
    tau = _X2_PLUS_1 ** ((n + 1) // 2)
    left = base_r0(make(tau, g), "left")
    step = RuleStep("PeelTau", {"tau": str(tau)})
    left = FactorizationCert(left.input, left.chain, (step,) + left.trace)
    return left, (make(x, tau), make(y, tau))


# -- engines -------------------------------------------------------------


def _nonzero(p: DressElem, q: DressElem) -> None:
    if p.is_zero() or q.is_zero():
        raise PreconditionViolated("both entries must be nonzero")


def _sign_ii(p: DressElem, q: DressElem, max_steps: int) -> FactorizationCert:
    # deg q >= deg p and p has one sign at every real root of q
    if deg(q) > deg(p):
        inner = _sign_ii(p + q, q, max_steps)
        return swap_conjugate(shear_conjugate(swap_conjugate(inner), 1))

    x, y, g = common_denominator(p, q)
    n = x.degree
    peel = None
    if n < g.degree:
        peel, _ = peel_tau(x, y, g)
        g = _X2_PLUS_1 ** ((n + 1) // 2)
    cert = find_eta(x, y, max_steps)
    eta, delta = cert.eta, cert.delta
    if delta.degree != g.degree + eta.degree:
        raise AssertionError("degree bookkeeping broken: delta/(gamma eta) is not a unit")
    u = make(delta, g * eta)
    if not is_unit(u):
        raise AssertionError(f"{u} should be a unit")
    t = Mat2(make(x * eta, delta), make(y * eta, delta), make(x * y, delta), make(y * y, delta))
    step = RuleStep(
        "SignCondition",
        {
            "x": str(x),
            "y": str(y),
            "gamma": str(g),
            "eta": str(eta),
            "delta": str(delta),
            "scale_steps": str(cert.scale_steps),
        },
    )
    left = base_r0(u, "left")
    body = FactorizationCert(Mat2.row(make(x, g), make(y, g)), left.chain + (t,), (step,) + left.trace)
    if peel is not None:
        body = FactorizationCert(
            Mat2.row(p, q), peel.chain + body.chain, peel.trace + body.trace
        )
    return body


def _sign_condition(p: DressElem, q: DressElem, max_steps: int) -> FactorizationCert:
    _nonzero(p, q)
    x, y, _ = common_denominator(p, q)
    reasons = []
    if deg(q) >= deg(p):
        s = sign_at_roots(x, y)
        if s.is_uniform:
            return _sign_ii(p, q, max_steps)
        reasons.append(f"(ii) p at the roots of q is {s.value}")
    else:
        reasons.append("(ii) deg q < deg p")
    if deg(p) >= deg(q):
        s = sign_at_roots(y, x)
        if s.is_uniform:
            return swap_conjugate(_sign_ii(q, p, max_steps))
        reasons.append(f"(i) q at the roots of p is {s.value}")
    else:
        reasons.append("(i) deg p < deg q")
    raise PreconditionViolated("; ".join(reasons))


def factor_sign_condition(p: DressElem, q: DressElem, max_steps: int = DEFAULT_MAX_STEPS) -> FactorizationCert:
    """Factor when one entry has a constant sign at the roots of the other.

    Case (i): ``deg p >= deg q`` and ``q`` has one sign at every real root
    of ``p``.  Case (ii) is the mirror image.  An entry without real roots
    makes the condition vacuous.
    """
    return _finish(_sign_condition(p, q, max_steps))


def _semidefinite(p: DressElem, q: DressElem, max_steps: int) -> FactorizationCert:
    _nonzero(p, q)
    if not weakly_comaximal(p, q):
        raise PreconditionViolated("p and q share a real root")
    if not is_semidefinite(p):
        if is_semidefinite(q):
            return swap_conjugate(_semidefinite(q, p, max_steps))
        raise PreconditionViolated("neither p nor q is semidefinite")
    step = RuleStep("Semidefinite")
    if deg(p) > deg(q):
        inner = _sign_ii(p, p + q, max_steps)
        cert = shear_conjugate(inner, 1)
    else:
        cert = _sign_ii(p, q, max_steps)
    return FactorizationCert(cert.input, cert.chain, (step,) + cert.trace)


def factor_semidefinite(p: DressElem, q: DressElem, max_steps: int = DEFAULT_MAX_STEPS) -> FactorizationCert:
    """Weakly comaximal ``p, q`` with one of them ``>= 0`` or ``<= 0`` everywhere."""
    return _finish(_semidefinite(p, q, max_steps))


def _root_power(f: Poly, z: Fraction) -> int:
    lin = Poly((-z, 1))
    k = 0
    while f:
        quo, rem = divmod(f, lin)
        if rem:
            break
        f, k = quo, k + 1
    return k


def _peel_root(p: DressElem, q: DressElem, z: Fraction, m: int) -> tuple[DressElem, DressElem, DressElem, RuleStep]:
    # [[p, q]] = [[(X-z)^m/delta, 0]] [[p', q']] with deg delta = m or m+1, even
    x, y, g = common_denominator(p, q)
    lin = Poly((-z, 1)) ** m
    delta = _X2_PLUS_1 ** ((m + 1) // 2)
    u = make(lin, delta)
    p2 = make(x.exact_div(lin) * delta, g)
    q2 = make(y.exact_div(lin) * delta, g)
    step = RuleStep("PeelRoot", {"z": str(z), "m": str(m), "delta": str(delta)})
    return u, p2, q2, step


def _odd(p: DressElem) -> bool:
    return not p.is_zero() and deg(p) % 2 == 1


def _even(p: DressElem) -> bool:
    return not p.is_zero() and deg(p) % 2 == 0


def _odd_odd(p: DressElem, q: DressElem, max_steps: int) -> FactorizationCert:
    _nonzero(p, q)
    if not (_odd(p) and _odd(q)):
        raise PreconditionViolated(f"degrees {deg(p)}, {deg(q)} are not both odd")
    info_q = root_info(q)
    if info_q.distinct_count != 1:
        if root_info(p).distinct_count == 1:
            return swap_conjugate(_odd_odd(q, p, max_steps))
        raise PreconditionViolated("neither p nor q has a unique real root")
    step = RuleStep("OddOdd")
    x, y, g = common_denominator(p, q)

    if is_gamma(gcd(x, y)):
        if deg(q) >= deg(p):
            cert = _sign_ii(p, q, max_steps)
        elif sign_at_roots(y, x).is_uniform:
            cert = swap_conjugate(_sign_ii(q, p, max_steps))
        else:
            shear = find_r_one_root(x, y, max_steps)
            cert = shear_conjugate(_sign_ii(p, p * shear.r + q, max_steps), shear.r)
            step = RuleStep(
                "OddOdd",
                {"x": str(x), "y": str(y), "r": str(shear.r), "root_count": "1"},
            )
        return FactorizationCert(cert.input, cert.chain, (step,) + cert.trace)

    z = info_q.unique_root.exact
    if z is None:
        raise UnsupportedIrrationalSharedRoot(
            f"shared root in {info_q.unique_root.interval} is irrational"
        )
    h, k = _root_power(x, z), _root_power(y, z)
    u, p2, q2, peel = _peel_root(p, q, z, min(h, k))
    if h >= k or h % 2 == 1:
        sub = _semidefinite(p2, q2, max_steps)
    else:
        sub = _odd_odd(p2, q2, max_steps)
    cert = _prepend_diag(u, sub, peel)
    return FactorizationCert(cert.input, cert.chain, (step,) + cert.trace)


def factor_odd_odd(p: DressElem, q: DressElem, max_steps: int = DEFAULT_MAX_STEPS) -> FactorizationCert:
    """Both degrees odd and one entry with a unique real root.

    Entries sharing a root are handled when that root is rational.
    """
    return _finish(_odd_odd(p, q, max_steps))


def _even_odd(p: DressElem, q: DressElem, max_steps: int) -> FactorizationCert:
    _nonzero(p, q)
    if not (_even(p) and _odd(q)):
        raise PreconditionViolated(f"need deg p even and deg q odd, got {deg(p)}, {deg(q)}")
    if not weakly_comaximal(p, q):
        raise PreconditionViolated("p and q share a real root")
    if root_info(p).distinct_count == 1:
        # an even-degree numerator with one real root is semidefinite
        cert = _semidefinite(p, q, max_steps)
        return FactorizationCert(cert.input, cert.chain, (RuleStep("EvenOdd"),) + cert.trace)
    if root_info(q).distinct_count != 1:
        raise PreconditionViolated("neither p nor q has a unique real root")
    x, y, _ = common_denominator(p, q)
    s = sign_at_roots(x, y)
    if (s is SignAtRoots.UNIFORM_POSITIVE) != (x.lc > 0):
        raise PreconditionViolated("p at the root of q has the opposite sign of lc(p)")
    step = RuleStep("EvenOdd")
    if deg(q) > deg(p):
        cert = _sign_ii(p, q, max_steps)
    elif sign_at_roots(y, x).is_uniform:
        cert = swap_conjugate(_sign_ii(q, p, max_steps))
    else:
        shear = find_r_two_roots(x, y, max_steps)
        if not shear.uniform_sign:
            raise AssertionError("two-root shear lacks the uniform sign clause")
        cert = shear_conjugate(_sign_ii(p, p * shear.r + q, max_steps), shear.r)
        step = RuleStep(
            "EvenOdd",
            {"x": str(x), "y": str(y), "r": str(shear.r), "root_count": "2"},
        )
    return FactorizationCert(cert.input, cert.chain, (step,) + cert.trace)


def factor_even_odd(p: DressElem, q: DressElem, max_steps: int = DEFAULT_MAX_STEPS) -> FactorizationCert:
    """Weakly comaximal, ``deg p`` even, ``deg q`` odd, and either ``p`` has a
    unique real root or ``q`` has a unique real root ``u`` with ``p(u)`` of the
    sign of ``lc(p)``."""
    return _finish(_even_odd(p, q, max_steps))


def _sgn(c: Fraction) -> int:
    return (c > 0) - (c < 0)


def _even_odd_common(p: DressElem, q: DressElem, max_steps: int) -> FactorizationCert:
    _nonzero(p, q)
    if not (_even(p) and _odd(q)):
        raise PreconditionViolated(f"need deg p even and deg q odd, got {deg(p)}, {deg(q)}")
    if max(deg(p), deg(q)) >= 0:
        raise PreconditionViolated("need max(deg p, deg q) < 0")
    x, y, g = common_denominator(p, q)
    if count_real_roots(gcd(x, y)) == 0:
        raise PreconditionViolated("p and q share no real root")
    info_p, info_q = root_info(p), root_info(q)
    unique = info_p if info_p.distinct_count == 1 else info_q if info_q.distinct_count == 1 else None
    if unique is None:
        raise PreconditionViolated("neither p nor q has a unique real root")
    z = unique.unique_root.exact
    if z is None:
        raise UnsupportedIrrationalSharedRoot(
            f"shared root in {unique.unique_root.interval} is irrational"
        )
    k, h = _root_power(x, z), _root_power(y, z)
    xbar = x.exact_div(Poly((-z, 1)) ** k)
    ybar = y.exact_div(Poly((-z, 1)) ** h)
    case_p = info_p.distinct_count == 1 and _sgn(ybar(z)) == _sgn(ybar.lc)
    case_q = info_q.distinct_count == 1 and _sgn(xbar(z)) == _sgn(xbar.lc)
    if not (case_p or case_q):
        raise PreconditionViolated("sign of the cofactor at the shared root differs from its lc")

    u, p2, q2, peel = _peel_root(p, q, z, min(k, h))
    if is_semidefinite(p2) or is_semidefinite(q2):
        sub = _semidefinite(p2, q2, max_steps)
    elif _even(p2) and _odd(q2):
        sub = _even_odd(p2, q2, max_steps)
    elif _odd(p2) and _even(q2):
        sub = swap_conjugate(_even_odd(q2, p2, max_steps))
    else:
        raise AssertionError("residual pair has unexpected degree parities")
    cert = _prepend_diag(u, sub, peel)
    return FactorizationCert(cert.input, cert.chain, (RuleStep("EvenOddCommon"),) + cert.trace)


def factor_even_odd_common(p: DressElem, q: DressElem, max_steps: int = DEFAULT_MAX_STEPS) -> FactorizationCert:
    """Even/odd pair sharing a rational root ``z``, both of negative degree,
    one of them with ``z`` as its only real root and the other's cofactor
    having at ``z`` the sign of its leading coefficient."""
    return _finish(_even_odd_common(p, q, max_steps))


def _unit_entry(p: DressElem, q: DressElem) -> FactorizationCert:
    if is_unit(p):
        # [[p, q]] = [[p, 0]] [[1, q/p]] and the right factor is idempotent
        t = Mat2(ONE_ELEM, div(q, p), ZERO_ELEM, ZERO_ELEM)
        left = base_r0(p, "left")
        step = RuleStep("UnitEntry", {"unit": str(p)})
        return FactorizationCert(Mat2.row(p, q), left.chain + (t,), (step,) + left.trace)
    if is_unit(q):
        return swap_conjugate(_unit_entry(q, p))
    raise PreconditionViolated("neither entry is a unit")


def _either_orientation(fn) -> Callable[[DressElem, DressElem, int], FactorizationCert]:
    def run(p, q, max_steps):
        if _odd(p) and _even(q):
            return swap_conjugate(fn(q, p, max_steps))
        return fn(p, q, max_steps)

    return run


RULES: tuple[tuple[str, Callable], ...] = (
    ("UnitEntry", lambda p, q, n: _unit_entry(p, q)),
    ("SignCondition", _sign_condition),
    ("Semidefinite", _semidefinite),
    ("OddOdd", _odd_odd),
    ("EvenOdd", _either_orientation(_even_odd)),
    ("EvenOddCommon", _either_orientation(_even_odd_common)),
)


def factor(m: Mat2, max_steps: int = DEFAULT_MAX_STEPS) -> FactorizationCert:
    """Dispatch a row-form matrix to the first rule whose hypotheses hold.

    Raises :class:`NoApplicableRule` with one diagnostic per rule when none
    does; that outcome says nothing about whether a factorization exists.
    """
    if not m.is_singular():
        raise NotSingular(f"{m} is not singular")
    if not m.is_row_form():
        raise NotRowForm(f"{m} does not have a zero second row")
    p, q = m.a, m.b
    if p.is_zero() and q.is_zero():
        return replace(base_r0(ZERO_ELEM), rule="ZeroMatrix")
    if q.is_zero():
        return replace(_finish(base_r0(p, "left")), rule="R0Left")
    if p.is_zero():
        return replace(_finish(base_r0(q, "right")), rule="R0Right")
    diagnostics = {"ZeroMatrix": "matrix is nonzero", "R0": "both entries are nonzero"}
    for name, rule in RULES:
        try:
            return replace(_finish(rule(p, q, max_steps)), rule=name)
        except (PreconditionViolated, SearchExhausted) as exc:
            diagnostics[name] = str(exc)
    raise NoApplicableRule(diagnostics)


def lemma_construction_check(s: Mat2, t: Mat2) -> bool:
    """Check one instance of: singular ``S`` times idempotent ``T`` equal to a
    row-form matrix with both top entries nonzero forces ``S`` to be row-form."""
    if not s.is_singular():
        raise PreconditionViolated("S must be singular")
    if not is_idempotent(t):
        raise PreconditionViolated("T must be idempotent")
    m = s @ t
    hit = m.is_row_form() and not m.a.is_zero() and not m.b.is_zero()
    return not hit or s.is_row_form()
