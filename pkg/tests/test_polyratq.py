import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _gen import gamma_plus, random_poly, rootless_quadratic
from dressfact.errors import BothZero, ZeroInput
from dressfact.polyratq import (
    NEG_INF,
    ONE,
    ZERO,
    Interval,
    Poly,
    SignAtRoots,
    X,
    count_real_roots,
    derivative,
    eval_poly,
    gcd,
    is_gamma,
    is_gamma_plus,
    isolate_real_roots,
    lcm,
    sign_at_roots,
    squarefree_decompose,
    sturm_sequence,
)

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(fractions, max_size=6).map(Poly)


# -- representation ------------------------------------------------------------


def test_trailing_zeros_are_stripped():
    assert Poly([1, 2, 0, 0]).coeffs == (Fraction(1), Fraction(2))
    assert Poly([0, 0]) == ZERO
    assert ZERO.degree == NEG_INF
    assert NEG_INF < -10**9


def test_str_uses_the_text_grammar():
    assert str(Fraction(1, 2) * X**4 - Fraction(1, 2) * X**2 + 3) == "1/2*X^4 - 1/2*X^2 + 3"
    assert str(-X + 1) == "-X + 1"
    assert str(ZERO) == "0"


@given(polys, polys)
def test_ring_axioms(f, g):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) - g == f
    if g:
        q, r = divmod(f, g)
        assert q * g + r == f
        assert r.degree < g.degree


# -- eval / derivative ----------------------------------------------------------


def test_eval_examples():
    assert eval_poly(X**2 - 2, 1) == -1
    assert eval_poly(ZERO, 5) == 0
    assert eval_poly(Fraction(3, 2) * X + Fraction(1, 3), Fraction(2, 3)) == Fraction(4, 3)


def test_derivative_examples():
    assert derivative(X**3, 1) == 3 * X**2
    assert derivative(X**3, 4) == ZERO
    assert derivative(X**2 - 2 * X + 1, 2) == Poly.const(2)
    assert derivative(X**3 + X, 0) == X**3 + X


@given(polys, polys, fractions)
def test_derivative_product_rule(f, g, t):
    lhs = eval_poly(derivative(f * g), t)
    rhs = eval_poly(derivative(f), t) * eval_poly(g, t) + eval_poly(f, t) * eval_poly(derivative(g), t)
    assert lhs == rhs


# -- gcd / squarefree ------------------------------------------------------------


def test_gcd_examples():
    assert gcd(X**2 - 1, X**2 - 2 * X + 1) == X - 1
    assert gcd(X**2 + 1, X**2 + 2) == ONE
    assert gcd(ZERO, 2 * X - 4) == X - 2
    with pytest.raises(BothZero):
        gcd(ZERO, ZERO)


@settings(max_examples=60)
@given(polys, polys, polys)
def test_gcd_divides_and_is_greatest(a, b, c):
    if not c:
        c = ONE
    f, g = a * c, b * c
    if not f and not g:
        return
    h = gcd(f, g)
    assert h.lc == 1
    assert (f % h).is_zero() and (g % h).is_zero()
    assert (h % c.monic()).is_zero() or c.degree == 0
    if f and g:
        assert lcm(f, g) * h == (f * g).monic()


def test_squarefree_examples():
    content, parts = squarefree_decompose(X**3 - X**2)
    assert content == 1 and set(parts) == {(X, 2), (X - 1, 1)}
    assert parts == [(X - 1, 1), (X, 2)]
    assert squarefree_decompose(X**2 + 1) == (1, [(X**2 + 1, 1)])
    # multiplicities increase, so the quadratic comes first
    assert squarefree_decompose(3 * (X - 1) ** 2 * (X**2 + 1)) == (3, [(X**2 + 1, 1), (X - 1, 2)])
    with pytest.raises(ZeroInput):
        squarefree_decompose(ZERO)


@settings(max_examples=60)
@given(st.lists(st.tuples(fractions, st.integers(1, 4)), max_size=4), fractions.filter(bool))
def test_squarefree_round_trip(factors, c):
    f = Poly.const(c)
    for r, m in factors:
        f = f * (X - r) ** m
    content, parts = squarefree_decompose(f)
    g = Poly.const(content)
    for p, m in parts:
        g = g * p**m
        assert p.lc == 1
        assert gcd(p, p.derivative()) == ONE
    assert g == f
    mults = [m for _, m in parts]
    assert mults == sorted(set(mults))
    for i in range(len(parts)):
        for j in range(i):
            assert gcd(parts[i][0], parts[j][0]) == ONE


# -- Sturm machinery --------------------------------------------------------------


def test_sturm_sequence_starts_with_f_and_derivative():
    seq = sturm_sequence(X**3 - 3 * X)
    assert seq[0] == X**3 - 3 * X
    assert seq[1].monic() == X**2 - 1
    assert seq[-1].degree == 0


def test_count_examples():
    assert count_real_roots(X**2 - 2, Interval.half_open(0, 2)) == 1
    assert count_real_roots(X**2 + 1) == 0
    assert count_real_roots(X**3 - 3 * X) == 3
    with pytest.raises(ZeroInput):
        count_real_roots(ZERO)


def test_count_interval_kinds_at_root_endpoints():
    f = (X - 1) * (X - 2) * (X - 3)
    assert count_real_roots(f, Interval.open(1, 3)) == 1
    assert count_real_roots(f, Interval.half_open(1, 3)) == 2
    assert count_real_roots(f, Interval.closed(1, 3)) == 3
    assert count_real_roots(f, Interval.point(2)) == 1
    assert count_real_roots(f, Interval.point(Fraction(5, 2))) == 0


def test_count_ignores_multiplicity():
    assert count_real_roots((X - 1) ** 4 * (X + 2) ** 3) == 2


def test_isolation_examples():
    ivs = isolate_real_roots(X**2 - 2)
    assert [m for _, m in ivs] == [1, 1]
    assert ivs[0][0].hi <= ivs[1][0].lo
    assert isolate_real_roots(X**2 + 1) == []
    ivs = isolate_real_roots(X**3 - 3 * X)
    assert len(ivs) == 3
    assert [iv.is_point for iv, _ in ivs] == [False, True, False]
    for iv, _ in ivs:
        assert count_real_roots(X**3 - 3 * X, iv) == 1


def test_isolation_reports_rational_roots_exactly():
    ivs = isolate_real_roots((2 * X + 1) * (X - 1) ** 2 * (X**2 + 1))
    assert [(iv.is_point, iv.lo, m) for iv, m in ivs] == [(True, Fraction(-1, 2), 1), (True, Fraction(1), 2)]


def test_constructive_root_count_oracle():
    rng = random.Random(3)
    for _ in range(150):
        roots = {Fraction(rng.randint(-30, 30), rng.randint(1, 6)) for _ in range(rng.randint(0, 5))}
        mults = {r: rng.randint(1, 3) for r in roots}
        f = Poly.const(Fraction(rng.choice((-2, 1, 3)), rng.randint(1, 4)))
        for r, m in mults.items():
            f = f * (X - r) ** m
        f = f * gamma_plus(rng, 2 * rng.randint(0, 2))
        assert count_real_roots(f) == len(roots)
        ivs = isolate_real_roots(f)
        assert len(ivs) == len(roots)
        assert sum(count_real_roots(f, iv) for iv, _ in ivs) == len(roots)
        for (iv, m), r in zip(ivs, sorted(roots)):
            assert iv.is_point and iv.lo == r and m == mults[r]


def test_isolating_intervals_are_disjoint_for_irrational_roots():
    f = (X**2 - 2) * (X**2 - 3) * (X**3 - 5)
    ivs = isolate_real_roots(f)
    assert len(ivs) == 5
    for (a, _), (b, _) in zip(ivs, ivs[1:]):
        assert a.hi <= b.lo
    assert sum(count_real_roots(f, iv) for iv, _ in ivs) == 5


# -- sign at roots / Gamma ------------------------------------------------------


def test_sign_at_roots_examples():
    assert sign_at_roots(X + 3, X**2 - 4) is SignAtRoots.UNIFORM_POSITIVE
    assert sign_at_roots(X, X**2 - 4) is SignAtRoots.MIXED
    assert sign_at_roots(X - 2, X**2 - 4) is SignAtRoots.SHARED_ROOT
    assert sign_at_roots(X - 3, X**2 - 4) is SignAtRoots.UNIFORM_NEGATIVE
    assert sign_at_roots(X, X**2 + 1) is SignAtRoots.NO_REAL_ROOTS


def test_sign_at_irrational_roots():
    # roots of X^2 - 2 are +-1.414..., X^2 - 2.1 stays negative on both
    assert sign_at_roots(10 * X**2 - 21, X**2 - 2) is SignAtRoots.UNIFORM_NEGATIVE
    assert sign_at_roots(X**3 - 2, X**2 - 2) is SignAtRoots.MIXED
    assert sign_at_roots(X**2 - 2, (X**2 - 2) * (X - 5)) is SignAtRoots.SHARED_ROOT


@settings(max_examples=60)
@given(polys, polys)
def test_shared_root_iff_gcd_has_real_root(x, y):
    if not x or not y:
        return
    shared = sign_at_roots(y, x) is SignAtRoots.SHARED_ROOT
    assert shared == (count_real_roots(gcd(x, y)) > 0)


def test_gamma_examples():
    assert is_gamma(X**2 + 1) and is_gamma_plus(X**2 + 1)
    assert not is_gamma(X**2 - 1)
    assert is_gamma(-(X**2 + 1)) and not is_gamma_plus(-(X**2 + 1))
    assert not is_gamma(ZERO)
    assert is_gamma(X**4 + 1)
    assert is_gamma(Poly.const(-3))


def test_gamma_has_even_degree():
    rng = random.Random(11)
    for _ in range(200):
        f = random_poly(rng, 6)
        if is_gamma(f):
            assert f.degree % 2 == 0
        g = rootless_quadratic(rng) * random_poly(rng, 2)
        if is_gamma(g):
            assert g.degree % 2 == 0
