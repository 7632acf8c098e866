import random

import pytest

from _gen import random_elem, random_idempotent
from dressfact.dressring import ONE_ELEM, ZERO_ELEM, DressElem, deg, make
from dressfact.errors import (
    NoApplicableRule,
    NotRowForm,
    NotSingular,
    PreconditionViolated,
    UnsupportedIrrationalSharedRoot,
)
from dressfact.idemfact import (
    IDENTITY,
    ZERO_MAT,
    FactorizationCert,
    Mat2,
    base_r0,
    chain_failure,
    factor,
    factor_even_odd,
    factor_even_odd_common,
    factor_odd_odd,
    factor_semidefinite,
    factor_sign_condition,
    is_idempotent,
    lemma_construction_check,
    peel_tau,
    shear_conjugate,
    swap_conjugate,
    verify_chain,
)
from dressfact.polyratq import ONE, Poly, X
from dressfact.search import find_eta

G = X**2 + 1


def E(num, den=ONE):
    return make(num, den)


# -- matrices and idempotency ---------------------------------------------------


def test_is_idempotent_examples():
    assert is_idempotent(Mat2.of(1, 0, 0, 0))
    assert not is_idempotent(Mat2.of(1, 1, 1, 1))
    assert is_idempotent(IDENTITY) and is_idempotent(ZERO_MAT)
    x, y = X**2 - 4, X**2 - 1
    c = find_eta(x, y)
    d = c.delta
    t = Mat2(E(x * c.eta, d), E(y * c.eta, d), E(x * y, d), E(y * y, d))
    assert t.trace == ONE_ELEM and t.det.is_zero()
    assert t @ t == t and is_idempotent(t)


def test_is_idempotent_agrees_with_squaring():
    rng = random.Random(1)
    for _ in range(150):
        ms = [random_idempotent(rng), Mat2(*(random_elem(rng) for _ in range(4)))]
        for m in ms:
            assert is_idempotent(m) == (m @ m == m)


def test_singular_and_row_form_predicates():
    assert Mat2.row(E(X, G), E(ONE, G)).is_singular()
    assert Mat2.row(E(X, G), 1).is_row_form()
    assert not IDENTITY.is_singular()
    assert not Mat2.of(0, 0, 1, 0).is_row_form()


# -- elementary factorizations and the toolkit --------------------------------------------------------


def test_base_factorization_examples():
    p = E(X, G)
    left = base_r0(p, "left")
    assert left.chain == (Mat2.of(1, -1, 0, 0), Mat2(ONE_ELEM, ZERO_ELEM, 1 - p, ZERO_ELEM))
    assert verify_chain(left) and left.input == Mat2.row(p, 0)
    right = base_r0(5, "right")
    assert right.chain == (Mat2.of(1, 0, 0, 0), Mat2.of(0, 5, 0, 1))
    assert verify_chain(right)
    zero = base_r0(0)
    assert zero.chain == (ZERO_MAT,) and verify_chain(zero)


def test_swap_examples():
    p = E(X, G)
    cert = base_r0(p, "left")
    swapped = swap_conjugate(cert)
    assert swapped.input == Mat2.row(0, p) and verify_chain(swapped)
    back = swap_conjugate(swapped)
    assert back.input == cert.input and back.chain == cert.chain


def test_shear_examples():
    p, q = E(X**2 - 4, G), E(X + 3, G)
    inner = factor(Mat2.row(p, p + q))
    out = shear_conjugate(inner, 1)
    assert out.input == Mat2.row(p, q) and verify_chain(out)
    assert shear_conjugate(inner, 0) is inner
    # any rational r: a chain for [[p, q + r p]] becomes one for [[p, q]]
    for r in (make(Poly.const(-1)), make(Poly.const(2)), E(X, G)):
        inner = factor(Mat2.row(p, q + r * p))
        out = shear_conjugate(inner, r)
        assert out.input == Mat2.row(p, q) and verify_chain(out)


def test_conjugation_preserves_idempotents():
    rng = random.Random(2)
    for _ in range(50):
        t = random_idempotent(rng)
        p = Mat2(t.d, t.c, t.b, t.a)
        r = random_elem(rng)
        s = Mat2(t.a + r * t.c, t.b + r * (t.d - t.a) - r * r * t.c, t.c, t.d - r * t.c)
        assert is_idempotent(p) and is_idempotent(s)


def test_peel_tau_examples():
    x, y, g = X**2 - 4, X**2 - 1, G**2
    left, (a, b) = peel_tau(x, y, g)
    assert verify_chain(left)
    assert left.input == Mat2.row(E(G, g), 0)
    assert deg(a) == 0 and deg(b) == 0
    assert Mat2.row(E(G, g), 0) @ Mat2.row(a, b) == Mat2.row(E(x, g), E(y, g))
    x = X**3 - X
    left, (a, b) = peel_tau(x, X, g)
    assert left.input.a == E(G**2, g)  # tau has degree deg x + 1
    assert deg(a) == -1
    assert Mat2.row(left.input.a, 0) @ Mat2.row(a, b) == Mat2.row(E(x, g), E(X, g))
    with pytest.raises(PreconditionViolated):
        peel_tau(X**4 - 1, X, g)


# -- engines ----------------------------------------------------------------------


def test_sign_condition_examples():
    c = factor_sign_condition(E(X**2 - 4, G), E(X + 3, G))
    assert verify_chain(c)
    c = factor_sign_condition(E(ONE, G), E(X, G))
    assert verify_chain(c)
    with pytest.raises(PreconditionViolated):
        factor_sign_condition(E(X**2 - 1, G), E(X, G))


def test_semidefinite_examples():
    assert verify_chain(factor_semidefinite(E((X - 1) ** 2, G), E(X + 2, G)))
    assert verify_chain(factor_semidefinite(E(-((X - 1) ** 2), G), E(X + 2, G)))
    with pytest.raises(PreconditionViolated):
        factor_semidefinite(E((X - 1) ** 2, G), E(X**2 - 1, G))


def test_odd_odd_examples():
    g = G**2
    c = factor_odd_odd(E(X**3 - 4 * X, g), E(X - 1, g))
    assert verify_chain(c)
    steps = [s for s in c.trace if "root_count" in s.params]
    assert steps and steps[0].params["root_count"] == "1"
    c = factor_odd_odd(E(X * (X**2 - 4), g), E(X**3, g))
    assert verify_chain(c) and "PeelRoot" in c.rules()
    with pytest.raises(PreconditionViolated):
        factor_odd_odd(E(X**3 - X, g), E((X - 3) * (X - 4) * (X - 5), g))


def test_odd_odd_irrational_shared_root():
    # both entries vanish at the cube root of 2, the only real root of q
    g = G**3
    with pytest.raises(UnsupportedIrrationalSharedRoot):
        factor_odd_odd(E((X**3 - 2) * (X**2 - 4), g), E(X**3 - 2, g))


def test_even_odd_examples():
    g = G**2
    c = factor_even_odd(E(X**4 - 5 * X**2 + 4, g), E(X, g))
    assert verify_chain(c)
    steps = [s for s in c.trace if "root_count" in s.params]
    assert steps and steps[0].params["root_count"] == "2"
    c = factor_even_odd(E((X - 1) ** 2 * (X**2 + 2), g), E(X, g))
    assert verify_chain(c) and "Semidefinite" in c.rules()
    with pytest.raises(PreconditionViolated):
        factor_even_odd(E(X**3 - X, g), E(X, g))


def test_even_odd_common_examples():
    g = G**3
    p, q = E(X**2 * (X**2 + 2), g), E(X * (X**2 + X + 1), g)
    assert verify_chain(factor_even_odd_common(p, q))
    # cofactor X^2 + X - 1 is -1 at 0 but has positive leading coefficient
    with pytest.raises(PreconditionViolated):
        factor_even_odd_common(p, E(X * (X**2 + X - 1), g))
    # degree 0 entry: max(deg p, deg q) < 0 fails
    with pytest.raises(PreconditionViolated):
        factor_even_odd_common(E(X**2 * (X**2 + 2), G**2), E(X * (X**2 + X + 1), G**2))


def test_parity_guard_for_odd_odd_inputs():
    rng = random.Random(3)
    for _ in range(100):
        p, q = random_elem(rng, False), random_elem(rng, False)
        if deg(p) % 2 == 1 and deg(q) % 2 == 1:
            assert max(deg(p), deg(q)) <= -1


# -- dispatcher ----------------------------------------------------------------


def test_dispatcher_examples():
    c = factor(Mat2.row(E(X, G), 0))
    assert c.rule == "R0Left" and verify_chain(c)
    c = factor(Mat2.row(E(X**2 - 4, G), E(X + 3, G)))
    assert c.rule == "SignCondition" and verify_chain(c)
    with pytest.raises(NoApplicableRule) as info:
        factor(Mat2.row(E(X**2 - 1, G), E(X, G)))
    for rule in ("UnitEntry", "SignCondition", "Semidefinite", "OddOdd", "EvenOdd", "EvenOddCommon"):
        assert info.value.diagnostics[rule]


def test_dispatcher_structural_rules():
    assert factor(ZERO_MAT).chain == (ZERO_MAT,)
    c = factor(Mat2.row(0, E(X, G)))
    assert c.rule == "R0Right" and verify_chain(c)
    c = factor(Mat2.row(E(X**2 + 2, G), E(X, G)))
    assert c.rule == "UnitEntry" and verify_chain(c)
    c = factor(Mat2.row(E(X, G), E(X**2 + 2, G)))
    assert c.rule == "UnitEntry" and verify_chain(c)


def test_dispatcher_rejects_out_of_scope_matrices():
    with pytest.raises(NotSingular):
        factor(IDENTITY)
    with pytest.raises(NotRowForm):
        factor(Mat2.of(1, 0, 1, 0))


def test_dispatcher_is_deterministic():
    m = Mat2.row(E(X**3 - 4 * X, G**2), E(X - 1, G**2))
    a, b = factor(m), factor(m)
    assert a.chain == b.chain and a.trace == b.trace


# -- verifier ----------------------------------------------------------------------


def test_verifier_rejects_broken_chains():
    c = factor(Mat2.row(E(X**2 - 4, G), E(X + 3, G)))
    assert verify_chain(c)
    i = next(k for k, t in enumerate(c.chain) if t.b != t.c)
    t = c.chain[i]
    transposed = c.chain[:i] + (Mat2(t.a, t.c, t.b, t.d),) + c.chain[i + 1 :]
    assert not verify_chain(FactorizationCert(c.input, transposed, c.trace))
    assert chain_failure(FactorizationCert(c.input, (), ())) is not None
    assert not verify_chain(FactorizationCert(c.input, (), ()))
    bad = FactorizationCert(c.input, c.chain[:-1] + (Mat2.of(1, 1, 1, 1),), c.trace)
    assert chain_failure(bad) == (len(c.chain) - 1, "factor is not idempotent")


def test_verifier_checks_membership():
    x_entry = DressElem(X, ONE)  # bypasses make(): X is not in D
    m = Mat2(ONE_ELEM, x_entry, ZERO_ELEM, ZERO_ELEM)
    assert is_idempotent(m)
    assert chain_failure(FactorizationCert(m, (m,), ())) == (0, "entry outside D")


# -- singular-times-idempotent harness ------------------------------------------------


def test_singular_times_idempotent_examples():
    t = random_idempotent(random.Random(4))
    assert lemma_construction_check(Mat2.row(E(X, G), 1), t)
    s = Mat2.of(0, 0, 1, 1)
    assert lemma_construction_check(s, Mat2.of(1, 0, 0, 0))
    with pytest.raises(PreconditionViolated):
        lemma_construction_check(IDENTITY, t)
