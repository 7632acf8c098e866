"""Exact idempotent factorization of row-form 2x2 matrices over the minimal
Dress ring of R(X), with rational data throughout."""

from .dressring import DressElem, deg, is_nonneg, is_nonpos, is_semidefinite, is_unit, make, root_info, weakly_comaximal
from .errors import (
    DressError,
    NoApplicableRule,
    NotInDress,
    NotRowForm,
    NotSingular,
    ParseError,
    PreconditionViolated,
    SearchExhausted,
    UnsupportedIrrationalSharedRoot,
)
from .generate import PROFILES, generate_instance
from .idemfact import (
    FactorizationCert,
    Mat2,
    RuleStep,
    base_r0,
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
from .polyratq import X, Interval, Poly, SignAtRoots, count_real_roots, gcd, isolate_real_roots, sign_at_roots
from .search import EtaCert, ShearCert, find_beta, find_eta, find_r_one_root, find_r_two_roots
from .textio import dumps_cert, loads_cert, parse_elem, parse_poly, parse_row

__version__ = "0.1.0"
