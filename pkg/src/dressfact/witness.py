"""Rebuild the search witnesses recorded in a certificate trace and re-check them.

A trace stores witnesses as text.  These helpers parse them back into
:class:`~dressfact.search.EtaCert` / :class:`~dressfact.search.ShearCert`
objects so a serialized certificate can be audited without re-running the
searches.
"""

from __future__ import annotations

from .errors import DressError
from .idemfact import FactorizationCert, RuleStep
from .search import EtaCert, ShearCert
from .textio import parse_poly, parse_rational


def eta_cert_of(step: RuleStep) -> EtaCert:
    p = step.params
    return EtaCert(
        parse_poly(p["eta"]),
        parse_poly(p["delta"]),
        int(p.get("scale_steps", "0")),
        parse_poly(p["x"]),
        parse_poly(p["y"]),
    )


def shear_cert_of(step: RuleStep) -> ShearCert:
    p = step.params
    count = int(p["root_count"])
    return ShearCert(
        parse_rational(p["r"]),
        count,
        0,
        parse_poly(p["x"]),
        parse_poly(p["y"]),
        uniform_sign=count == 2,
    )


def witness_certs(cert: FactorizationCert) -> list[tuple[int, object]]:
    """``(trace index, witness)`` for every step that records one."""
    out = []
    for i, step in enumerate(cert.trace):
        if step.rule == "SignCondition":
            out.append((i, eta_cert_of(step)))
        elif "root_count" in step.params:
            out.append((i, shear_cert_of(step)))
    return out


def witness_failures(cert: FactorizationCert) -> list[str]:
    """Human-readable problems with the trace witnesses; empty when all re-verify."""
    bad = []
    try:
        found = witness_certs(cert)
    except (KeyError, ValueError, DressError) as exc:
        return [f"unreadable witness: {exc}"]
    for i, w in found:
        if not w.verify():
            bad.append(f"trace step {i} ({cert.trace[i].rule}): witness does not re-verify")
    return bad
