"""Text forms of polynomials, ring elements, matrices and certificates.

Polynomials are written like ``1/2*X^4 - 1/2*X^2 + 3``.  Ring elements are
``<poly>``, ``(<poly>)/(<poly>)`` or any arithmetic expression over ``X`` and
rationals using ``+ - * / ^`` and parentheses; a row-form matrix is
``"p ; q"``.  Certificates serialize to a JSON document.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .dressring import DressElem, make
from .errors import DressError, NoApplicableRule, ParseError
from .idemfact import FactorizationCert, Mat2, RuleStep
from .polyratq import ONE, Poly

_TOKEN = re.compile(r"\s*(?:(\d+)|([Xx])|(\*\*|[-+*/^();]))")


def _tokenize(s: str) -> list[str]:
    out, pos = [], 0
    s = s.rstrip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            raise ParseError(f"unexpected character {s[pos:].strip()[:1]!r} at {pos} in {s!r}")
        tok = m.group(1) or m.group(2) or m.group(3)
        out.append("^" if tok == "**" else tok.upper() if tok in "xX" else tok)
        pos = m.end()
    return out


class _Parser:
    # rational functions as (num, den) pairs

    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            want = expected or "a token"
            raise ParseError(f"expected {want} in {self.text!r}, got {tok!r}")
        self.i += 1
        return tok

    def parse(self):
        if not self.toks:
            raise ParseError("empty expression")
        v = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input {self.peek()!r} in {self.text!r}")
        return v

    def expr(self):
        n, d = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            n2, d2 = self.term()
            if op == "-":
                n2 = -n2
            n, d = n * d2 + n2 * d, d * d2
        return n, d

    def term(self):
        n, d = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            n2, d2 = self.unary()
            if op == "*":
                n, d = n * n2, d * d2
            else:
                if n2.is_zero():
                    raise ParseError(f"division by zero in {self.text!r}")
                n, d = n * d2, d * n2
        return n, d

    def unary(self):
        if self.peek() == "-":
            self.take()
            n, d = self.unary()
            return -n, d
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        n, d = self.atom()
        if self.peek() == "^":
            self.take()
            tok = self.take()
            if not tok.isdigit():
                raise ParseError(f"exponent must be a nonnegative integer in {self.text!r}")
            k = int(tok)
            n, d = n**k, d**k
        return n, d

    def atom(self):
        tok = self.take()
        if tok.isdigit():
            return Poly.const(int(tok)), ONE
        if tok == "X":
            return Poly.x(), ONE
        if tok == "(":
            v = self.expr()
            self.take(")")
            return v
        raise ParseError(f"unexpected {tok!r} in {self.text!r}")


def parse_fraction(text: str) -> tuple[Poly, Poly]:
    """Numerator and denominator of a rational-function expression (unreduced)."""
    return _Parser(text).parse()


def parse_poly(text: str) -> Poly:
    n, d = parse_fraction(text)
    if d.degree != 0:
        q, r = divmod(n, d)
        if r:
            raise ParseError(f"{text!r} is not a polynomial")
        return q
    return n * (1 / d.lc)


def parse_elem(text: str) -> DressElem:
    """Parse and check membership; raises NotInDress for non-members."""
    return make(*parse_fraction(text))


def parse_rational(text: str) -> Fraction:
    p = parse_poly(text)
    if p.degree > 0:
        raise ParseError(f"{text!r} is not a constant")
    return p.lc


def parse_row(text: str) -> tuple[DressElem, DressElem]:
    parts = text.split(";")
    if len(parts) != 2:
        raise ParseError(f"expected 'p ; q', got {text!r}")
    return parse_elem(parts[0]), parse_elem(parts[1])


def format_row(p: DressElem, q: DressElem) -> str:
    return f"{p} ; {q}"


def parse_mat(text: str) -> Mat2:
    """Inverse of ``str(Mat2)``: ``[[a, b], [c, d]]``."""
    body = text.strip()
    if not (body.startswith("[[") and body.endswith("]]")):
        raise ParseError(f"expected [[a, b], [c, d]], got {text!r}")
    rows = body[2:-2].split("], [")
    cells = [c for r in rows for c in r.split(",")]
    if len(rows) != 2 or len(cells) != 4:
        raise ParseError(f"expected [[a, b], [c, d]], got {text!r}")
    return Mat2(*(parse_elem(c) for c in cells))


# -- certificate documents ----------------------------------------------------

CERT_TYPE = "idempotent-factorization"
NO_RULE_TYPE = "no-applicable-rule"


def _mat_to_list(m: Mat2) -> list[list[str]]:
    return [[str(m.a), str(m.b)], [str(m.c), str(m.d)]]


def _mat_from_list(rows: Any) -> Mat2:
    try:
        (a, b), (c, d) = rows
    except (TypeError, ValueError) as exc:
        raise ParseError(f"malformed matrix {rows!r}") from exc
    return Mat2(parse_elem(a), parse_elem(b), parse_elem(c), parse_elem(d))


def cert_to_dict(cert: FactorizationCert) -> dict:
    return {
        "type": CERT_TYPE,
        "input": _mat_to_list(cert.input),
        "chain": [_mat_to_list(t) for t in cert.chain],
        "rule": cert.rule,
        "trace": [{"rule": s.rule, "params": dict(s.params)} for s in cert.trace],
    }


def cert_from_dict(doc: dict) -> FactorizationCert:
    if not isinstance(doc, dict) or doc.get("type") != CERT_TYPE:
        raise ParseError("not a factorization certificate document")
    try:
        trace = tuple(RuleStep(s["rule"], dict(s.get("params", {}))) for s in doc.get("trace", []))
        return FactorizationCert(
            _mat_from_list(doc["input"]),
            tuple(_mat_from_list(t) for t in doc["chain"]),
            trace,
            str(doc.get("rule", "")),
        )
    except (TypeError, AttributeError) as exc:
        raise ParseError(f"malformed certificate: {exc}") from exc
    except KeyError as exc:
        raise ParseError(f"certificate is missing field {exc}") from exc
    except DressError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from exc


def dumps_cert(cert: FactorizationCert) -> str:
    return json.dumps(cert_to_dict(cert), indent=2)


def loads_cert(text: str) -> FactorizationCert:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return cert_from_dict(doc)


def no_rule_to_dict(m: Mat2, exc: NoApplicableRule) -> dict:
    return {"type": NO_RULE_TYPE, "input": _mat_to_list(m), "diagnostics": dict(exc.diagnostics)}


def format_cert_text(cert: FactorizationCert) -> str:
    lines = [f"input: {cert.input}"]
    if cert.rule:
        lines.append(f"rule: {cert.rule}")
    lines += [f"chain ({len(cert.chain)} idempotent factors):"]
    lines += [f"  T{i + 1} = {t}" for i, t in enumerate(cert.chain)]
    lines.append("trace:")
    lines += [f"  {s}" for s in cert.trace]
    return "\n".join(lines)
