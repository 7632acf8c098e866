"""Command-line front end.

    dressfact factor "(X^2-4)/(X^2+1) ; (X+3)/(X^2+1)"
    dressfact verify cert.json
    dressfact member "X"
    dressfact roots "X^3 - 2"
    dressfact selftest
    dressfact corpus --seed 1 --count 20 --profile odd-odd

Exit status: 0 success, 1 verification failure / NoApplicableRule / not a
member, 2 parse or precondition error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from typing import Callable, Optional, Sequence

from .dressring import make
from .errors import DressError, NoApplicableRule, NotInDress, ParseError, SearchExhausted
from .generate import PROFILES, UnknownProfile, generate_instance
from .idemfact import Mat2, base_r0, chain_failure, factor, verify_chain
from .polyratq import X, isolate_real_roots
from .search import DEFAULT_MAX_STEPS, find_beta, find_eta, find_r_one_root, find_r_two_roots
from .textio import (
    dumps_cert,
    format_cert_text,
    loads_cert,
    no_rule_to_dict,
    parse_fraction,
    parse_poly,
    parse_row,
)
from .witness import witness_failures

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

NO_RULE_NOTE = "no applicable rule (this does not mean that no factorization exists)"


def _emit(args, text: str, doc: dict) -> None:
    if args.format == "structured":
        print(json.dumps(doc, indent=2))
    else:
        print(text)


# -- verbs -------------------------------------------------------------------


def cmd_factor(args) -> int:
    p, q = parse_row(args.matrix)
    m = Mat2.row(p, q)
    try:
        cert = factor(m, args.max_steps)
    except NoApplicableRule as exc:
        lines = [NO_RULE_NOTE] + [f"  {k}: {v}" for k, v in exc.diagnostics.items()]
        _emit(args, "\n".join(lines), no_rule_to_dict(m, exc))
        return EXIT_FAIL
    if args.format == "structured":
        print(dumps_cert(cert))
    else:
        print(format_cert_text(cert))
    return EXIT_OK


def _read_source(src: str) -> str:
    if src == "-":
        return sys.stdin.read()
    try:
        with open(src, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {src}: {exc.strerror}") from exc


def cmd_verify(args) -> int:
    cert = loads_cert(_read_source(args.certificate))
    bad = chain_failure(cert)
    problems = []
    if bad is not None:
        idx, reason = bad
        where = "product" if idx == len(cert.chain) and cert.chain else f"factor {idx + 1}"
        problems.append(f"{where}: {reason}")
    problems += witness_failures(cert)
    doc = {"verified": not problems, "factors": len(cert.chain), "problems": problems}
    if problems:
        _emit(args, "FAILED\n" + "\n".join(f"  {p}" for p in problems), doc)
        return EXIT_FAIL
    _emit(args, f"verified: {len(cert.chain)} idempotent factors multiply to the input", doc)
    return EXIT_OK


def cmd_member(args) -> int:
    num, den = parse_fraction(args.expr)
    try:
        e = make(num, den)
    except NotInDress as exc:
        _emit(args, str(exc), {"member": False, "reason": exc.reason, "message": str(exc)})
        return EXIT_FAIL
    _emit(args, f"in D: {e}", {"member": True, "element": str(e)})
    return EXIT_OK


def cmd_roots(args) -> int:
    f = parse_poly(args.poly)
    roots = isolate_real_roots(f)
    items = [
        {
            "interval": str(iv),
            "lo": str(iv.lo),
            "hi": str(iv.hi),
            "exact": str(iv.lo) if iv.is_point else None,
            "multiplicity": m,
        }
        for iv, m in roots
    ]
    lines = [f"{f}: {len(roots)} distinct real root(s)"]
    for it in items:
        kind = "exact" if it["exact"] is not None else "isolated"
        lines.append(f"  {it['interval']}  {kind}, multiplicity {it['multiplicity']}")
    _emit(args, "\n".join(lines), {"polynomial": str(f), "distinct_count": len(roots), "roots": items})
    return EXIT_OK


# -- selftest ------------------------------------------------------------------


def _row(p: str, q: str) -> Mat2:
    return Mat2.row(*parse_row(f"{p} ; {q}"))


def _factor_ok(p: str, q: str) -> Callable[[], bool]:
    return lambda: verify_chain(factor(_row(p, q)))


def _no_rule(p: str, q: str) -> Callable[[], bool]:
    def check():
        try:
            factor(_row(p, q))
        except NoApplicableRule:
            return True
        return False

    return check


def _golden_delta() -> bool:
    want = parse_poly("1/2*X^4 - 1/2*X^2 + 3")
    e = find_eta(X**2 - 4, X**2 - 1)
    b = find_beta(X**2 - 1, X**2 - 4)
    return e.verify() and b.verify() and e.delta == want and b.delta == want


def _not_member_x() -> bool:
    try:
        make(X)
    except NotInDress as exc:
        return exc.reason == NotInDress.DEGREE_TOO_LARGE
    return False


def _elementary() -> bool:
    p = make(X, X**2 + 1)
    return all(verify_chain(base_r0(p, side)) for side in ("left", "right"))


SELFTESTS: tuple[tuple[str, Callable[[], bool]], ...] = (
    ("elementary factorizations of X/(X^2+1)", _elementary),
    ("X is not in D", _not_member_x),
    ("find_eta / find_beta golden delta", _golden_delta),
    ("find_r_one_root(X^3-4X, X-1)", lambda: find_r_one_root(X**3 - 4 * X, X - 1).verify()),
    (
        "find_r_two_roots(X^4-5X^2+4, X)",
        lambda: find_r_two_roots(X**4 - 5 * X**2 + 4, X).verify(),
    ),
    ("sign condition (i)", _factor_ok("(X^2-4)/(X^2+1)", "(X+3)/(X^2+1)")),
    ("sign condition (ii)", _factor_ok("1/(X^2+1)", "X/(X^2+1)")),
    ("semidefinite p >= 0", _factor_ok("(X-1)^2/(X^2+1)", "(X+2)/(X^2+1)")),
    ("semidefinite p <= 0", _factor_ok("-(X-1)^2/(X^2+1)", "(X+2)/(X^2+1)")),
    ("odd/odd shear search", _factor_ok("(X^3-4*X)/(X^2+1)^2", "(X-1)/(X^2+1)^2")),
    ("odd/odd shared root", _factor_ok("X*(X^2-4)/(X^2+1)^2", "X^3/(X^2+1)^2")),
    ("even/odd two-root shear", _factor_ok("(X^4-5*X^2+4)/(X^2+1)^2", "X/(X^2+1)^2")),
    ("even/odd unique root", _factor_ok("(X-1)^2*(X^2+2)/(X^2+1)^2", "X/(X^2+1)^2")),
    ("even/odd common root", _factor_ok("X^2*(X^2+2)/(X^2+1)^3", "X*(X^2+X+1)/(X^2+1)^3")),
    ("Example matrix has no applicable rule", _no_rule("(X^2-1)/(X^2+1)", "X/(X^2+1)")),
)


def cmd_selftest(args) -> int:
    results = []
    for name, check in SELFTESTS:
        try:
            ok = bool(check())
        except (DressError, AssertionError, ArithmeticError, ValueError) as exc:
            ok = False
            name = f"{name} ({type(exc).__name__}: {exc})"
        results.append((name, ok))
    lines = [f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in results]
    passed = sum(ok for _, ok in results)
    lines.append(f"{passed}/{len(results)} passed")
    doc = {"passed": passed, "total": len(results), "results": [{"name": n, "ok": ok} for n, ok in results]}
    _emit(args, "\n".join(lines), doc)
    return EXIT_OK if passed == len(results) else EXIT_FAIL


# -- corpus --------------------------------------------------------------------


def _corpus_item(seed: int, profile: str, index: int, max_steps: int) -> dict:
    p, q = generate_instance(seed, profile, index)
    item = {"index": index, "profile": profile, "p": str(p), "q": str(q)}
    try:
        cert = factor(Mat2.row(p, q), max_steps)
    except NoApplicableRule as exc:
        item.update(outcome="NoApplicableRule", rule=None, verified=None, diagnostics=dict(exc.diagnostics))
        return item
    item.update(
        outcome="certificate",
        rule=cert.rule,
        verified=verify_chain(cert) and not witness_failures(cert),
        factors=len(cert.chain),
    )
    return item


def cmd_corpus(args) -> int:
    if args.seed is None:
        raise UsageError("corpus needs --seed")
    names = [args.profile] if args.profile else list(PROFILES)
    if args.profile and args.profile not in PROFILES:
        raise UnknownProfile(f"unknown profile {args.profile!r}; choose from {', '.join(PROFILES)}")
    items = [
        _corpus_item(args.seed, names[i % len(names)], i if args.profile else i // len(names), args.max_steps)
        for i in range(args.count)
    ]
    rules = Counter(it["rule"] or it["outcome"] for it in items)
    failed = [it for it in items if it["verified"] is False]
    stats = {
        "instances": len(items),
        "certificates": sum(it["outcome"] == "certificate" for it in items),
        "no_applicable_rule": sum(it["outcome"] == "NoApplicableRule" for it in items),
        "verification_failures": len(failed),
        "rules": dict(sorted(rules.items())),
    }
    doc = {"seed": args.seed, "profile": args.profile, "count": args.count, "items": items, "stats": stats}
    lines = []
    for it in items:
        tag = it["rule"] or it["outcome"]
        extra = f" factors={it['factors']} verified={it['verified']}" if it["outcome"] == "certificate" else ""
        lines.append(f"#{it['index']:<4} {it['profile']:<22} {tag}{extra}")
    lines.append(
        f"instances={stats['instances']} certificates={stats['certificates']} "
        f"no_applicable_rule={stats['no_applicable_rule']} failures={stats['verification_failures']}"
    )
    lines += [f"  {k}: {v}" for k, v in stats["rules"].items()]
    _emit(args, "\n".join(lines), doc)
    return EXIT_FAIL if failed else EXIT_OK


# -- entry point ---------------------------------------------------------------


class UsageError(DressError):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS, help="search budget")

    ap = argparse.ArgumentParser(
        prog="dressfact",
        description="Idempotent factorization of row-form 2x2 matrices over the minimal Dress ring of R(X).",
    )
    sub = ap.add_subparsers(dest="verb", required=True)

    sp = sub.add_parser("factor", parents=[common], help='factor a row-form matrix given as "p ; q"')
    sp.add_argument("matrix")
    sp.set_defaults(func=cmd_factor)

    sp = sub.add_parser("verify", parents=[common], help="re-check a certificate (file or - for stdin)")
    sp.add_argument("certificate")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("member", parents=[common], help="membership in D with the reason")
    sp.add_argument("expr")
    sp.set_defaults(func=cmd_member)

    sp = sub.add_parser("roots", parents=[common], help="real root isolation of a polynomial")
    sp.add_argument("poly")
    sp.set_defaults(func=cmd_roots)

    sp = sub.add_parser("selftest", parents=[common], help="run the embedded golden corpus")
    sp.set_defaults(func=cmd_selftest)

    sp = sub.add_parser("corpus", parents=[common], help="seeded random instances with rule coverage")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--count", type=int, default=10)
    sp.add_argument("--profile", help=f"one of: {', '.join(PROFILES)} (default: cycle through all)")
    sp.set_defaults(func=cmd_corpus)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DressError, ValueError, ZeroDivisionError, SearchExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
