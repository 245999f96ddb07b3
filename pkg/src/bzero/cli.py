"""Command-line front end.

Exit codes: 0 holds / equal / accepted, 1 fails / not equal / rejected,
2 usage, parse or resource errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .decision import explain
from .models import (
    BUILTINS,
    DEFAULT_ALPHABET_CAP,
    ResourceError,
    counterexample,
    format_valuation,
    load_model,
    resolve_model,
    validate_model,
)
from .proofs import (
    DERIVED_8,
    SCHEMAS,
    CertificateFormatError,
    GenerationError,
    LineLimitError,
    load_certificate,
    prove_claim,
    verify_certificate,
)
from .structure import STRUCTURE_CAP, structure_report
from .terms import ParseError, parse_claim, parse_polynomial

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


def _emit(args, payload: dict, text: str) -> None:
    if args.output == "json":
        print(json.dumps(payload, indent=1, ensure_ascii=False))
    else:
        print(text)


def _rel_symbol(rel: str) -> str:
    return "=" if rel == "eq" else "<="


def cmd_check(args) -> int:
    model = resolve_model(args.model)
    p, rel, q = parse_claim(args.claim)
    cap = args.cap or DEFAULT_ALPHABET_CAP
    target = q if rel == "eq" else p + q
    v = counterexample(model, p, target, cap)
    holds = v is None
    payload = {"model": model.name, "claim": f"{p} {_rel_symbol(rel)} {q}", "holds": holds}
    text = f"{payload['claim']}: {'holds' if holds else 'fails'} in {model.name}"
    if not holds:
        shown = format_valuation(model, v)
        payload["counterexample"] = shown
        text += "\n  counterexample: " + ", ".join(f"{k}={e}" for k, e in shown.items())
    _emit(args, payload, text)
    return EXIT_OK if holds else EXIT_FAIL


def cmd_decide(args) -> int:
    p, rel, q = parse_claim(args.claim)
    if rel == "leq":
        q = p + q
    rep = explain(p, q, args.cap or STRUCTURE_CAP)
    payload = {"claim": f"{p} = {q}", **rep.to_json()}
    text = f"{p} = {q}: {rep.verdict}"
    if not rep.equal:
        text += f"\n  failed condition: {rep.failed_condition}\n  {rep.detail}"
        if rep.counterexample:
            text += "\n  counterexample: " + ", ".join(f"{k}={e}" for k, e in rep.counterexample.items())
    _emit(args, payload, text)
    return EXIT_OK if rep.equal else EXIT_FAIL


def cmd_structure(args) -> int:
    p = parse_polynomial(args.polynomial)
    rep = structure_report(p, args.cap or STRUCTURE_CAP)
    data = rep.to_json()
    lines = [
        f"polynomial: {p}",
        f"content: {' '.join(data['content'])}",
        f"rare: {' '.join(data['rare']) or '(none)'}" + ("  [degenerate]" if data["degenerate"] else ""),
        "arrows:",
    ]
    for a in data["arrow"]:
        if a["from"] != a["to"]:
            lines.append(f"  {a['from']} -> {a['to']}  via {a['witness']}")
    if data["covers"]:
        lines.append("covers: " + ", ".join(f"{x}<{z}" for x, z in data["covers"]))
    if data["maximal_chains"]:
        lines.append("maximal chains: " + "; ".join(" ".join(c) for c in data["maximal_chains"]))
        lines.append("maximal antichains: " + "; ".join(" ".join(a) for a in data["maximal_antichains"]))
    lines.append(f"upper words (normal forms): {data['upper_words']}")
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_prove(args) -> int:
    p, rel, q = parse_claim(args.claim)
    try:
        cert = prove_claim(p, rel, q, line_limit=args.line_limit)
    except ValueError as exc:
        _emit(args, {"claim": args.claim, "proved": False, "reason": str(exc)}, f"not valid in B0: {exc}")
        return EXIT_FAIL
    except GenerationError as exc:
        kind = type(exc).__name__
        _emit(args, {"claim": args.claim, "proved": False, "reason": str(exc), "kind": kind}, f"no certificate: {exc}")
        return EXIT_FAIL
    if args.out:
        cert.save(args.out)
        where = args.out
    else:
        where = None
    body = {"claim": str(cert.goal), "proved": True, "lines": len(cert)}
    if where:
        body["path"] = where
        _emit(args, body, f"{cert.goal}: {len(cert)} lines written to {where}")
    elif args.output == "json":
        print(cert.dumps(indent=1))
    else:
        for ln in cert.lines:
            print(f"{ln.index:>4}  {ln.claim}    [{ln.rule}{_refs(ln.args)}]")
    return EXIT_OK


def _refs(args: dict) -> str:
    parts = [str(args[k]) for k in ("i", "j") if k in args]
    if "schema" in args:
        parts.insert(0, args["schema"])
    if "variant" in args:
        parts.insert(0, args["variant"])
    return (" " + " ".join(parts)) if parts else ""


def cmd_verify(args) -> int:
    try:
        cert = load_certificate(args.path)
    except (CertificateFormatError, ValueError) as exc:
        _emit(args, {"accepted": False, "errors": [{"line": getattr(exc, "line", None), "reason": str(exc)}]},
              f"rejected: {exc}")
        return EXIT_FAIL
    rep = verify_certificate(cert)
    text = f"{cert.goal}: accepted ({len(cert)} lines)" if rep.accepted else "rejected:\n" + "\n".join(
        f"  line {e.line}: {e.reason}" for e in rep.errors)
    _emit(args, rep.to_json(), text)
    return EXIT_OK if rep.accepted else EXIT_FAIL


def cmd_axioms(args) -> int:
    rows = []
    for s in list(SCHEMAS.values()) + list(DERIVED_8.values()):
        rows.append({"name": s.name, "label": s.label, "claim": s.display()})
    _emit(args, {"axioms": rows}, "\n".join(f"{r['name']:<11} {r['label']:<17} {r['claim']}" for r in rows))
    return EXIT_OK


def cmd_model_validate(args) -> int:
    if args.path.lower() in BUILTINS:
        m = BUILTINS[args.path.lower()]()
        rep = validate_model(m)
    else:
        m, rep = load_model(args.path)
    payload = rep.to_json()
    text = f"{m.name}: ai-semiring" if rep.ok else f"{m.name}: not an ai-semiring\n" + "\n".join(
        f"  {v.describe(m)}" for v in rep.violations)
    _emit(args, payload, text)
    return EXIT_OK if rep.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bzero", description="Identities of the ai-semiring B0: check, decide, prove, verify.")
    ap.add_argument("--model", default="b0", help="builtin name (b0, b2) or model JSON file [b0]")
    ap.add_argument("--cap", type=int, default=None, help="alphabet cap for sweeps")
    ap.add_argument("--output", choices=("text", "json"), default="text")
    ap.add_argument("--seed", type=int, default=0, help="seed for randomized corpora (commands here are deterministic)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide a claim in --model by exhaustive evaluation")
    p.add_argument("claim", help='"p = q" or "p <= q"')
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decide", help="decide an identity of B0 by content, rare letters and arrows")
    p.add_argument("claim")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("structure", help="rare letters, arrows and poset data of a polynomial")
    p.add_argument("polynomial")
    p.set_defaults(func=cmd_structure)

    p = sub.add_parser("prove", help="generate a certificate")
    p.add_argument("claim")
    p.add_argument("-o", "--out", help="write the certificate JSON here")
    p.add_argument("--line-limit", type=int, default=100_000)
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("verify", help="check a certificate file")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("axioms", help="list the axiom schemas")
    p.set_defaults(func=cmd_axioms)

    p = sub.add_parser("model-validate", help="check the ai-semiring axioms for a model file")
    p.add_argument("path")
    p.set_defaults(func=cmd_model_validate)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    if args.cap is not None and args.cap < 1:
        print("error: --cap must be at least 1", file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
    except (ResourceError, LineLimitError) as exc:
        print(f"resource error: {exc}", file=sys.stderr)
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
