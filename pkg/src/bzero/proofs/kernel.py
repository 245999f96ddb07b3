"""Certificate format and the line-by-line checker.

A certificate is a numbered list of claims ``lhs rel rhs`` (``rel`` is
``leq`` or ``eq``).  Each line names a rule and its arguments; the checker
recomputes the claim the rule yields from its premises and compares it,
as canonical polynomials, with the stated one.

Rules::

    AXIOM(schema, subst)     an instance of the basis
    REFL                     p <= q when every summand of q is one of p; p = p
    TRANS(i, j)              p R q, q R' r  =>  p R'' r  (eq only if both eq)
    SYM(i)                   p = q  =>  q = p
    ADD_MONO(i, r)           p R q  =>  p + r R q + r
    MUL_LEFT(i, r)           p R q  =>  rp R rq        (r a word)
    MUL_RIGHT(i, r)          p R q  =>  pr R qr
    COMBINE(i, j)            p <= q, p <= r  =>  p <= q + r   (alias DERIVED_7)
    ANTISYM(i, j)            p <= q, q <= p  =>  p = q
    DERIVED_8(variant, subst)  xy^2 <= x ("right") or y^2x <= x ("left")
    ACI(i)                   restatement of line i; also unfolds p <= q to
                             p = p + q and folds it back
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, NamedTuple, Optional, Tuple

from ..terms import ParseError, Polynomial, Word, parse_polynomial, parse_word, render, render_word
from .axioms import DERIVED_8, SCHEMAS, SubstitutionError, instantiate_schema

RELS = ("leq", "eq")


class Claim(NamedTuple):
    lhs: Polynomial
    rel: str
    rhs: Polynomial

    def __str__(self):
        return f"{self.lhs} {'<=' if self.rel == 'leq' else '='} {self.rhs}"

    def to_json(self) -> dict:
        return {"lhs": render(self.lhs), "rel": self.rel, "rhs": render(self.rhs)}


@dataclass(frozen=True)
class ProofLine:
    index: int
    claim: Claim
    rule: str
    args: Dict[str, Any] = field(default_factory=dict, hash=False)

    def to_json(self) -> dict:
        return {"i": self.index, **self.claim.to_json(), "rule": self.rule, "args": _args_to_json(self.args)}


@dataclass
class Certificate:
    goal: Claim
    lines: List[ProofLine]

    def __len__(self):
        return len(self.lines)

    def to_json(self) -> dict:
        return {"goal": self.goal.to_json(), "lines": [ln.to_json() for ln in self.lines]}

    def dumps(self, **kw) -> str:
        return json.dumps(self.to_json(), **kw)

    def save(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=1)
            fh.write("\n")


class Rejection(NamedTuple):
    line: Optional[int]
    reason: str


@dataclass
class CheckReport:
    accepted: bool
    errors: List[Rejection]
    goal: Optional[Claim] = None

    def __bool__(self):
        return self.accepted

    def to_json(self) -> dict:
        return {
            "accepted": self.accepted,
            "goal": self.goal.to_json() if self.goal else None,
            "errors": [{"line": e.line, "reason": e.reason} for e in self.errors],
        }


class RuleError(ValueError):
    pass


def _premise(lines: Dict[int, Claim], at: int, ref) -> Claim:
    if not isinstance(ref, int) or isinstance(ref, bool):
        raise RuleError(f"premise reference {ref!r} is not a line number")
    if ref >= at:
        raise RuleError(f"premise {ref} does not precede line {at}")
    if ref not in lines:
        raise RuleError(f"premise {ref} does not exist")
    return lines[ref]


def _word(v) -> Word:
    if not isinstance(v, tuple) or not v:
        raise RuleError(f"expected a nonempty word, got {v!r}")
    return v


def derive(rule: str, args: Dict[str, Any], lines: Dict[int, Claim], at: int) -> Claim:
    """The claim that ``rule`` with ``args`` yields; raises RuleError."""
    if rule == "AXIOM":
        schema = SCHEMAS.get(args.get("schema"))
        if schema is None:
            raise RuleError(f"unknown schema {args.get('schema')!r}")
        try:
            return Claim(*instantiate_schema(schema, args.get("subst", {})))
        except SubstitutionError as exc:
            raise RuleError(str(exc)) from None
    if rule == "DERIVED_8":
        schema = DERIVED_8.get(args.get("variant"))
        if schema is None:
            raise RuleError(f"unknown DERIVED_8 variant {args.get('variant')!r}")
        try:
            return Claim(*instantiate_schema(schema, args.get("subst", {})))
        except SubstitutionError as exc:
            raise RuleError(str(exc)) from None
    if rule == "REFL":
        return None  # checked against the stated claim directly
    if rule == "ACI":
        return _premise(lines, at, args.get("i"))  # compared up to unfolding in check_line
    if rule == "SYM":
        a = _premise(lines, at, args.get("i"))
        if a.rel != "eq":
            raise RuleError("SYM needs an identity")
        return Claim(a.rhs, "eq", a.lhs)
    if rule == "TRANS":
        a = _premise(lines, at, args.get("i"))
        b = _premise(lines, at, args.get("j"))
        if a.rhs != b.lhs:
            raise RuleError(f"TRANS premises do not chain: {a.rhs} vs {b.lhs}")
        return Claim(a.lhs, "eq" if a.rel == b.rel == "eq" else "leq", b.rhs)
    if rule == "ADD_MONO":
        a = _premise(lines, at, args.get("i"))
        r = args.get("r")
        if not isinstance(r, Polynomial):
            raise RuleError("ADD_MONO needs a polynomial r")
        return Claim(a.lhs + r, a.rel, a.rhs + r)
    if rule in ("MUL_LEFT", "MUL_RIGHT"):
        a = _premise(lines, at, args.get("i"))
        r = _word(args.get("r"))
        if rule == "MUL_LEFT":
            return Claim(a.lhs.lmul(r), a.rel, a.rhs.lmul(r))
        return Claim(a.lhs.rmul(r), a.rel, a.rhs.rmul(r))
    if rule in ("COMBINE", "DERIVED_7"):
        a = _premise(lines, at, args.get("i"))
        b = _premise(lines, at, args.get("j"))
        if a.lhs != b.lhs:
            raise RuleError(f"{rule} premises have different left sides")
        return Claim(a.lhs, "leq", a.rhs + b.rhs)
    if rule == "ANTISYM":
        a = _premise(lines, at, args.get("i"))
        b = _premise(lines, at, args.get("j"))
        if a.rel != "leq" or b.rel != "leq" or a.lhs != b.rhs or a.rhs != b.lhs:
            raise RuleError("ANTISYM needs p <= q and q <= p")
        return Claim(a.lhs, "eq", a.rhs)
    raise RuleError(f"unknown rule {rule!r}")


def _unfolds(a: Claim, b: Claim) -> bool:
    """``a`` is ``p <= q`` and ``b`` is ``p = p + q`` or ``p + q = p``."""
    if a.rel != "leq" or b.rel != "eq":
        return False
    s = a.lhs + a.rhs
    return (b.lhs, b.rhs) in ((a.lhs, s), (s, a.lhs))


def check_line(line: ProofLine, lines: Dict[int, Claim]) -> None:
    c = line.claim
    if c.rel not in RELS:
        raise RuleError(f"unknown relation {c.rel!r}")
    if line.rule == "REFL":
        if c.rel == "eq" and c.lhs != c.rhs:
            raise RuleError("REFL identity with different sides")
        if c.rel == "leq" and not set(c.rhs.summands) <= set(c.lhs.summands):
            raise RuleError("REFL: right side is not a sub-sum of the left side")
        return
    if line.rule == "ACI":
        a = derive(line.rule, line.args, lines, line.index)
        if c != a and not _unfolds(a, c) and not _unfolds(c, a):
            raise RuleError(f"ACI: {c} is not a restatement of {a}")
        return
    expected = derive(line.rule, line.args, lines, line.index)
    if expected != c:
        raise RuleError(f"claim does not follow: rule yields {expected}")


def verify_certificate(cert: Certificate) -> CheckReport:
    errors: List[Rejection] = []
    lines: Dict[int, Claim] = {}
    for n, line in enumerate(cert.lines, start=1):
        if line.index != n:
            errors.append(Rejection(line.index, f"line numbered {line.index}, expected {n}"))
            break
        try:
            check_line(line, lines)
        except RuleError as exc:
            errors.append(Rejection(n, str(exc)))
            continue
        lines[n] = line.claim
    if not cert.lines:
        errors.append(Rejection(None, "empty certificate"))
    elif not errors and cert.lines[-1].claim != cert.goal:
        errors.append(Rejection(len(cert.lines), f"last claim {cert.lines[-1].claim} is not the goal {cert.goal}"))
    return CheckReport(not errors, errors, cert.goal)


# --------------------------------------------------------------------------
# JSON


def _args_to_json(args: Dict[str, Any]) -> Dict[str, Any]:
    out = {}
    for k, v in args.items():
        if k == "subst":
            out[k] = {var: render_word(val) if val else "" for var, val in sorted(v.items())}
        elif isinstance(v, Polynomial):
            out[k] = render(v)
        elif isinstance(v, tuple):
            out[k] = render_word(v)
        else:
            out[k] = v
    return out


def _args_from_json(rule: str, args: Dict[str, Any]) -> Dict[str, Any]:
    out: Dict[str, Any] = {}
    for k, v in args.items():
        if k == "subst":
            if not isinstance(v, dict):
                raise ValueError("subst must be an object")
            out[k] = {var: (parse_word(val) if val else None) for var, val in v.items()}
        elif k == "r" and rule == "ADD_MONO":
            out[k] = parse_polynomial(v)
        elif k == "r":
            out[k] = parse_word(v)
        else:
            out[k] = v
    return out


def claim_from_json(d: dict) -> Claim:
    if d.get("rel") not in RELS:
        raise ValueError(f"unknown relation {d.get('rel')!r}")
    return Claim(parse_polynomial(d["lhs"]), d["rel"], parse_polynomial(d["rhs"]))


class CertificateFormatError(ValueError):
    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


def certificate_from_json(data: dict) -> Certificate:
    try:
        goal = claim_from_json(data["goal"])
    except (KeyError, TypeError, ValueError, ParseError) as exc:
        raise CertificateFormatError(f"bad goal: {exc}") from None
    lines = []
    for n, d in enumerate(data.get("lines", []), start=1):
        try:
            lines.append(ProofLine(d["i"], claim_from_json(d), d["rule"], _args_from_json(d["rule"], d.get("args", {}))))
        except (KeyError, TypeError, ValueError, ParseError) as exc:
            raise CertificateFormatError(str(exc), n) from None
    return Certificate(goal, lines)


def load_certificate(path) -> Certificate:
    with open(path) as fh:
        return certificate_from_json(json.load(fh))


def loads_certificate(text: str) -> Certificate:
    return certificate_from_json(json.loads(text))
