"""Single-token corruptions of certificates, for testing the checker."""

from __future__ import annotations

import random
from typing import Tuple

from ..terms import Polynomial
from .kernel import Certificate, Claim, ProofLine

RULES = ("AXIOM", "REFL", "TRANS", "SYM", "ADD_MONO", "MUL_LEFT", "MUL_RIGHT", "COMBINE", "ANTISYM", "DERIVED_8", "ACI")
# same rule under two names; swapping them is not a change
_ALIASES = {"DERIVED_7": "COMBINE"}


def _rename(p: Polynomial, rng: random.Random, letters) -> Tuple[Polynomial, str]:
    words = list(p.summands)
    k = rng.randrange(len(words))
    w = list(words[k])
    i = rng.randrange(len(w))
    new = rng.choice([a for a in letters if a != w[i]])
    old, w[i] = w[i], new
    words[k] = tuple(w)
    return Polynomial(words), f"{old}->{new}"


def mutate(cert: Certificate, rng: random.Random) -> Tuple[str, Certificate]:
    """A copy of ``cert`` with one letter, rule tag or premise reference changed."""
    lines = list(cert.lines)
    letters = sorted({a for ln in lines for side in (ln.claim.lhs, ln.claim.rhs) for a in side.content()} | {"q"})
    # a reference on line k (0-based) can point at any of lines 1..k
    refs = [(k, key) for k, ln in enumerate(lines) for key in ("i", "j") if key in ln.args and k >= 2]
    kind = rng.choice(["letter", "rule", "ref"] if refs else ["letter", "rule"])
    if kind == "ref":
        n, key = rng.choice(refs)
        ln = lines[n]
        args = dict(ln.args, **{key: rng.choice([r for r in range(1, n + 1) if r != ln.args[key]])})
        lines[n] = ProofLine(ln.index, ln.claim, ln.rule, args)
        return f"line {ln.index}: {key} -> {args[key]}", Certificate(cert.goal, lines)
    n = rng.randrange(len(lines))
    ln = lines[n]
    if kind == "rule":
        cur = _ALIASES.get(ln.rule, ln.rule)
        new = rng.choice([r for r in RULES if r != cur])
        lines[n] = ProofLine(ln.index, ln.claim, new, ln.args)
        return f"line {ln.index}: rule {ln.rule} -> {new}", Certificate(cert.goal, lines)
    side = rng.choice(("lhs", "rhs"))
    p, what = _rename(getattr(ln.claim, side), rng, letters)
    claim = ln.claim._replace(**{side: p})
    lines[n] = ProofLine(ln.index, claim, ln.rule, ln.args)
    return f"line {ln.index}: {side} {what}", Certificate(cert.goal, lines)
