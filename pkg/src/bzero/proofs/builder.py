"""Incremental certificate construction.

Lines are memoized by claim, so a claim is never stated twice and every
premise reference in a finished certificate is forced.
"""

from __future__ import annotations

from typing import Dict, List, Optional

from ..terms import Polynomial, Word
from .kernel import Certificate, Claim, ProofLine, RuleError, check_line, derive

DEFAULT_LINE_LIMIT = 100_000


class LineLimitError(RuntimeError):
    """The generator exceeded its line budget."""


def poly(*words: Word) -> Polynomial:
    return Polynomial(words)


class ProofBuilder:
    def __init__(self, line_limit: int = DEFAULT_LINE_LIMIT):
        self.lines: List[ProofLine] = []
        self.by_claim: Dict[Claim, int] = {}
        self.claims: Dict[int, Claim] = {}
        self.line_limit = line_limit

    def __len__(self):
        return len(self.lines)

    def claim(self, i: int) -> Claim:
        return self.claims[i]

    def _push(self, claim: Claim, rule: str, args) -> int:
        if claim in self.by_claim:
            return self.by_claim[claim]
        if len(self.lines) >= self.line_limit:
            raise LineLimitError(f"certificate exceeds {self.line_limit} lines")
        n = len(self.lines) + 1
        line = ProofLine(n, claim, rule, args)
        check_line(line, self.claims)  # generator bugs surface here, not at verify time
        self.lines.append(line)
        self.by_claim[claim] = n
        self.claims[n] = claim
        return n

    def rule(self, rule: str, **args) -> int:
        claim = derive(rule, args, self.claims, len(self.lines) + 1)
        return self._push(claim, rule, args)

    def find(self, claim: Claim) -> Optional[int]:
        return self.by_claim.get(claim)

    # shorthands ---------------------------------------------------------

    def refl(self, lhs: Polynomial, rhs: Polynomial, rel: str = "leq") -> int:
        return self._push(Claim(lhs, rel, rhs), "REFL", {})

    def axiom(self, schema: str, **subst) -> int:
        return self.rule("AXIOM", schema=schema, subst={k: (tuple(v) if v else None) for k, v in subst.items()})

    def d8(self, variant: str, x: Word, y: Word) -> int:
        return self.rule("DERIVED_8", variant=variant, subst={"x": tuple(x), "y": tuple(y)})

    def trans(self, i: int, j: int) -> int:
        a, b = self.claims[i], self.claims[j]
        if a.lhs == a.rhs and a.rel == "eq":
            return j
        if b.lhs == b.rhs and b.rel == "eq":
            return i
        return self.rule("TRANS", i=i, j=j)

    def chain(self, *refs: Optional[int]) -> int:
        refs = [r for r in refs if r is not None]
        out = refs[0]
        for r in refs[1:]:
            out = self.trans(out, r)
        return out

    def sym(self, i: int) -> int:
        return self.rule("SYM", i=i)

    def add_mono(self, i: int, r: Polynomial) -> int:
        return self.rule("ADD_MONO", i=i, r=r)

    def mul_left(self, i: int, r: Word) -> int:
        return self.rule("MUL_LEFT", i=i, r=tuple(r)) if r else i

    def mul_right(self, i: int, r: Word) -> int:
        return self.rule("MUL_RIGHT", i=i, r=tuple(r)) if r else i

    def context(self, i: int, left: Word, right: Word) -> int:
        return self.mul_left(self.mul_right(i, right), left)

    def combine(self, i: int, j: int) -> int:
        return self.rule("COMBINE", i=i, j=j)

    def combine_all(self, refs) -> int:
        refs = list(refs)
        out = refs[0]
        for r in refs[1:]:
            out = self.combine(out, r)
        return out

    def aci(self, i: int, claim: Claim) -> int:
        return self._push(claim, "ACI", {"i": i})

    def antisym(self, i: int, j: int) -> int:
        return self.rule("ANTISYM", i=i, j=j)

    def certificate(self, goal: Claim, last: int) -> Certificate:
        """Certificate for ``goal`` keeping only the lines ``last`` depends on."""
        if self.claims[last] != goal:
            raise RuleError(f"line {last} proves {self.claims[last]}, not {goal}")
        keep = set()
        stack = [last]
        while stack:
            n = stack.pop()
            if n in keep:
                continue
            keep.add(n)
            for key in ("i", "j"):
                ref = self.lines[n - 1].args.get(key)
                if isinstance(ref, int):
                    stack.append(ref)
        renum = {old: new for new, old in enumerate(sorted(keep), start=1)}
        out = []
        for old in sorted(keep):
            line = self.lines[old - 1]
            args = dict(line.args)
            for key in ("i", "j"):
                if key in args:
                    args[key] = renum[args[key]]
            out.append(ProofLine(renum[old], line.claim, line.rule, args))
        return Certificate(goal, out)
