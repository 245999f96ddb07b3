"""Deciding ``B0 |= p = q`` from content, rare letters and arrows."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from .models import builtin_b0, counterexample, format_valuation
from .structure import STRUCTURE_CAP, structure_report
from .terms import Polynomial

CONDITIONS = ("content", "rare_set", "arrow")


@dataclass(frozen=True)
class DecisionReport:
    verdict: str
    failed_condition: Optional[str] = None
    detail: str = ""
    only_in_lhs: Tuple = ()
    only_in_rhs: Tuple = ()
    counterexample: Optional[Dict[str, str]] = field(default=None, compare=False)

    @property
    def equal(self) -> bool:
        return self.verdict == "equal"

    def __bool__(self):
        return self.equal

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "failed_condition": self.failed_condition, "detail": self.detail}
        if self.failed_condition:
            out["only_in_lhs"] = [list(a) if isinstance(a, tuple) else a for a in self.only_in_lhs]
            out["only_in_rhs"] = [list(a) if isinstance(a, tuple) else a for a in self.only_in_rhs]
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _one(it) -> str:
    return f"({it[0]},{it[1]})" if isinstance(it, tuple) else it


def _fail(cond: str, lhs: set, rhs: set, what: str) -> DecisionReport:
    a, b = tuple(sorted(lhs - rhs)), tuple(sorted(rhs - lhs))
    parts = []
    if a:
        parts.append(f"{what} {', '.join(map(_one, a))} only in the left side")
    if b:
        parts.append(f"{what} {', '.join(map(_one, b))} only in the right side")
    return DecisionReport("not_equal", cond, "; ".join(parts), a, b)


def decide_b0(p: Polynomial, q: Polynomial, cap: int = STRUCTURE_CAP) -> DecisionReport:
    """Content, then rare letters, then arrow relation; the first mismatch decides."""
    cp, cq = p.content(), q.content()
    if cp != cq:
        return _fail("content", set(cp), set(cq), "letter")
    rp, rq = structure_report(p, cap), structure_report(q, cap)
    if rp.rare != rq.rare:
        return _fail("rare_set", set(rp.rare), set(rq.rare), "rare letter")
    if rp.arrow.pairs != rq.arrow.pairs:
        return _fail("arrow", set(rp.arrow.pairs), set(rq.arrow.pairs), "pair")
    return DecisionReport("equal")


def explain(p: Polynomial, q: Polynomial, cap: int = STRUCTURE_CAP) -> DecisionReport:
    """``decide_b0`` plus the first oracle counterexample when the sides differ."""
    rep = decide_b0(p, q, cap)
    if rep.equal:
        return rep
    m = builtin_b0()
    v = counterexample(m, p, q)
    shown = None if v is None else format_valuation(m, v)
    return DecisionReport(rep.verdict, rep.failed_condition, rep.detail, rep.only_in_lhs, rep.only_in_rhs, shown)
