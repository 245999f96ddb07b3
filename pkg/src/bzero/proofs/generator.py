"""Certificate generation for B0-valid identities.

``prove_leq_word(q, w)`` builds ``q <= w`` by prefix induction on ``w``:
the first letter comes from a summand of ``q`` whose prefix is squared and
dropped, each further letter is attached by crossing with an ordering
witness, and the leftover tail is squared and dropped at the end.  The
witness words are derived by ``library.WitnessLibrary``.

Derivability from the axiom basis is strictly weaker than validity in B0,
so generation can fail on valid input.  A goal refuted by one of the stored
countermodels raises ``NotDerivableError``; any other failure to find a
witness raises ``DerivationNotFound``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..decision import decide_b0
from ..models import builtin_b0, holds_leq
from ..structure import STRUCTURE_CAP, word_normal_form
from ..terms import Polynomial, Word, render_word
from .axioms import cross_name
from .builder import DEFAULT_LINE_LIMIT, ProofBuilder, poly
from .countermodels import refutation
from .kernel import Certificate, Claim
from .library import Recipe, WitnessLibrary, ordered_witness
from .rewriting import transport, words_eq

B0 = builtin_b0()


class GenerationError(RuntimeError):
    pass


class DerivationNotFound(GenerationError):
    """No witness was found although none is known to be missing."""


class NotDerivableError(GenerationError):
    """The goal fails in a countermodel of the basis, so no certificate exists."""

    def __init__(self, goal: Claim, model, valuation):
        self.goal, self.model, self.valuation = goal, model, valuation
        vals = ", ".join(f"{k}={model.elements[v]}" for k, v in sorted(valuation.items()))
        super().__init__(f"{goal} fails in countermodel {model.name} at {vals}")


# --------------------------------------------------------------------------
# a proof session shares one builder and one witness library per polynomial


class Session:
    def __init__(self, line_limit: int = DEFAULT_LINE_LIMIT, cap: int = STRUCTURE_CAP):
        self.b = ProofBuilder(line_limit)
        self.cap = cap
        self.libs: Dict[Polynomial, WitnessLibrary] = {}
        self.node_lines: Dict[Tuple[Polynomial, Word], int] = {}

    def library(self, q: Polynomial) -> WitnessLibrary:
        if q not in self.libs:
            self.libs[q] = WitnessLibrary(q, self.cap)
        return self.libs[q]

    # replaying library recipes ---------------------------------------------

    def upper_line(self, q: Polynomial, w: Word) -> int:
        """Line ``q <= w`` for a word whose normal form the library reached."""
        nf = word_normal_form(w)
        return transport(self.b, self._node_line(q, nf), tuple(w))

    def _node_line(self, q: Polynomial, nf: Word) -> int:
        key = (q, nf)
        if key in self.node_lines:
            return self.node_lines[key]
        lib = self.library(q)
        # iterative post-order over recipe premises; recipes only cite earlier nodes
        stack = [nf]
        while stack:
            top = stack[-1]
            if (q, top) in self.node_lines:
                stack.pop()
                continue
            recipe = lib.nodes[top]
            pending = [word_normal_form(r) for r in recipe.premises if (q, word_normal_form(r)) not in self.node_lines]
            if pending:
                stack.extend(pending)
                continue
            line = self._replay(q, recipe)
            self.node_lines[(q, top)] = transport(self.b, line, top)
            stack.pop()
        return self.node_lines[key]

    def _premise(self, q, w):
        return transport(self.b, self.node_lines[(q, word_normal_form(w))], tuple(w))

    def _replay(self, q: Polynomial, r: Recipe) -> int:
        b = self.b
        if r.kind == "summand":
            return b.refl(q, poly(r.result))
        if r.kind == "del":
            (rep,), (k,) = r.premises, r.params
            return self.delete_square(self._premise(q, rep), k)
        if r.kind == "cross":
            (ra, rb), (ia, ib) = r.premises, r.params
            return self.cross(self._premise(q, ra), ia, self._premise(q, rb), ib)
        if r.kind == "sqe":
            (short, long), (k, m) = r.premises, r.params
            both = b.combine(self._premise(q, long), self._premise(q, short))
            ins, rest = long[k:k + m], short[k:]
            if rest:
                eq = b.mul_left(b.axiom("SQE_L", y=ins, x=rest), short[:k])
            else:
                eq = b.axiom("SQE_R", x=short, y=ins)
            return b.trans(both, eq)
        if r.kind == "sqs":
            (a, rep), (lp, ls, ly) = r.premises, r.params
            both = b.combine(self._premise(q, a), self._premise(q, rep))
            x, y = a[lp:len(a) - ls], rep[lp:lp + ly]
            eq = b.context(b.axiom("SQS", x=x, y=y), rep[:lp], rep[len(rep) - ls:])
            return b.trans(both, eq)
        if r.kind == "rook":
            (xy, zy, zt), (s, t) = r.premises, r.params
            three = b.combine_all([self._premise(q, xy), self._premise(q, zy), self._premise(q, zt)])
            ax = b.axiom("ROOK", x=xy[:s], y=xy[s:], z=zt[:t], t=zt[t:])
            return b.trans(three, ax)
        raise GenerationError(f"unknown recipe {r.kind}")

    # word-level steps ---------------------------------------------------------

    def cross(self, la: int, ia: int, lb: int, ib: int) -> int:
        """From ``q <= a`` and ``q <= b`` with ``a[ia] == b[ib]`` derive ``q <= a[:ia] y b[ib+1:]``."""
        b = self.b
        (wa,) = b.claim(la).rhs.summands
        (wb,) = b.claim(lb).rhs.summands
        y = wa[ia]
        assert wb[ib] == y
        x1, z1, x2, z2 = wa[:ia], wa[ia + 1:], wb[:ib], wb[ib + 1:]
        both = b.combine(la, lb)
        ax = b.axiom(cross_name(bool(x1), bool(z1), bool(x2), bool(z2)), x1=x1, y=(y,), z1=z1, x2=x2, z2=z2)
        return b.trans(both, ax)

    def delete_square(self, line: int, k: int) -> int:
        """From ``q <= a z z c`` (square at ``k``) derive ``q <= a c``."""
        b = self.b
        (w,) = b.claim(line).rhs.summands
        z, pre, post = w[k:k + 1], w[:k], w[k + 2:]
        assert w[k] == w[k + 1]
        if pre:
            step = b.mul_right(b.d8("right", pre, z), post)
        elif post:
            step = b.d8("left", post, z)
        else:
            raise GenerationError("cannot delete the whole word")
        return b.trans(line, step)

    def drop_squares(self, line: int, start: int, count: int) -> int:
        """Delete ``count`` adjacent squares beginning at ``start``."""
        for _ in range(count):
            line = self.delete_square(line, start)
        return line

    def nr_witness(self, q: Polynomial, x: str) -> "SquareWitness":
        w = self.library(q).nr_word(x)
        if w is None:
            raise DerivationNotFound(f"no derivable word repeats {x} above {q}")
        rep, i, j = ordered_witness(w, x, x)
        return SquareWitness(self.upper_line(q, rep), rep, i, j)

    def arrow_witness(self, q: Polynomial, x: str, y: str) -> "SquareWitness":
        if x == y:
            return self.nr_witness(q, x)
        w = self.library(q).arrow_word(x, y)
        if w is None:
            raise DerivationNotFound(f"no derivable word puts {x} before {y} above {q}")
        rep, i, j = ordered_witness(w, x, y)
        return SquareWitness(self.upper_line(q, rep), rep, i, j)


@dataclass(frozen=True)
class SquareWitness:
    """Line ``q <= u`` with ``u[i]`` and ``u[j]`` the occurrences of interest."""

    line: int
    word: Word
    i: int
    j: int


@dataclass
class SquaringStages:
    """The four displayed stages for squaring one occurrence."""

    summed: int
    rewritten: int
    crossed: int
    squared: int


def square_occurrence(s: Session, line: int, pos: int, wit: SquareWitness) -> SquaringStages:
    """From ``q <= W`` and a witness repeating ``W[pos]`` derive ``q <= W`` with ``W[pos]`` doubled."""
    b = s.b
    (W,) = b.claim(line).rhs.summands
    x = W[pos]
    U, i, j = wit.word, wit.i, wit.j
    assert U[i] == U[j] == x and i < j
    summed = b.combine(line, wit.line)
    u1, u2, u3 = U[:i], U[i + 1:j], U[j + 1:]
    Wp = poly(W)
    if u2:
        # u1 x u2 x u3 = u1 xx u2u2 u3
        eq = b.context(b.sym(b.axiom("SEM_C", x=(x,), y=u2)), u1, u3)
        rewritten = b.trans(summed, b.add_mono(eq, Wp))
    else:
        rewritten = summed
    U2 = u1 + (x, x) + u2 + u2 + u3
    # W + U2 <= W + V with V = W[:pos] x x u2u2 u3
    pair = b.claim(rewritten).rhs
    keep = b.refl(pair, Wp)
    x1, z1, x2, z2 = W[:pos], W[pos + 1:], u1, U2[len(u1) + 1:]
    ax = b.axiom(cross_name(bool(x1), bool(z1), bool(x2), bool(z2)), x1=x1, y=(x,), z1=z1, x2=x2, z2=z2)
    both = b.combine(keep, ax)
    crossed = b.trans(rewritten, both)
    V = W[:pos] + (x,) + z2
    # V + W <= W[:pos] x x W[pos+1:]
    y1, y2 = V[:pos + 1], V[pos + 2:]
    ax2 = b.axiom(cross_name(True, bool(y2), bool(x1), bool(z1)), x1=y1, y=(x,), z1=y2, x2=x1, z2=z1)
    squared = b.trans(crossed, ax2)
    return SquaringStages(summed, rewritten, crossed, squared)


def prove_squaring(s: Session, q: Polynomial, line: int, w1: Word, w2: Word, w3: Word,
                   witnesses: Optional[Mapping[str, SquareWitness]] = None) -> int:
    """From ``q <= w1 w2 w3`` derive ``q <= w1 w2^(2) w3``, one occurrence at a time."""
    w1, w2, w3 = tuple(w1 or ()), tuple(w2), tuple(w3 or ())
    (W,) = s.b.claim(line).rhs.summands
    if W != w1 + w2 + w3:
        raise GenerationError(f"line {line} does not end in {render_word(w1 + w2 + w3)}")
    wits = dict(witnesses or {})
    for k, x in enumerate(w2):
        if x not in wits:
            wits[x] = s.nr_witness(q, x)
        line = square_occurrence(s, line, len(w1) + 2 * k, wits[x]).squared
    return line


def squaring_certificate(p: Polynomial, w1: Word, w2: Word, w3: Word,
                         line_limit: int = DEFAULT_LINE_LIMIT) -> Certificate:
    """Certificate for ``p <= w1 w2^(2) w3`` given that ``p <= w1 w2 w3`` is derivable."""
    w1, w2, w3 = tuple(w1 or ()), tuple(w2), tuple(w3 or ())
    s = Session(line_limit)
    if not s.library(p).upper_word(w1 + w2 + w3):
        raise DerivationNotFound(f"{render_word(w1 + w2 + w3)} is not a derivable upper word of {p}")
    line = prove_squaring(s, p, s.upper_line(p, w1 + w2 + w3), w1, w2, w3)
    (w,) = s.b.claim(line).rhs.summands
    return s.b.certificate(Claim(p, "leq", poly(w)), line)


# --------------------------------------------------------------------------
# prefix induction


def _prove_leq_word(s: Session, q: Polynomial, w: Word) -> int:
    b = s.b
    w = tuple(w)
    if w in q.summands:
        return b.refl(q, poly(w))
    x = w[0]
    u = next((v for v in q.summands if x in v), None)
    if u is None:
        raise GenerationError(f"{x} does not occur in {q}")
    k = u.index(x)
    line = b.refl(q, poly(u))
    if k:
        line = prove_squaring(s, q, line, (), u[:k], u[k:])
        line = s.drop_squares(line, 0, k)
    # line proves q <= w[:n] r
    for n in range(1, len(w)):
        y, x = w[n - 1], w[n]
        wit = s.arrow_witness(q, y, x)
        v, i, j = wit.word, wit.i, wit.j
        vl = wit.line
        if j > i + 1:
            vl = prove_squaring(s, q, vl, v[:i + 1], v[i + 1:j], v[j:])
            vl = s.drop_squares(vl, i + 1, j - i - 1)
        line = s.cross(line, n - 1, vl, i)
    (cur,) = b.claim(line).rhs.summands
    tail = len(cur) - len(w)
    if tail:
        line = prove_squaring(s, q, line, w, cur[len(w):], ())
        line = s.drop_squares(line, len(w), tail)
    return line


def _goal(q, rel, p) -> Claim:
    return Claim(q, rel, p)


def _ensure_derivable(goal: Claim) -> None:
    hit = refutation(goal.lhs, goal.rel, goal.rhs)
    if hit is not None:
        raise NotDerivableError(goal, *hit)


def prove_leq_word(q: Polynomial, w: Word, line_limit: int = DEFAULT_LINE_LIMIT) -> Certificate:
    """Certificate for ``q <= w``; ``w`` must be an upper word of ``q`` in B0."""
    w = tuple(w)
    p = poly(w)
    if not holds_leq(B0, q, p):
        raise ValueError(f"{q} <= {render_word(w)} fails in B0")
    goal = _goal(q, "leq", p)
    _ensure_derivable(goal)
    s = Session(line_limit)
    return s.b.certificate(goal, _prove_leq_word(s, q, w))


def _leq_line(s: Session, q: Polynomial, p: Polynomial) -> int:
    return s.b.combine_all(_prove_leq_word(s, q, w) for w in p.summands)


def prove_leq(p: Polynomial, q: Polynomial, line_limit: int = DEFAULT_LINE_LIMIT) -> Certificate:
    """Certificate for ``p <= q``."""
    if not holds_leq(B0, p, q):
        raise ValueError(f"{p} <= {q} fails in B0")
    goal = _goal(p, "leq", q)
    _ensure_derivable(goal)
    s = Session(line_limit)
    if set(q.summands) <= set(p.summands):
        return s.b.certificate(goal, s.b.refl(p, q))
    return s.b.certificate(goal, _leq_line(s, p, q))


def prove_identity(p: Polynomial, q: Polynomial, line_limit: int = DEFAULT_LINE_LIMIT) -> Certificate:
    """Certificate for ``p = q``."""
    report = decide_b0(p, q)
    if report.verdict != "equal":
        raise ValueError(f"{p} = {q} fails in B0 ({report.detail})")
    goal = _goal(p, "eq", q)
    s = Session(line_limit)
    if p == q:
        return s.b.certificate(goal, s.b.refl(p, p, "eq"))
    _ensure_derivable(goal)
    up = s.b.refl(p, q) if set(q.summands) <= set(p.summands) else _leq_line(s, p, q)
    down = s.b.refl(q, p) if set(p.summands) <= set(q.summands) else _leq_line(s, q, p)
    return s.b.certificate(goal, s.b.antisym(up, down))


def prove_claim(lhs: Polynomial, rel: str, rhs: Polynomial, line_limit: int = DEFAULT_LINE_LIMIT) -> Certificate:
    if rel == "eq":
        return prove_identity(lhs, rhs, line_limit)
    return prove_leq(lhs, rhs, line_limit)
