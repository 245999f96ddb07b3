"""Derivable upper words of a polynomial, found by forward saturation.

Starting from the summands of ``q``, new upper words are produced with the
word-level moves the certificate generator replays:

* cross      ``a y b, c y d  =>  a y d``                      CROSS
* delete     ``a z z b  =>  a b``                              DERIVED_8
* square     ``a B c, a A B c  =>  a A A B c``                 SQE
* merge      ``a X b, a Y Y b  =>  a X X Y Y b``               SQS
* rook       ``X Y, Z Y, Z T  =>  X T``                        ROOK

Words are kept as normal forms (``structure.word_normal_form``); a move on a
normal form may rearrange one square block first.  Saturation runs only until the
witness a query asks for appears; the recipes are replayed into
certificate lines by ``generator``.  Distinct words are processed shortest
first, so witnesses tend to be short.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from ..structure import STRUCTURE_CAP, blocks, structure_report, word_normal_form
from ..terms import Polynomial, Word, render_word

MAX_NODES = 50_000


class SaturationError(RuntimeError):
    """The closure ran dry before covering the semantic facts."""


@dataclass(frozen=True)
class Recipe:
    kind: str
    premises: Tuple[Word, ...]
    params: Tuple[int, ...]
    result: Word


def _render_blocks(items) -> Word:
    out = []
    for kind, letters in items:
        for a in sorted(letters):
            out += [a, a] if kind == "square" else [a]
    return tuple(out)


def split_at_block(w: Word, y: str):
    """``(prefix, kind, rest_of_block, suffix)`` for the block of ``w`` holding ``y``."""
    items = blocks(w)
    for t, (kind, letters) in enumerate(items):
        if y in letters:
            rest = tuple(a for a in sorted(letters - {y}) for _ in (0, 1))
            return _render_blocks(items[:t]), kind, rest, _render_blocks(items[t + 1:])
    raise KeyError(y)


def occurrences(w: Word, y: str) -> List[Tuple[Word, int]]:
    """Representatives of ``w`` with a chosen occurrence of ``y`` in them."""
    pre, kind, rest, suf = split_at_block(w, y)
    if kind == "single":
        return [(w, len(pre))]
    first = pre + (y, y) + rest + suf
    out = [(first, len(pre)), (first, len(pre) + 1)]
    if rest:
        last = pre + rest + (y, y) + suf
        out += [(last, len(pre) + len(rest)), (last, len(pre) + len(rest) + 1)]
    return out


def word_facts(w: Word):
    """Non-rare letters and ordered pairs exhibited by a normal-form word."""
    items = blocks(w)
    nr = set()
    pairs = set()
    for t, (kind, letters) in enumerate(items):
        if kind == "square":
            nr |= letters
            pairs |= {(a, c) for a in letters for c in letters if a != c}
        for kind2, later in items[t + 1:]:
            pairs |= {(a, c) for a in letters for c in later if a != c}
    return nr, pairs


def ordered_witness(w: Word, x: str, y: str) -> Tuple[Word, int, int]:
    """A representative of ``w`` with ``x`` at index i before ``y`` at index j."""
    if x == y:
        pre, kind, rest, suf = split_at_block(w, x)
        rep = pre + (x, x) + rest + suf
        return rep, len(pre), len(pre) + 1
    items = blocks(w)
    bx = next(t for t, (_, ls) in enumerate(items) if x in ls)
    by = next(t for t, (_, ls) in enumerate(items) if y in ls)
    if bx == by:
        letters = items[bx][1]
        rest = tuple(a for a in sorted(letters - {x, y}) for _ in (0, 1))
        pre, suf = _render_blocks(items[:bx]), _render_blocks(items[bx + 1:])
        rep = pre + (x, x, y, y) + rest + suf
        return rep, len(pre) + 1, len(pre) + 2
    if bx > by:
        raise ValueError(f"{render_word(w)} has no {x} before {y}")
    i = max(k for k, a in enumerate(w) if a == x)
    j = min(k for k, a in enumerate(w) if a == y)
    return w, i, j


class WitnessLibrary:
    """Saturation state for one polynomial ``q``; grows on demand."""

    def __init__(self, q: Polynomial, cap: int = STRUCTURE_CAP, max_nodes: int = MAX_NODES):
        self.q = q
        self.cap = cap
        self.nodes: Dict[Word, Recipe] = {}
        self.order: List[Word] = []
        self.nr_witness: Dict[str, Word] = {}
        self.arr_witness: Dict[Tuple[str, str], Word] = {}
        self.max_nodes = max_nodes
        self._queue: List[Tuple[int, Word]] = []
        self._processed: List[Word] = []
        self._known = set()
        self._by_prefix: Dict[Word, List[Word]] = {}
        self._by_suffix: Dict[Word, List[Word]] = {}
        self._goal = None
        for u in q.summands:
            self._add(Recipe("summand", (), (), u))

    # queries --------------------------------------------------------------

    def nr_word(self, x: str) -> Optional[Word]:
        """A derived word with ``x`` squared, or None once the closure is exhausted."""
        self._run(lambda: x in self.nr_witness)
        return self.nr_witness.get(x)

    def arrow_word(self, x: str, y: str) -> Optional[Word]:
        """A derived word with ``x`` before ``y`` (``x != y``), or None."""
        self._run(lambda: (x, y) in self.arr_witness)
        return self.arr_witness.get((x, y))

    def upper_word(self, w: Word) -> bool:
        """Whether the normal form of ``w`` is reachable."""
        nf = word_normal_form(w)
        self._run(lambda: nf in self.nodes)
        return nf in self.nodes

    def missing_facts(self) -> List[tuple]:
        """Semantic facts of ``q`` that no derivable word exhibits (saturates fully)."""
        rep = structure_report(self.q, self.cap)
        need_nr = rep.content - rep.rare
        need_arr = {(x, y) for x, y in rep.arrow.pairs if x != y}
        self._run(lambda: need_nr <= self.nr_witness.keys() and need_arr <= self.arr_witness.keys())
        out = [("nonrare", x) for x in sorted(need_nr - self.nr_witness.keys())]
        return out + [("arrow",) + pr for pr in sorted(need_arr - self.arr_witness.keys())]

    @property
    def exhausted(self) -> bool:
        return not self._queue

    # bookkeeping ----------------------------------------------------------

    def _add(self, recipe: Recipe) -> None:
        nf = word_normal_form(recipe.result)
        if nf in self.nodes:
            return
        if len(self.nodes) >= self.max_nodes:
            raise SaturationError(f"more than {self.max_nodes} upper words for {self.q}")
        self.nodes[nf] = recipe
        self.order.append(nf)
        nr, pairs = word_facts(nf)
        for a in nr:
            self.nr_witness.setdefault(a, nf)
        for pr in pairs:
            self.arr_witness.setdefault(pr, nf)
        heapq.heappush(self._queue, (len(nf), nf))

    def _run(self, goal) -> None:
        self._goal = goal
        try:
            while not goal() and self._queue:
                _, g = heapq.heappop(self._queue)
                self._process(g)
        finally:
            self._goal = None

    def _process(self, g: Word) -> None:
        self._processed.append(g)
        self._known.add(g)
        for s in range(1, len(g)):
            self._by_prefix.setdefault(g[:s], []).append(g)
            self._by_suffix.setdefault(g[s:], []).append(g)
        moves = [self._deletions(g)]
        for h in self._processed:
            for a, b in ((g, h), (h, g)) if h != g else ((g, g),):
                moves += [self._crossings(a, b), self._squarings(a, b), self._merges(a, b), self._rooks(a, b)]
        moves.append(self._rooks_middle(g))
        # every move is kept even after the goal appears, so ``g`` is never revisited
        for gen in moves:
            for r in gen:
                self._add(r)

    # moves ----------------------------------------------------------------

    def _deletions(self, w: Word):
        for kind, letters in blocks(w):
            if kind != "square":
                continue
            for z in sorted(letters):
                pre, _, rest, suf = split_at_block(w, z)
                if pre or rest or suf:
                    yield Recipe("del", (pre + (z, z) + rest + suf,), (len(pre),), pre + rest + suf)

    def _crossings(self, a: Word, b: Word):
        for y in sorted(set(a) & set(b)):
            for ra, ia in occurrences(a, y):
                for rb, ib in occurrences(b, y):
                    yield Recipe("cross", (ra, rb), (ia, ib), ra[:ia] + (y,) + rb[ib + 1:])

    def _squarings(self, short: Word, long: Word):
        m = len(long) - len(short)
        if m < 1:
            return
        for k in range(len(short) + 1):
            if long[:k] == short[:k] and long[k + m:] == short[k:]:
                ins = long[k:k + m]
                yield Recipe("sqe", (short, long), (k, m), short[:k] + ins + ins + short[k:])

    def _merges(self, a: Word, b: Word):
        items = blocks(b)
        for t, (kind, letters) in enumerate(items):
            if kind != "square":
                continue
            pre, suf = _render_blocks(items[:t]), _render_blocks(items[t + 1:])
            if len(a) <= len(pre) + len(suf) or a[:len(pre)] != pre or a[len(a) - len(suf):] != suf:
                continue
            x = a[len(pre):len(a) - len(suf)]
            y = tuple(sorted(letters))
            rep = pre + y + y + suf
            if word_normal_form(rep) != b:
                continue
            yield Recipe("sqs", (a, rep), (len(pre), len(suf), len(y)), pre + x + x + y + y + suf)

    def _rooks(self, xy: Word, zt: Word):
        for s in range(1, len(xy)):
            y = xy[s:]
            for t in range(1, len(zt)):
                zy = zt[:t] + y
                if word_normal_form(zy) in self._known:
                    yield Recipe("rook", (xy, zy, zt), (s, t), xy[:s] + zt[t:])

    def _rooks_middle(self, g: Word):
        for t in range(1, len(g)):
            z, y = g[:t], g[t:]
            for xy in self._by_suffix.get(y, ()):
                for zt in self._by_prefix.get(z, ()):
                    s = len(xy) - len(y)
                    yield Recipe("rook", (xy, g, zt), (s, t), xy[:s] + zt[t:])


@lru_cache(maxsize=2048)
def witness_library(q: Polynomial, cap: int = STRUCTURE_CAP) -> WitnessLibrary:
    return WitnessLibrary(q, cap)
