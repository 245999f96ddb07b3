"""Syntactic invariants of a polynomial: upper words, rare letters, arrows.

A word ``w`` is an *upper word* of ``p`` when ``B0 |= p <= w``.  Every word
is equivalent in B0 to a normal-form word (each letter at most twice, a
doubled letter always as an adjacent square), so the sweeps below run over
normal forms only; ``tests/test_acceptance.py`` re-checks that reduction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .models import ResourceError, builtin_b0, eval_all, valuation_grid
from .terms import Polynomial, Word, render_word

STRUCTURE_CAP = 6

B0 = builtin_b0()
ZERO, E11, E12, E22 = (B0.index(a) for a in ("0", "e11", "e12", "e22"))


def _check_cap(n, cap):
    if n > cap:
        raise ResourceError(f"{n} letters exceed the structure cap of {cap}")


def _nf_index_words(k: int) -> List[Tuple[int, ...]]:
    out = []
    for size in range(1, k + 1):
        for perm in itertools.permutations(range(k), size):
            for squares in itertools.product((1, 2), repeat=size):
                out.append(tuple(i for i, s in zip(perm, squares) for _ in range(s)))
    out.sort(key=lambda w: (len(w), w))
    return out


@lru_cache(maxsize=None)
def _nf_tables(k: int):
    words = _nf_index_words(k)
    by_len: Dict[int, List[int]] = {}
    for n, w in enumerate(words):
        by_len.setdefault(len(w), []).append(n)
    arrays = {L: (np.array(ids), np.array([words[i] for i in ids])) for L, ids in by_len.items()}
    return words, arrays


def normal_form_words(letters, cap: int = STRUCTURE_CAP) -> Iterator[Word]:
    """All normal-form words over ``letters`` in (length, lexicographic) order."""
    letters = sorted(letters)
    if not letters:
        raise ValueError("normal forms need a nonempty alphabet")
    _check_cap(len(letters), cap)
    words, _ = _nf_tables(len(letters))
    for w in words:
        yield tuple(letters[i] for i in w)


def upper_words(p: Polynomial, cap: int = STRUCTURE_CAP) -> List[Word]:
    """Normal-form words ``w`` over ``c(p)`` with ``B0 |= p <= w``."""
    return list(_upper(p, cap))


@lru_cache(maxsize=8192)
def _upper(p: Polynomial, cap: int) -> Tuple[Word, ...]:
    letters = tuple(sorted(p.content()))
    k = len(letters)
    _check_cap(k, cap)
    grid = valuation_grid(B0.size, k)
    pv = eval_all(B0, p, letters, grid)
    # p <= w fails only where p is nonzero and w differs from it.
    live = pv != ZERO
    sub = grid[:, live]
    target = pv[live]
    words, arrays = _nf_tables(k)
    keep = np.zeros(len(words), dtype=bool)
    mul = B0.mul
    for L, (ids, arr) in arrays.items():
        for start in range(0, len(ids), 4096):
            chunk = arr[start:start + 4096]
            vals = sub[chunk[:, 0]]
            for j in range(1, L):
                vals = mul[vals, sub[chunk[:, j]]]
            keep[ids[start:start + 4096]] = (vals == target).all(axis=1)
    return tuple(tuple(letters[i] for i in words[n]) for n in np.nonzero(keep)[0])


def rare_letters(p: Polynomial, cap: int = STRUCTURE_CAP) -> FrozenSet[str]:
    return structure_report(p, cap).rare


def is_degenerate(p: Polynomial, cap: int = STRUCTURE_CAP) -> bool:
    return not rare_letters(p, cap)


@dataclass(frozen=True)
class ArrowRelation:
    domain: FrozenSet[str]
    pairs: FrozenSet[Tuple[str, str]]
    witness: Mapping[Tuple[str, str], Word] = field(compare=False, hash=False)

    def __contains__(self, pair) -> bool:
        return tuple(pair) in self.pairs

    def __call__(self, x: str, y: str) -> bool:
        return (x, y) in self.pairs

    def restrict(self, letters) -> FrozenSet[Tuple[str, str]]:
        letters = set(letters)
        return frozenset((x, y) for x, y in self.pairs if x in letters and y in letters)


@dataclass(frozen=True)
class RarePoset:
    carrier: Tuple[str, ...]
    order: FrozenSet[Tuple[str, str]]

    @property
    def empty(self) -> bool:
        return not self.carrier

    def leq(self, x, y) -> bool:
        return (x, y) in self.order

    def lt(self, x, y) -> bool:
        return x != y and (x, y) in self.order

    def comparable(self, x, y) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    @property
    def covers(self) -> Tuple[Tuple[str, str], ...]:
        """Pairs ``(x, z)`` with ``z`` covering ``x``."""
        out = []
        for x in self.carrier:
            for z in self.carrier:
                if self.lt(x, z) and not any(self.lt(x, t) and self.lt(t, z) for t in self.carrier):
                    out.append((x, z))
        return tuple(out)


def _subsets(items):
    for r in range(len(items), -1, -1):
        yield from itertools.combinations(items, r)


def _maximal(P: RarePoset, good) -> List[FrozenSet[str]]:
    found: List[FrozenSet[str]] = []
    for sub in _subsets(P.carrier):
        s = frozenset(sub)
        if good(sub) and not any(s < t for t in found):
            found.append(s)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def maximal_chains(P: RarePoset) -> List[FrozenSet[str]]:
    """Maximal chains; the empty poset yields ``[frozenset()]``."""
    return _maximal(P, lambda s: all(P.comparable(a, b) for a, b in itertools.combinations(s, 2)))


def maximal_antichains(P: RarePoset) -> List[FrozenSet[str]]:
    return _maximal(P, lambda s: not any(P.comparable(a, b) for a, b in itertools.combinations(s, 2)))


def is_maximal_antichain(P: RarePoset, A) -> bool:
    A = set(A)
    if not A <= set(P.carrier):
        return False
    if any(P.comparable(a, b) for a, b in itertools.combinations(sorted(A), 2)):
        return False
    return all(any(P.comparable(x, a) for a in A) for x in P.carrier if x not in A)


def is_chain(P: RarePoset, C) -> bool:
    return all(P.comparable(a, b) for a, b in itertools.combinations(sorted(C), 2))


def is_maximal_chain(P: RarePoset, C) -> bool:
    C = set(C)
    if not C <= set(P.carrier) or not is_chain(P, C):
        return False
    return not any(is_chain(P, C | {x}) for x in P.carrier if x not in C)


@dataclass(frozen=True)
class StructureReport:
    polynomial: Polynomial
    content: FrozenSet[str]
    upper: Tuple[Word, ...]
    rare: FrozenSet[str]
    arrow: ArrowRelation
    poset: RarePoset

    @property
    def degenerate(self) -> bool:
        return not self.rare

    def to_json(self) -> dict:
        P = self.poset
        return {
            "polynomial": str(self.polynomial),
            "content": sorted(self.content),
            "rare": sorted(self.rare),
            "degenerate": self.degenerate,
            "arrow": [
                {"from": x, "to": y, "witness": render_word(self.arrow.witness[(x, y)]) if x != y else None}
                for x, y in sorted(self.arrow.pairs)
            ],
            "covers": [list(c) for c in P.covers],
            "maximal_chains": [sorted(c) for c in maximal_chains(P)] if not P.empty else [],
            "maximal_antichains": [sorted(a) for a in maximal_antichains(P)] if not P.empty else [],
            "upper_words": len(self.upper),
        }


@lru_cache(maxsize=8192)
def structure_report(p: Polynomial, cap: int = STRUCTURE_CAP) -> StructureReport:
    letters = frozenset(p.content())
    ups = _upper(p, cap)
    doubled = {a for w in ups for a in set(w) if w.count(a) > 1}
    rare = letters - doubled
    pairs = {(a, a) for a in letters}
    witness: Dict[Tuple[str, str], Word] = {}
    for w in ups:
        for i in range(len(w)):
            for j in range(i + 1, len(w)):
                pair = (w[i], w[j])
                if pair[0] != pair[1] and pair not in witness:
                    witness[pair] = w
                    pairs.add(pair)
    rel = ArrowRelation(letters, frozenset(pairs), witness)
    poset = RarePoset(tuple(sorted(rare)), rel.restrict(rare))
    return StructureReport(p, letters, ups, frozenset(rare), rel, poset)


def arrow(p: Polynomial, cap: int = STRUCTURE_CAP) -> ArrowRelation:
    return structure_report(p, cap).arrow


def rare_poset(p: Polynomial, cap: int = STRUCTURE_CAP) -> RarePoset:
    return structure_report(p, cap).poset


def val_function(p: Polynomial, A, cap: int = STRUCTURE_CAP) -> Dict[str, int]:
    """The valuation attached to a maximal antichain ``A`` of the rare poset.

    ``e12`` on ``A``, ``e11`` on letters below some element of ``A``,
    ``e22`` elsewhere.
    """
    rep = structure_report(p, cap)
    if rep.degenerate:
        raise ValueError("val_function needs a non-degenerate polynomial")
    if not is_maximal_antichain(rep.poset, A):
        raise ValueError(f"{sorted(A)} is not a maximal antichain of the rare poset")
    A = set(A)
    out = {}
    for x in sorted(rep.content):
        if x in A:
            out[x] = E12
        elif any(rep.arrow(x, y) for y in A):
            out[x] = E11
        else:
            out[x] = E22
    return out


def word_normal_form(w: Word) -> Word:
    """Canonical normal form of ``w`` modulo x^2 = x^3, x^2y^2 = y^2x^2 = xyx.

    Letters between the first and last occurrence of any repeated letter
    become squares; adjacent squares merge into one block, sorted by name.
    """
    n = len(w)
    first: Dict[str, int] = {}
    last: Dict[str, int] = {}
    for i, a in enumerate(w):
        first.setdefault(a, i)
        last[a] = i
    covered = [False] * n
    for a in first:
        if first[a] != last[a]:
            for i in range(first[a], last[a] + 1):
                covered[i] = True
    out: List[str] = []
    i = 0
    while i < n:
        if not covered[i]:
            out.append(w[i])
            i += 1
            continue
        j = i
        block = set()
        while j < n and covered[j]:
            block.add(w[j])
            j += 1
        for a in sorted(block):
            out += [a, a]
        i = j
    # squares separated only by other squares merge into one block
    return _merge_blocks(out)


def blocks(w: Word) -> List[Tuple[str, FrozenSet[str]]]:
    """Split a normal-form word into ('single', {a}) / ('square', K) items."""
    out: List[Tuple[str, FrozenSet[str]]] = []
    i = 0
    while i < len(w):
        if i + 1 < len(w) and w[i + 1] == w[i]:
            if out and out[-1][0] == "square":
                out[-1] = ("square", out[-1][1] | {w[i]})
            else:
                out.append(("square", frozenset({w[i]})))
            i += 2
        else:
            out.append(("single", frozenset({w[i]})))
            i += 1
    return out


def _merge_blocks(w: List[str]) -> Word:
    out: List[str] = []
    for kind, letters in blocks(tuple(w)):
        for a in sorted(letters):
            out += [a, a] if kind == "square" else [a]
    return tuple(out)
