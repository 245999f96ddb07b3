"""Semigroup rewriting of words with x^2 = x^3 and x^2y^2 = y^2x^2 = xyx.

``normalize`` derives ``w = nf(w)`` as a chain of elementary steps, each an
axiom instance in a two-sided context:

    a x^3 b   -> a x^2 b          (PER)
    a x u x b -> a x x u u b      (SEM_C; consecutive occurrences of x)
    a xxyy b  -> a yyxx b         (SEM_A; sorts adjacent squares)
"""

from __future__ import annotations

from typing import Optional, Tuple

from ..structure import word_normal_form
from ..terms import Word, render_word
from .builder import ProofBuilder, poly

MAX_STEPS = 10_000


class RewriteError(RuntimeError):
    pass


def _step(w: Word):
    """One rewrite ``(schema, subst, sym, left, redex, right, result)`` or None."""
    n = len(w)
    for i in range(n - 2):
        if w[i] == w[i + 1] == w[i + 2]:
            x = w[i]
            return ("PER", {"x": (x,)}, True, w[:i], w[i + 3:], w[:i] + (x, x) + w[i + 3:])
    last = {}
    best = None
    for j, a in enumerate(w):
        i = last.get(a)
        if i is not None and j - i >= 2:
            best = (i, j)
            break
        last[a] = j
    if best:
        i, j = best
        x, u = w[i], w[i + 1:j]
        return ("SEM_C", {"x": (x,), "y": u}, True, w[:i], w[j + 1:], w[:i] + (x, x) + u + u + w[j + 1:])
    for i in range(n - 3):
        x, y = w[i], w[i + 2]
        if w[i + 1] == x and w[i + 3] == y and y < x and (i == 0 or w[i - 1] != x):
            return ("SEM_A", {"x": (x,), "y": (y,)}, False, w[:i], w[i + 4:], w[:i] + (y, y, x, x) + w[i + 4:])
    return None


def normalize(b: ProofBuilder, w: Word) -> Tuple[Word, Optional[int]]:
    """Derive ``w = nf(w)``; returns ``(nf, line)`` with ``line`` None if ``w`` is normal."""
    w = tuple(w)
    target = word_normal_form(w)
    ref = None
    cur = w
    for _ in range(MAX_STEPS):
        if cur == target:
            return target, ref
        step = _step(cur)
        if step is None:
            raise RewriteError(f"stuck at {render_word(cur)} normalizing {render_word(w)}")
        schema, subst, flip, left, right, nxt = step
        ax = b.axiom(schema, **subst)
        if flip:
            ax = b.sym(ax)
        line = b.context(ax, left, right)
        ref = line if ref is None else b.trans(ref, line)
        cur = nxt
    raise RewriteError(f"no normal form for {render_word(w)} within {MAX_STEPS} steps")


def words_eq(b: ProofBuilder, u: Word, v: Word) -> Optional[int]:
    """Line proving ``u = v`` (None when the words coincide)."""
    u, v = tuple(u), tuple(v)
    if u == v:
        return None
    nu, lu = normalize(b, u)
    nv, lv = normalize(b, v)
    if nu != nv:
        raise RewriteError(f"{render_word(u)} and {render_word(v)} have different normal forms")
    if lv is None:
        return lu
    back = b.sym(lv)
    return back if lu is None else b.trans(lu, back)


def transport(b: ProofBuilder, i: int, target: Word) -> int:
    """From ``p R w`` (line ``i``) derive ``p R target`` for ``target = w``."""
    c = b.claim(i)
    (w,) = c.rhs.summands
    eq = words_eq(b, w, target)
    return i if eq is None else b.trans(i, eq)


def eq_sides_line(b: ProofBuilder, u: Word, v: Word) -> int:
    """``u <= v`` for equivalent words, as a line."""
    eq = words_eq(b, u, v)
    if eq is None:
        return b.refl(poly(u), poly(u))
    return eq
