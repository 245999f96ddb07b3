"""Shared generators and an independent B0 oracle for the test suite.

The oracle multiplies explicit 2x2 0/1 matrices and adds by the rule
"equal stays, distinct gives zero"; it shares no code with ``bzero.models``.
"""

from __future__ import annotations

import itertools
import random

from hypothesis import strategies as st

from bzero.terms import Polynomial

LETTERS = "xyzt"

ZERO = ((0, 0), (0, 0))
B0_MATRICES = {
    "0": ZERO,
    "e11": ((1, 0), (0, 0)),
    "e12": ((0, 1), (0, 0)),
    "e22": ((0, 0), (0, 1)),
}


def matmul(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2))


def matadd(a, b):
    return a if a == b else ZERO


def oracle_value(p: Polynomial, v):
    total = None
    for w in p.summands:
        val = v[w[0]]
        for a in w[1:]:
            val = matmul(val, v[a])
        total = val if total is None else matadd(total, val)
    return total


def oracle_equal(p: Polynomial, q: Polynomial) -> bool:
    letters = sorted(p.content() | q.content())
    for combo in itertools.product(B0_MATRICES.values(), repeat=len(letters)):
        v = dict(zip(letters, combo))
        if oracle_value(p, v) != oracle_value(q, v):
            return False
    return True


def oracle_leq(p: Polynomial, q: Polynomial) -> bool:
    return oracle_equal(p + q, p)


def random_word(rng: random.Random, letters=LETTERS, max_len=4):
    return tuple(rng.choice(letters) for _ in range(rng.randint(1, max_len)))


def random_polynomial(rng: random.Random, letters=LETTERS, max_summands=3, max_len=4) -> Polynomial:
    alpha = letters[: rng.randint(1, len(letters))]
    return Polynomial(random_word(rng, alpha, max_len) for _ in range(rng.randint(1, max_summands)))


words = st.lists(st.sampled_from(LETTERS), min_size=1, max_size=4).map(tuple)
polynomials = st.lists(words, min_size=1, max_size=3).map(Polynomial)
small_words = st.lists(st.sampled_from("xyz"), min_size=1, max_size=3).map(tuple)
small_polynomials = st.lists(small_words, min_size=1, max_size=3).map(Polynomial)
