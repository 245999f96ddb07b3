"""Small ai-semirings that satisfy every axiom schema but not all of B0.

Each table below satisfies the six ai-semiring axioms and every instance of
the basis (checked in ``tests/test_proofs.py``), so whatever fails in one of
them has no certificate.  Each also refutes an identity that holds in B0,
e.g. ``y + zx^2 = y + zx^2 + yx`` fails in ``W1`` at ``y=b, z=a, x=d``.
They were found by a finite-model search and are stored as plain data.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional, Tuple

from ..models import Model, Valuation, counterexample, make_model
from ..terms import Polynomial

_TABLES = {
    # y + zx^2 <= yx
    "W1": (
        [[0, 1, 2, 2], [1, 1, 2, 2], [2, 2, 2, 2], [2, 2, 2, 3]],
        [[2, 2, 2, 0], [2, 2, 2, 2], [2, 2, 2, 2], [2, 2, 2, 3]],
    ),
    # t + x + yx <= yt
    "W2": (
        [[0, 2, 2, 3], [2, 1, 2, 2], [2, 2, 2, 2], [3, 2, 2, 3]],
        [[2, 2, 2, 2], [0, 1, 2, 2], [2, 2, 2, 2], [2, 2, 2, 2]],
    ),
    # y + x^2z <= xy
    "W3": (
        [[0, 0, 2, 2], [0, 1, 2, 2], [2, 2, 2, 2], [2, 2, 2, 3]],
        [[2, 2, 2, 2], [2, 2, 2, 2], [2, 2, 2, 2], [2, 1, 2, 3]],
    ),
    # x + y + t^2y <= tx
    "W4": (
        [[0, 2, 2, 0], [2, 1, 2, 2], [2, 2, 2, 2], [0, 2, 2, 3]],
        [[2, 2, 2, 2], [2, 1, 2, 3], [2, 2, 2, 2], [2, 2, 2, 2]],
    ),
    # xy + z^2t <= zxy
    "W5": (
        [[0, 3, 3, 3, 3], [3, 1, 2, 3, 3], [3, 2, 2, 3, 3], [3, 3, 3, 3, 3], [3, 3, 3, 3, 4]],
        [[0, 1, 3, 3, 3], [3, 3, 3, 3, 1], [3, 3, 3, 3, 2], [3, 3, 3, 3, 3], [3, 3, 3, 3, 4]],
    ),
    # tz + x^2y <= xtz
    "W6": (
        [[0, 0, 4, 4, 4], [0, 1, 4, 4, 4], [4, 4, 2, 4, 4], [4, 4, 4, 3, 4], [4, 4, 4, 4, 4]],
        [[4, 4, 4, 0, 4], [4, 4, 4, 1, 4], [4, 1, 2, 4, 4], [4, 4, 4, 3, 4], [4, 4, 4, 4, 4]],
    ),
    # y + zt^2 + yx^2 <= zx^2t^2: idempotents d, e with y d = y and z e = z
    "W7": (
        [[0, 4, 5, 5, 4, 5], [4, 1, 5, 5, 4, 5], [5, 5, 2, 5, 5, 5], [5, 5, 5, 3, 5, 5], [4, 4, 5, 5, 4, 5], [5, 5, 5, 5, 5, 5]],
        [[5, 5, 0, 5, 5, 5], [5, 5, 5, 1, 5, 5], [5, 5, 2, 5, 5, 5], [5, 5, 5, 3, 5, 5], [5, 5, 5, 5, 5, 5], [5, 5, 5, 5, 5, 5]],
    ),
    # y^2z + tx^2 <= zx^2
    "W8": (
        [[0, 4, 5, 5, 4, 5], [4, 1, 5, 5, 4, 5], [5, 5, 2, 5, 5, 5], [5, 5, 5, 3, 5, 5], [4, 4, 5, 5, 4, 5], [5, 5, 5, 5, 5, 5]],
        [[5, 5, 5, 5, 5, 5], [5, 5, 5, 1, 5, 5], [0, 5, 2, 5, 5, 5], [5, 5, 5, 3, 5, 5], [5, 5, 5, 5, 5, 5], [5, 5, 5, 5, 5, 5]],
    ),
    # x^2z + y^2t <= y^2xz
    "W9": (
        [[0, 4, 5, 5, 4, 5], [4, 1, 5, 5, 4, 5], [5, 5, 2, 5, 5, 5], [5, 5, 5, 3, 5, 5], [4, 4, 5, 5, 4, 5], [5, 5, 5, 5, 5, 5]],
        [[5, 5, 5, 5, 5, 5], [5, 5, 5, 5, 5, 5], [0, 5, 2, 5, 5, 5], [5, 1, 5, 3, 5, 5], [5, 5, 5, 5, 5, 5], [5, 5, 5, 5, 5, 5]],
    ),
    # x^2t + xzy^2 <= xty
    "W10": (
        [[0, 4, 5, 5, 4, 5], [4, 1, 5, 5, 4, 5], [5, 5, 2, 5, 5, 5], [5, 5, 5, 3, 5, 5], [4, 4, 5, 5, 4, 5], [5, 5, 5, 5, 5, 5]],
        [[5, 5, 5, 0, 5, 5], [5, 5, 5, 5, 5, 5], [0, 1, 2, 5, 4, 5], [5, 5, 5, 3, 5, 5], [5, 5, 5, 5, 5, 5], [5, 5, 5, 5, 5, 5]],
    ),
}


@lru_cache(maxsize=None)
def countermodels() -> Tuple[Model, ...]:
    out = []
    for name, (add, mul) in _TABLES.items():
        labels = "abcdefgh"[: len(add)]
        out.append(make_model(name, list(labels), add, mul))
    return tuple(out)


def refutation(lhs: Polynomial, rel: str, rhs: Polynomial) -> Optional[Tuple[Model, Valuation]]:
    """A stored countermodel and valuation falsifying the claim, if any."""
    target = rhs if rel == "eq" else lhs + rhs
    for m in countermodels():
        v = counterexample(m, lhs, target)
        if v is not None:
            return m, v
    return None
