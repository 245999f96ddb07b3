"""The three-condition decision procedure against brute-force evaluation.

Run: python demos/decision_vs_oracle.py [n]
"""

import random
import sys
import time
from collections import Counter

from bzero.decision import decide_b0
from bzero.models import builtin_b0, holds_identity
from bzero.terms import Polynomial

n = int(sys.argv[1]) if len(sys.argv) > 1 else 2000
rng = random.Random(0)
B0 = builtin_b0()


def poly():
    letters = "xyzt"[: rng.randint(1, 4)]
    return Polynomial(tuple(rng.choice(letters) for _ in range(rng.randint(1, 4))) for _ in range(rng.randint(1, 3)))


tally = Counter()
t0 = time.perf_counter()
for _ in range(n):
    p = poly()
    q = p + poly() if rng.random() < 0.5 else poly()
    rep = decide_b0(p, q)
    truth = holds_identity(B0, p, q)
    tally["agree" if rep.equal == truth else "disagree"] += 1
    tally[rep.failed_condition or "equal"] += 1
print(f"{n} pairs in {time.perf_counter() - t0:.1f}s")
for k, v in tally.most_common():
    print(f"  {k:<10} {v}")
