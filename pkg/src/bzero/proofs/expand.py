"""Rewrite the derived rules of a certificate into primitive steps.

``COMBINE``/``DERIVED_7`` from ``p <= q`` and ``p <= r``::

    p + r <= q + r       ADD_MONO
    p <= p + r           ADD_MONO (adding p to p <= r)
    p <= q + r           TRANS

``DERIVED_8`` (``xy^2 <= x``; the left form is the mirror image)::

    xy + x = xy^2        AXIOM SQE_R
    xy + x = xy^2 + x    ADD_MONO with x
    xy^2 = xy^2 + x      SYM, TRANS
    xy^2 <= x            ACI
"""

from __future__ import annotations

from typing import Dict

from ..terms import Polynomial
from .builder import ProofBuilder
from .kernel import Certificate, Claim

DERIVED_RULES = ("COMBINE", "DERIVED_7", "DERIVED_8")


def _expand_d8(b: ProofBuilder, variant: str, x, y) -> int:
    if variant == "right":
        sqe = b.axiom("SQE_R", x=x, y=y)
    else:
        sqe = b.axiom("SQE_L", x=x, y=y)
    xp = Polynomial([tuple(x)])
    mono = b.add_mono(sqe, xp)
    back = b.trans(b.sym(sqe), mono)
    c = b.claim(back)
    return b.aci(back, Claim(c.lhs, "leq", xp))


def expand_derived(cert: Certificate) -> Certificate:
    """Equivalent certificate using neither COMBINE nor DERIVED_8."""
    b = ProofBuilder(line_limit=max(10 * len(cert.lines), 1000))
    where: Dict[int, int] = {}
    for line in cert.lines:
        args = dict(line.args)
        for key in ("i", "j"):
            if key in args:
                args[key] = where[args[key]]
        if line.rule in ("COMBINE", "DERIVED_7"):
            pq, pr = b.claim(args["i"]), b.claim(args["j"])
            up = b.add_mono(args["i"], pr.rhs)
            low = b.add_mono(args["j"], pq.lhs)
            n = b.trans(low, up)
        elif line.rule == "DERIVED_8":
            n = _expand_d8(b, args["variant"], args["subst"]["x"], args["subst"]["y"])
        elif line.rule == "REFL":
            n = b.refl(line.claim.lhs, line.claim.rhs, line.claim.rel)
        elif line.rule == "ACI":
            n = b.aci(args["i"], line.claim)
        else:
            n = b.rule(line.rule, **args)
        if b.claim(n) != line.claim:
            raise ValueError(f"expansion of line {line.index} proves {b.claim(n)}, not {line.claim}")
        where[line.index] = n
    return b.certificate(cert.goal, where[cert.lines[-1].index])
