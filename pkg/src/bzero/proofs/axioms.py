"""The identity basis as data.

Each schema is a pair of polynomials over schema variables.  Variables are
substituted by nonempty words; in the sixteen ``CROSS_abcd`` forms of the
crossing identity the digits say which of ``x1 z1 x2 z2`` are present, and
absent ones must be left out of the substitution (or mapped to EMPTY).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Tuple

from ..terms import Polynomial, Word

EMPTY = None


@dataclass(frozen=True)
class Schema:
    name: str
    label: str
    lhs: Tuple[Tuple[str, ...], ...]
    rel: str
    rhs: Tuple[Tuple[str, ...], ...]

    @property
    def variables(self) -> Tuple[str, ...]:
        seen = []
        for w in self.lhs + self.rhs:
            for v in w:
                if v not in seen:
                    seen.append(v)
        return tuple(sorted(seen))

    def display(self) -> str:
        def poly(ws):
            return " + ".join("".join(w) for w in ws)

        sym = "<=" if self.rel == "leq" else "="
        return f"{poly(self.lhs)} {sym} {poly(self.rhs)}"


def _w(*vs):
    return tuple(vs)


def _cross(mask: str) -> Schema:
    x1, z1, x2, z2 = (v if bit == "1" else None for v, bit in zip(("x1", "z1", "x2", "z2"), mask))

    def word(*vs):
        return tuple(v for v in vs if v is not None)

    return Schema(
        f"CROSS_{mask}",
        "crossing",
        (word(x1, "y", z1), word(x2, "y", z2)),
        "leq",
        (word(x1, "y", z2),),
    )


SCHEMAS: Dict[str, Schema] = {
    s.name: s
    for s in [
        Schema("PER", "periodicity", (_w("x", "x"),), "eq", (_w("x", "x", "x"),)),
        Schema("SEM_A", "semigroup", (_w("x", "x", "y", "y"),), "eq", (_w("y", "y", "x", "x"),)),
        Schema("SEM_B", "semigroup", (_w("y", "y", "x", "x"),), "eq", (_w("x", "y", "x"),)),
        Schema("SEM_C", "semigroup", (_w("x", "x", "y", "y"),), "eq", (_w("x", "y", "x"),)),
        Schema("SQS", "square summand", (_w("x"), _w("y", "y")), "eq", (_w("x", "x", "y", "y"),)),
        Schema("SQE_R", "square expansion", (_w("x", "y"), _w("x")), "eq", (_w("x", "y", "y"),)),
        Schema("SQE_L", "square expansion", (_w("y", "x"), _w("x")), "eq", (_w("y", "y", "x"),)),
        Schema("ROOK", "rook", (_w("x", "y"), _w("z", "y"), _w("z", "t")), "leq", (_w("x", "t"),)),
    ]
    + [_cross("".join(bits)) for bits in itertools.product("10", repeat=4)]
}

# consequences of SQE_R / SQE_L: xy^2 <= x and y^2x <= x
DERIVED_8 = {
    "right": Schema("D8_R", "deleting squares", (_w("x", "y", "y"),), "leq", (_w("x"),)),
    "left": Schema("D8_L", "deleting squares", (_w("y", "y", "x"),), "leq", (_w("x"),)),
}


def cross_name(x1: Word, z1: Word, x2: Word, z2: Word) -> str:
    return "CROSS_" + "".join("1" if part else "0" for part in (x1, z1, x2, z2))


class SubstitutionError(ValueError):
    pass


def instantiate_schema(schema: Schema, subst: Mapping[str, Optional[Word]]):
    """Substitute words for the schema's variables; returns ``(lhs, rel, rhs)``."""
    needed = set(schema.variables)
    for var, val in subst.items():
        if var in needed:
            if not val:
                raise SubstitutionError(f"{schema.name}: variable {var} cannot be empty")
        elif val:
            raise SubstitutionError(f"{schema.name}: variable {var} is absent from this form and must be EMPTY")
    missing = needed - {v for v, val in subst.items() if val}
    if missing:
        raise SubstitutionError(f"{schema.name}: no value for {', '.join(sorted(missing))}")

    def side(words):
        return Polynomial(tuple(a for v in w for a in subst[v]) for w in words)

    return side(schema.lhs), schema.rel, side(schema.rhs)


@dataclass(frozen=True)
class AxiomInstance:
    schema: str
    substitution: Tuple[Tuple[str, Optional[Word]], ...]

    @classmethod
    def make(cls, schema: str, **subst) -> "AxiomInstance":
        return cls(schema, tuple(sorted((k, tuple(v) if v else None) for k, v in subst.items())))

    def claim(self):
        if self.schema not in SCHEMAS:
            raise SubstitutionError(f"unknown schema {self.schema!r}")
        return instantiate_schema(SCHEMAS[self.schema], dict(self.substitution))


def instantiate(a: AxiomInstance):
    return a.claim()
