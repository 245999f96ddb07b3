"""Finite ai-semirings given by tables, and exhaustive identity checking.

Valuations of an alphabet are enumerated lexicographically: element indices
ascending, letters in sorted order, the last letter varying fastest.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence

import numpy as np

from .terms import Polynomial

DEFAULT_ALPHABET_CAP = 8

Valuation = Dict[str, int]


class ResourceError(RuntimeError):
    """Raised when an exhaustive sweep would exceed the alphabet cap."""


class UnboundLetterError(KeyError):
    pass


@dataclass(frozen=True)
class Model:
    name: str
    elements: tuple
    add: np.ndarray = field(repr=False, compare=False)
    mul: np.ndarray = field(repr=False, compare=False)

    def __post_init__(self):
        n = len(self.elements)
        if n < 1:
            raise ValueError("a model needs at least one element")
        for label, table in (("add", self.add), ("mul", self.mul)):
            if table.shape != (n, n):
                raise ValueError(f"{label} table must be {n}x{n}")
            if table.min() < 0 or table.max() >= n:
                raise ValueError(f"{label} table has an entry outside 0..{n - 1}")
        self.add.setflags(write=False)
        self.mul.setflags(write=False)

    @property
    def size(self) -> int:
        return len(self.elements)

    def index(self, label: str) -> int:
        return self.elements.index(label)

    def __eq__(self, other):
        return (
            isinstance(other, Model)
            and self.elements == other.elements
            and np.array_equal(self.add, other.add)
            and np.array_equal(self.mul, other.mul)
        )

    def __hash__(self):
        return hash((self.name, self.elements))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "elements": list(self.elements),
            "add": self.add.tolist(),
            "mul": self.mul.tolist(),
        }


def make_model(name, elements, add, mul) -> Model:
    return Model(name, tuple(elements), np.array(add, dtype=np.int64), np.array(mul, dtype=np.int64))


# 2x2 matrix units; 0 is the zero matrix.
_UNITS = {
    "0": None,
    "e11": (1, 1),
    "e12": (1, 2),
    "e21": (2, 1),
    "e22": (2, 2),
}


def _unit_product(a: str, b: str) -> str:
    ua, ub = _UNITS[a], _UNITS[b]
    if ua is None or ub is None or ua[1] != ub[0]:
        return "0"
    return f"e{ua[0]}{ub[1]}"


def _brandt(name: str, labels: Sequence[str]) -> Model:
    n = len(labels)
    mul = [[labels.index(_unit_product(a, b)) for b in labels] for a in labels]
    zero = labels.index("0")
    add = [[i if i == j else zero for j in range(n)] for i in range(n)]
    return make_model(name, labels, add, mul)


def builtin_b2() -> Model:
    """The Brandt semigroup B2 with addition = meet in the natural order."""
    return _brandt("B2", ["0", "e11", "e12", "e21", "e22"])


def builtin_b0() -> Model:
    """B0 = B2 without e21."""
    return _brandt("B0", ["0", "e11", "e12", "e22"])


BUILTINS = {"b0": builtin_b0, "b2": builtin_b2}


# --------------------------------------------------------------------------
# validation


AXIOMS = {
    1: "x+y = y+x",
    2: "(x+y)+z = x+(y+z)",
    3: "x+x = x",
    4: "(xy)z = x(yz)",
    5: "x(y+z) = xy+xz",
    6: "(x+y)z = xz+yz",
}


@dataclass(frozen=True)
class Violation:
    axiom: int
    witness: tuple

    def describe(self, m: Model) -> str:
        labels = ", ".join(m.elements[i] for i in self.witness)
        return f"axiom {self.axiom} ({AXIOMS[self.axiom]}) fails at ({labels})"


@dataclass
class ValidationReport:
    model: str
    violations: List[Violation]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {
            "model": self.model,
            "ok": self.ok,
            "violations": [{"axiom": v.axiom, "witness": list(v.witness)} for v in self.violations],
        }


def validate_model(m: Model) -> ValidationReport:
    """Check axioms 1-6 exhaustively; each violated axiom is reported once."""
    A, M = m.add, m.mul
    n = m.size
    found: Dict[int, tuple] = {}

    def fail(k, wit):
        found.setdefault(k, wit)

    for x in range(n):
        if A[x, x] != x:
            fail(3, (x,))
        for y in range(n):
            if A[x, y] != A[y, x]:
                fail(1, (x, y))
            for z in range(n):
                if A[A[x, y], z] != A[x, A[y, z]]:
                    fail(2, (x, y, z))
                if M[M[x, y], z] != M[x, M[y, z]]:
                    fail(4, (x, y, z))
                if M[x, A[y, z]] != A[M[x, y], M[x, z]]:
                    fail(5, (x, y, z))
                if M[A[x, y], z] != A[M[x, z], M[y, z]]:
                    fail(6, (x, y, z))
    return ValidationReport(m.name, [Violation(k, found[k]) for k in sorted(found)])


def restrict(m: Model, labels: Sequence[str], name: Optional[str] = None) -> Model:
    """Submodel on ``labels``; raises ValueError if the subset is not closed."""
    idx = [m.index(a) for a in labels]
    pos = {i: k for k, i in enumerate(idx)}
    try:
        add = [[pos[int(m.add[i, j])] for j in idx] for i in idx]
        mul = [[pos[int(m.mul[i, j])] for j in idx] for i in idx]
    except KeyError:
        raise ValueError("subset is not closed under the operations") from None
    return make_model(name or m.name, labels, add, mul)


def load_model(path) -> tuple:
    """Read a model file; returns ``(model, validation_report)``."""
    with open(path) as fh:
        data = json.load(fh)
    m = make_model(data["name"], data["elements"], data["add"], data["mul"])
    return m, validate_model(m)


def resolve_model(spec: str) -> Model:
    if spec.lower() in BUILTINS:
        return BUILTINS[spec.lower()]()
    m, report = load_model(spec)
    if not report.ok:
        raise ValueError(f"{spec}: not an ai-semiring: " + "; ".join(v.describe(m) for v in report.violations))
    return m


# --------------------------------------------------------------------------
# evaluation


def evaluate(m: Model, v: Mapping[str, int], p: Polynomial) -> int:
    """Value of ``p`` under the valuation ``v`` (letter -> element index)."""
    total = None
    for w in p.summands:
        try:
            val = v[w[0]]
            for a in w[1:]:
                val = int(m.mul[val, v[a]])
        except KeyError as exc:
            raise UnboundLetterError(f"letter {exc.args[0]!r} is not bound by the valuation") from None
        total = val if total is None else int(m.add[total, val])
    return total


def alphabet(*polys: Polynomial) -> tuple:
    return tuple(sorted(set().union(*(p.content() for p in polys))))


def _check_cap(letters, cap):
    if len(letters) > cap:
        raise ResourceError(f"alphabet of {len(letters)} letters exceeds the cap of {cap}")


def valuation_grid(n_elements: int, n_letters: int) -> np.ndarray:
    """Row i holds the element assigned to letter i under every valuation."""
    total = n_elements**n_letters
    idx = np.arange(total)
    return np.stack(
        [(idx // n_elements ** (n_letters - 1 - i)) % n_elements for i in range(n_letters)]
    ) if n_letters else np.zeros((0, 1), dtype=np.int64)


def eval_all(m: Model, p: Polynomial, letters: Sequence[str], grid: Optional[np.ndarray] = None) -> np.ndarray:
    """Values of ``p`` under every valuation of ``letters`` in enumeration order."""
    if grid is None:
        grid = valuation_grid(m.size, len(letters))
    pos = {a: i for i, a in enumerate(letters)}
    total = None
    for w in p.summands:
        val = grid[pos[w[0]]]
        for a in w[1:]:
            val = m.mul[val, grid[pos[a]]]
        total = val if total is None else m.add[total, val]
    return total


def _sweep(m, p, q, cap):
    letters = alphabet(p, q)
    _check_cap(letters, cap)
    grid = valuation_grid(m.size, len(letters))
    return letters, grid, eval_all(m, p, letters, grid), eval_all(m, q, letters, grid)


def holds_identity(m: Model, p: Polynomial, q: Polynomial, cap: int = DEFAULT_ALPHABET_CAP) -> bool:
    _, _, pv, qv = _sweep(m, p, q, cap)
    return bool(np.array_equal(pv, qv))


def holds_leq(m: Model, p: Polynomial, q: Polynomial, cap: int = DEFAULT_ALPHABET_CAP) -> bool:
    """``p <= q``, i.e. ``p + q = p`` in ``m``."""
    return holds_identity(m, p + q, p, cap)


def counterexample(m: Model, p: Polynomial, q: Polynomial, cap: int = DEFAULT_ALPHABET_CAP) -> Optional[Valuation]:
    """First valuation (in enumeration order) separating ``p`` and ``q``."""
    letters, grid, pv, qv = _sweep(m, p, q, cap)
    bad = np.nonzero(pv != qv)[0]
    if bad.size == 0:
        return None
    k = int(bad[0])
    return {a: int(grid[i, k]) for i, a in enumerate(letters)}


def iter_valuations(m: Model, letters: Sequence[str]):
    for combo in itertools.product(range(m.size), repeat=len(letters)):
        yield dict(zip(letters, combo))


def format_valuation(m: Model, v: Mapping[str, int]) -> Dict[str, str]:
    return {a: m.elements[i] for a, i in sorted(v.items())}
