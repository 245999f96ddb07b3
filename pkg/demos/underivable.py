"""An inequality of B0 that the eight-schema basis does not derive.

``y + zx^2 <= yx`` holds in B0, yet the 4-element ai-semiring W1 below
satisfies every basis schema and fails it, so no certificate exists.

Run: python demos/underivable.py
"""

from bzero.models import builtin_b0, format_valuation, holds_identity, holds_leq, validate_model
from bzero.proofs import DERIVED_8, SCHEMAS, NotDerivableError, countermodels, prove_leq
from bzero.proofs.axioms import instantiate_schema
from bzero.proofs.library import WitnessLibrary
from bzero.terms import parse_polynomial

lhs, rhs = parse_polynomial("y + zx^2"), parse_polynomial("yx")
W1 = countermodels()[0]
print(f"B0 |= {lhs} <= {rhs}: {holds_leq(builtin_b0(), lhs, rhs)}")

print(f"\n{W1.name} add / mul tables over {', '.join(W1.elements)}:")
for a in range(W1.size):
    row_add = " ".join(W1.elements[int(v)] for v in W1.add[a])
    row_mul = " ".join(W1.elements[int(v)] for v in W1.mul[a])
    print(f"  {W1.elements[a]} | {row_add}   | {row_mul}")
print("ai-semiring:", validate_model(W1).ok)

bad = []
for s in list(SCHEMAS.values()) + list(DERIVED_8.values()):
    a, rel, b = instantiate_schema(s, {v: (v,) for v in s.variables})
    if not (holds_identity(W1, a, b) if rel == "eq" else holds_leq(W1, a, b)):
        bad.append(s.name)
print("schemas failing in W1:", bad or "none")
print(f"W1 |= {lhs} <= {rhs}: {holds_leq(W1, lhs, rhs)}")

# the forward closure of upper words runs dry without putting y before x
lib = WitnessLibrary(lhs)
print("\nfacts no derivable upper word shows:", lib.missing_facts())
print("derivable upper words:", [''.join(w) for w in lib.nodes])

try:
    prove_leq(lhs, rhs)
except NotDerivableError as exc:
    print("\ngenerator:", exc)
    print("valuation:", format_valuation(exc.model, exc.valuation))
