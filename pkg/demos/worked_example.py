"""Rare letters, arrows and a certificate for p = x^2y + yx^2.

Run: python demos/worked_example.py
"""

from bzero.proofs import prove_leq, verify_certificate
from bzero.structure import structure_report
from bzero.terms import parse_polynomial

p = parse_polynomial("x^2y + yx^2")
rep = structure_report(p)
print(f"p = {p}")
print(f"rare letters: {sorted(rep.rare) or 'none'} (degenerate: {rep.degenerate})")
for x, y in sorted(rep.arrow.pairs):
    if x != y:
        print(f"  {x} -> {y}, witnessed by the upper word {''.join(rep.arrow.witness[(x, y)])}")

# p <= x^4y^2, the inequality displayed for this example
cert = prove_leq(p, parse_polynomial("x^4y^2"))
print(f"\ncertificate for {cert.goal} ({len(cert)} lines):")
for ln in cert.lines:
    print(f"  {ln.index:>3}  {ln.claim}   [{ln.rule}]")
print("kernel:", "accepted" if verify_certificate(cert).accepted else "rejected")
