"""
A presentation of differential operators on the twisted cubic
=============================================================

The twisted cubic y = x^2, z = x^3 is smooth, so its derivations are
exactly the A-combinations of the natural ones, and the ring of
differential operators is generated by A and those derivations subject to
three families of relations. We print them and check each one by letting
both sides act on A.
"""

from natdiff import CoordinateRing, PolyRing, presentation, verify_presentation
from natdiff.cli.serialize import presentation_to_json

P = PolyRing(["x", "y", "z"])
x, y, z = P.gens
A = CoordinateRing(["x", "y", "z"], [y - x**2, z - x**3], name="twisted_cubic")
doc = presentation(A)

print("generators:", doc.variables, doc.d_symbols)

# RD1: the defining equations hold in A.
for rel in doc.rd1:
    print("RD1:", rel.polynomial, "= 0")

# RD2: commuting a natural derivation past x_k leaves its value on x_k.
# Here the values are 1, 2x and 3x^2 (written 3y, since y = x^2 in A).
for rel in doc.rd2:
    print(rel)

# RD3: how natural derivations for different column tuples are related.
for rel in doc.rd3:
    print(rel)

report = verify_presentation(A, doc)
print("all relations hold:", report.ok)

# The same document as JSON, as the command line emits it.
print(presentation_to_json(doc)[:300], "...")
