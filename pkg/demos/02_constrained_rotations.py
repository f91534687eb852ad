"""Constrained rotations and their own sieving polynomials.

Beyond the ordinary root-corner rotation, the root can be restricted to leaf
corners, internal corners, or corners at vertices of a chosen degree; each
restriction acts on the matching refined family and carries its own q-analogue.
"""
from sieveforest import (ALL_EXPONENTS, InternalRooted, LEAF, LeafRooted,
                         build_instance, closed_count, enumerate_family,
                         rotate, verify)

fam = LeafRooted(5, 3)
print(f"Leaf-rooted trees with 5 edges and 3 leaves: {closed_count(fam)}")
t = next(enumerate_family(fam))
print("One orbit of the leaf rotation (order = number of leaves):")
cur = t
for step in range(4):
    print("   ", cur.word)
    cur = rotate(cur, LEAF, 1)

for theorem, params in [("ext", dict(n=5, k=3)), ("int", dict(n=5, k=3)),
                        ("delta", dict(degrees=(4, 0, 2), delta=3))]:
    inst = build_instance(theorem, **params)
    report = verify(inst, ALL_EXPONENTS)
    fixes = ",".join(str(r["brute"]) for r in report.rows)
    print(f"\n{theorem} {params}")
    print(f"  P(q) = {inst.polynomial()}")
    print(f"  fixed points ({fixes}) -> {'PASS' if report.overall else 'FAIL'}")
