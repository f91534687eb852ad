"""A first cyclic sieving check, end to end.

The five plane trees with three edges are rotated by moving the root corner
around the tree.  The q-Catalan polynomial [6 choose 3]_q / [4]_q evaluated at
6th roots of unity predicts how many trees each rotation power fixes.
"""
from sieveforest import (ALL_EXPONENTS, AllTrees, ORDINARY, build_instance,
                         enumerate_family, orbit, verify)

trees = list(enumerate_family(AllTrees(3)))
print(f"The {len(trees)} plane trees with 3 edges:")
for t in trees:
    print("   ", t.word, "  orbit size", len(orbit(t, ORDINARY)))

inst = build_instance("ord", n=3)
print("\nSieving polynomial:", inst.polynomial())
print("Rotation order:", inst.order)

report = verify(inst, ALL_EXPONENTS)
print("\n e  d   fixed(brute)  fixed(closed)  P(root)  agree")
for row in report.rows:
    print(f"{row['e']:>2} {row['d']:>2} {row['brute']:>13} "
          f"{row['closed']:>14} {row['poly_value']:>8}   {row['agree']}")
print("\nOverall:", "PASS" if report.overall else "FAIL")
