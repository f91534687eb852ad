"""Tree-rooted planar maps as quadrant walks, and their cubic-map picture.

A map with a distinguished spanning tree is a word over E/W/N/S; it splits
into a budded tree and a non-crossing matching of the buds, and it also reads
as a cubic map with a Hamiltonian cycle (tree edges inside, the rest outside).
"""
from sieveforest import (ALL_EXPONENTS, TMn, build_instance, decompose,
                         enumerate_maps, rotate_map, to_cubic, verify)

maps2 = list(enumerate_maps(TMn(2)))
print(f"Tree-rooted maps with 2 edges: {len(maps2)}")
for mp in maps2:
    bt, m = decompose(mp)
    print(f"   {mp.word:<6} tree part {bt.word or '-':<6} buds matched {m.pairs()}")

mp = maps2[3]
print(f"\nRotating {mp.word}:")
cur = mp
for step in range(4):
    cubic = to_cubic(cur)
    print(f"   {cur.word}  inner chords {sorted(cubic.inner)} "
          f"outer chords {sorted(cubic.outer)}")
    cur = rotate_map(cur, 1)

inst = build_instance("tmn", n=2)
report = verify(inst, ALL_EXPONENTS)
print(f"\nSieving: P(q) = {inst.polynomial()}")
print("fixed points:", [r["brute"] for r in report.rows],
      "->", "PASS" if report.overall else "FAIL")
