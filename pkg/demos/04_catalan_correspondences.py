"""Trees translated into matchings, partitions, and polygon dissections.

Each correspondence carries the rotation along: arcs rotate with the tree,
one rotation step is the Kreweras complement of the partition, and the leaf
rotation turns the dissected polygon.
"""
from sieveforest import (LEAF, ORDINARY, PlaneTree, kreweras, rotate,
                         rotate_dissection, tree_to_dissection, tree_to_ncm,
                         tree_to_ncp)

t = PlaneTree("(()()())")
print("Tree:", t.word)
print("  as a non-crossing matching:", tree_to_ncm(t).pairs())
print("  as a non-crossing partition:", tree_to_ncp(t).blocks())

p = tree_to_ncp(t)
print("\nKreweras complement chain:")
for step in range(3):
    print("   ", p.blocks())
    p = kreweras(p)
print("matches the rotated tree:",
      tree_to_ncp(rotate(t, ORDINARY, 2)).blocks())

t = PlaneTree("(()(()()))")
d = tree_to_dissection(t)
print(f"\nLeaf-rooted tree {t.word} -> {d.k}-gon with diagonals "
      f"{sorted(d.diagonals)}")
t2 = rotate(t, LEAF, 1)
d2 = tree_to_dissection(t2)
print(f"after one leaf rotation: {t2.word} -> diagonals {sorted(d2.diagonals)}")
print("same as turning the polygon:",
      d2 == rotate_dissection(d, 1))
