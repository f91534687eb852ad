"""Catalan correspondences with equivariance guarantees.

Trees <-> non-crossing matchings (edge = arc between the two tour positions),
trees <-> non-crossing partitions with the Kreweras complement, and leaf-rooted
trees without degree-2 nodes <-> polygon dissections.

The partition correspondence goes through a thickening of the matching picture:
partition point i owns the two circle positions 2i, 2i+1 and a block
{a_1 < ... < a_m} becomes the arcs {2a_t + 1, 2a_(t+1)} plus the closing arc
{2a_m + 1, 2a_1}.  Rotating the thickened matching by one step is the Kreweras
complement; by two steps, the rotation of the partition by one point.  All
equivariance contracts then hold by construction.
"""
from __future__ import annotations

import dataclasses

from .maps import NonCrossingMatching, rotate_ncm
from .trees import PlaneTree, matching
from .rotations import degree_kind, rotate


class NotLeafRooted(ValueError):
    """Tree's root vertex is not a leaf."""


class Degree2NodePresent(ValueError):
    """Tree has a degree-2 vertex, so faces of degree >= 3 cannot be formed."""


# ---------------------------------------------------------------------------
# Trees <-> non-crossing matchings


def tree_to_ncm(t: PlaneTree) -> NonCrossingMatching:
    """Each edge becomes the arc between its two tour positions."""
    return NonCrossingMatching(matching(t.word))


def ncm_to_tree(m: NonCrossingMatching) -> PlaneTree:
    return PlaneTree("".join("(" if p > i else ")" for i, p in enumerate(m.partner)))


def short_edge_count(m: NonCrossingMatching) -> int:
    """Arcs joining cyclically adjacent points; equals the tree's leaf count."""
    size = len(m.partner)
    return sum(1 for i, p in enumerate(m.partner) if p == (i + 1) % size)


# ---------------------------------------------------------------------------
# Trees <-> non-crossing partitions


@dataclasses.dataclass(frozen=True, init=False)
class NonCrossingPartition:
    """Point -> block id (blocks numbered by first appearance)."""

    assignment: tuple[int, ...]

    def __init__(self, assignment):
        assignment = tuple(assignment)
        relabel: dict[int, int] = {}
        for b in assignment:
            if b not in relabel:
                relabel[b] = len(relabel)
        assignment = tuple(relabel[b] for b in assignment)
        for a in range(len(assignment)):
            for b in range(a + 1, len(assignment)):
                for c in range(b + 1, len(assignment)):
                    for d in range(c + 1, len(assignment)):
                        if assignment[a] == assignment[c] != assignment[b] == assignment[d]:
                            raise ValueError(f"crossing blocks in {assignment}")
        object.__setattr__(self, "assignment", assignment)

    @property
    def n(self) -> int:
        return len(self.assignment)

    def blocks(self) -> list[list[int]]:
        """Blocks as sorted 1-indexed lists, ordered by smallest element."""
        out: dict[int, list[int]] = {}
        for i, b in enumerate(self.assignment):
            out.setdefault(b, []).append(i + 1)
        return sorted(out.values())

    @staticmethod
    def from_blocks(blocks) -> "NonCrossingPartition":
        pts = sorted(p for blk in blocks for p in blk)
        if pts != list(range(1, len(pts) + 1)):
            raise ValueError(f"not a partition of 1..n: {blocks}")
        assignment = [0] * len(pts)
        for b, blk in enumerate(blocks):
            for p in blk:
                assignment[p - 1] = b
        return NonCrossingPartition(assignment)


def point_rotation(p: NonCrossingPartition, steps: int = 1) -> NonCrossingPartition:
    n = p.n
    return NonCrossingPartition(p.assignment[-steps % n:] + p.assignment[:-steps % n])


def _thicken(p: NonCrossingPartition) -> NonCrossingMatching:
    partner = [0] * (2 * p.n)
    for blk in p.blocks():
        pts = [a - 1 for a in blk]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            partner[2 * a + 1], partner[2 * b] = 2 * b, 2 * a + 1
    return NonCrossingMatching(partner)


def _unthicken(m: NonCrossingMatching) -> NonCrossingPartition:
    n = len(m.partner) // 2
    succ = {a: m.partner[2 * a + 1] // 2 for a in range(n)}
    assignment = [-1] * n
    for a in range(n):
        if assignment[a] < 0:
            block = max(assignment) + 1
            while assignment[a] < 0:
                assignment[a] = block
                a = succ[a]
    return NonCrossingPartition(assignment)


def tree_to_ncp(t: PlaneTree) -> NonCrossingPartition:
    if t.n < 1:
        raise ValueError("partition correspondence needs n >= 1")
    return _unthicken(tree_to_ncm(t))


def ncp_to_tree(p: NonCrossingPartition) -> PlaneTree:
    return ncm_to_tree(_thicken(p))


def kreweras(p: NonCrossingPartition) -> NonCrossingPartition:
    """Complement on the interleaved points; kreweras squared = point rotation."""
    return _unthicken(rotate_ncm(_thicken(p), 1))


# ---------------------------------------------------------------------------
# Leaf-rooted trees <-> dissections


@dataclasses.dataclass(frozen=True, init=False)
class Dissection:
    """Convex k-gon (vertices 0..k-1) with pairwise non-crossing diagonals."""

    k: int
    diagonals: frozenset

    def __init__(self, k: int, diagonals):
        diagonals = frozenset(tuple(sorted(d)) for d in diagonals)
        for a, b in diagonals:
            if not (0 <= a < b < k) or b - a == 1 or (a == 0 and b == k - 1):
                raise ValueError(f"not a diagonal of a {k}-gon: {(a, b)}")
        for a, b in diagonals:
            for c, d in diagonals:
                if a < c < b < d:
                    raise ValueError(f"crossing diagonals {(a, b)} and {(c, d)}")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "diagonals", diagonals)

    def descriptor(self) -> dict:
        return {"k": self.k, "diagonals": sorted(list(d) for d in self.diagonals)}


def rotate_dissection(d: Dissection, steps: int = 1) -> Dissection:
    return Dissection(d.k, (((a + steps) % d.k, (b + steps) % d.k)
                            for a, b in d.diagonals))


def tree_to_dissection(t: PlaneTree) -> Dissection:
    """Leaves (in tour order, root leaf first) become polygon sides; each edge
    between two internal vertices becomes the diagonal cutting off the leaves
    of its far subtree."""
    from .trees import _Parse

    word = t.word
    partner = matching(word)
    size = len(word)
    if size < 2 or partner[0] != size - 1:
        raise NotLeafRooted(f"{t} is not rooted at a leaf")
    parse = _Parse(word)
    if any(deg == 2 for deg in parse.degree):
        raise Degree2NodePresent(f"{t} has a degree-2 vertex")
    if size == 2:
        raise ValueError("dissection correspondence needs an internal vertex")
    # children count per opening position (the vertex an edge opens into)
    children = {o: 0 for o in range(size) if word[o] == "("}
    stack: list[int] = [-1]
    for o in range(size):
        if word[o] == "(":
            if stack[-1] >= 0:
                children[stack[-1]] += 1
            stack.append(o)
        else:
            stack.pop()
    leaves = [o for o in range(size) if word[o] == "(" and children[o] == 0]
    k = len(leaves) + 1  # plus the root leaf
    index_after = lambda pos: sum(1 for o in leaves if o < pos)
    diagonals = []
    for o in range(1, size):
        if word[o] == "(" and children[o] > 0:
            j = index_after(o) + 1
            jp = index_after(partner[o])
            diagonals.append((j, (jp + 1) % k))
    return Dissection(k, diagonals)


def dissection_to_tree(d: Dissection) -> PlaneTree:
    """Inverse correspondence: march faces inward from the root side (0, 1)."""
    k = d.k
    edges: dict[int, set[int]] = {v: set() for v in range(k)}
    for v in range(k):
        edges[v].add((v + 1) % k)
        edges[(v + 1) % k].add(v)
    for a, b in d.diagonals:
        edges[a].add(b)
        edges[b].add(a)

    def rec(a: int, b: int) -> str:
        """Children words of the face adjacent to segment (a, b), looking into
        the region a -> a+1 -> ... -> b (cyclically)."""
        parts = []
        v = a
        while v != b:
            span = (b - v) % k
            cand = [c for c in edges[v]
                    if 0 < (c - v) % k <= span and not (v == a and c == b)]
            nxt = max(cand, key=lambda c: (c - v) % k)
            if (nxt - v) % k == 1:
                parts.append("()")
            else:
                parts.append("(" + rec(v, nxt) + ")")
            v = nxt
        return "".join(parts)

    return PlaneTree("(" + rec(1, 0) + ")")
