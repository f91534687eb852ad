import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sieveforest.trees import (AllTrees, ByDegrees, ByLeaves, CentralEdge,
                               CentralVertex, InternalRooted,
                               InternalRootedDeg, LeafRooted, LeafRootedDeg,
                               MarkedTree, PlaneTree, RootDegree, catalan,
                               center, closed_count, degree_distributions,
                               enumerate_family, family_from_descriptor,
                               glue_halves, half_tree, matching,
                               replicate_sector, sector, shift_root, stats)


def all_words(n):
    return [t.word for t in enumerate_family(AllTrees(n))]


dyck_words = st.integers(1, 7).flatmap(lambda n: st.sampled_from(all_words(n)))


class TestBasics:
    def test_validation(self):
        with pytest.raises(ValueError):
            PlaneTree("(()")
        with pytest.raises(ValueError):
            PlaneTree(")(")

    def test_matching(self):
        assert matching("(())") == (3, 2, 1, 0)
        assert matching("()()") == (1, 0, 3, 2)

    def test_stats(self):
        s = stats(PlaneTree("(()())"))
        # the degree-1 root counts as a leaf
        assert s.leaves == 3 and s.edges == 3 and s.root_degree == 1

    @given(dyck_words, st.integers(-20, 20))
    def test_shift_root_is_cyclic(self, word, steps):
        shifted = shift_root(word, steps)
        assert shift_root(shifted, -steps) == word
        assert shift_root(word, len(word)) == word

    @given(dyck_words, st.integers(0, 10), st.integers(0, 10))
    def test_shift_root_composes(self, word, a, b):
        assert shift_root(shift_root(word, a), b) == shift_root(word, a + b)


class TestFamilies:
    def test_catalan_counts(self):
        for n in range(1, 9):
            assert len(all_words(n)) == catalan(n)

    def test_enumeration_matches_closed_count(self):
        for n in range(1, 8):
            fams = [AllTrees(n)]
            fams += [ByLeaves(n, k) for k in range(2, n + 1)]
            fams += [LeafRooted(n, k) for k in range(2, n + 1)]
            fams += [InternalRooted(n, k) for k in range(2, n + 1)]
            for degrees in degree_distributions(n):
                fams.append(ByDegrees(degrees))
                fams.append(LeafRootedDeg(degrees))
                fams.append(InternalRootedDeg(degrees))
                for delta, c in enumerate(degrees, start=1):
                    if c:
                        fams.append(RootDegree(degrees, delta))
            for fam in fams:
                assert sum(1 for _ in enumerate_family(fam)) == closed_count(fam), fam

    def test_leaf_refinement_partitions_family(self):
        for n in range(2, 9):
            assert sum(closed_count(ByLeaves(n, k)) for k in range(2, n + 1)) \
                == catalan(n)

    def test_degree_refinement_partitions_family(self):
        for n in range(1, 8):
            assert sum(closed_count(ByDegrees(d)) for d in degree_distributions(n)) \
                == catalan(n)

    def test_descriptor_round_trip(self):
        for fam in (AllTrees(4), ByLeaves(5, 3), LeafRooted(5, 3),
                    InternalRooted(5, 3), ByDegrees((2, 2)),
                    LeafRootedDeg((2, 2)), InternalRootedDeg((2, 2)),
                    RootDegree((2, 2), 2)):
            assert family_from_descriptor(fam.descriptor()) == fam


class TestCenter:
    def test_path_centers(self):
        # odd edge count: central edge; even edge count: central vertex
        assert isinstance(center(PlaneTree("((()))")), CentralEdge)
        assert isinstance(center(PlaneTree("(())")), CentralVertex)

    def test_center_is_root_invariant(self):
        for t in enumerate_family(AllTrees(5)):
            kinds = {type(center(PlaneTree(shift_root(t.word, s))))
                     for s in range(10)}
            assert len(kinds) == 1


class TestSurgeries:
    def test_half_tree_counted_bijection(self):
        # Half-turn-fixed trees with n odd <-> half-size trees with a marked
        # non-root leaf; round trip in both directions, images counted.
        for n in (1, 3, 5, 7, 9):
            fixed = [t for t in enumerate_family(AllTrees(n))
                     if shift_root(t.word, n) == t.word]
            h = (n + 1) // 2
            codomain = {MarkedTree(t, m)
                        for t in enumerate_family(AllTrees(h))
                        for m in range(1, 2 * h)
                        if t.word[m - 1] == "(" and t.word[m] == ")"}
            images = set()
            for t in fixed:
                m = half_tree(t)
                assert glue_halves(m) == t
                images.add(m)
            assert images == codomain
            assert len(images) == len(fixed)

    def test_sector_round_trip(self):
        for n in range(2, 9):
            for d in range(2, n + 1):
                if n % d:
                    continue
                for t in enumerate_family(AllTrees(n)):
                    fixed = shift_root(t.word, 2 * n // d) == t.word
                    if not fixed:
                        continue
                    m = sector(t, d)
                    assert replicate_sector(m, d) == t

    def test_sector_requires_divisibility(self):
        t = PlaneTree("(()())")
        with pytest.raises(ValueError):
            sector(t, 2)  # R^(2n/2) does not fix this tree
