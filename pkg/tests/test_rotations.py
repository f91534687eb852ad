import pytest
from hypothesis import given
from hypothesis import strategies as st

from sieveforest.rotations import (FixQuery, INTERNAL, IncompatibleKind, LEAF,
                                   NoEligibleCorner, ORDINARY,
                                   check_rotation_transfer, degree_kind,
                                   family_kind, fix_count_bruteforce,
                                   fix_count_closed, orbit, rotate,
                                   rotation_order)
from sieveforest.trees import (AllTrees, ByDegrees, ByLeaves, InternalRooted,
                               InternalRootedDeg, LeafRooted, LeafRootedDeg,
                               PlaneTree, RootDegree, closed_count,
                               degree_distributions, enumerate_family,
                               shift_root)


def tree_families(n):
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
    return fams


class TestRotate:
    def test_ordinary_is_corner_shift(self):
        for t in enumerate_family(AllTrees(4)):
            for e in range(8):
                assert rotate(t, ORDINARY, e).word == shift_root(t.word, e)

    def test_orbit_size_divides_order(self):
        for n in range(1, 7):
            for t in enumerate_family(AllTrees(n)):
                assert (2 * n) % len(orbit(t, ORDINARY)) == 0

    def test_leaf_rotation_permutes_leaf_rooted_family(self):
        fam = LeafRooted(5, 3)
        members = set(enumerate_family(fam))
        for t in members:
            assert rotate(t, LEAF, 1) in members

    def test_leaf_rotation_order(self):
        fam = LeafRooted(5, 3)
        for t in enumerate_family(fam):
            assert rotate(t, LEAF, fam.k) == t

    def test_degree_kind_one_is_leaf_like(self):
        fam = LeafRootedDeg((3, 0, 1))
        for t in enumerate_family(fam):
            assert rotate(t, degree_kind(1), 1) == rotate(t, LEAF, 1)

    def test_internal_requires_internal_root(self):
        with pytest.raises(NoEligibleCorner):
            rotate(PlaneTree("(())"), INTERNAL, 1)

    def test_negative_steps_invert(self):
        for t in enumerate_family(InternalRooted(5, 3)):
            assert rotate(rotate(t, INTERNAL, 1), INTERNAL, -1) == t


class TestOrders:
    def test_order_values(self):
        assert rotation_order(AllTrees(4), ORDINARY) == 8
        assert rotation_order(LeafRooted(5, 3), LEAF) == 3
        assert rotation_order(InternalRooted(5, 3), INTERNAL) == 7
        assert rotation_order(RootDegree((2, 0, 2), 3), degree_kind(3)) == 6

    def test_ordinary_acts_on_any_family(self):
        assert rotation_order(ByLeaves(5, 3), ORDINARY) == 10

    def test_incompatible_kind(self):
        with pytest.raises(IncompatibleKind):
            rotation_order(LeafRooted(5, 3), INTERNAL)


class TestFixCounts:
    def test_closed_matches_bruteforce(self):
        for n in range(1, 8):
            for fam in tree_families(n):
                kind = family_kind(fam)
                order = rotation_order(fam, kind)
                for e in range(0, 2 * order + 1):
                    q = FixQuery(fam, kind, e)
                    assert fix_count_bruteforce(q) == fix_count_closed(q), (fam, e)

    def test_e_zero_gives_family_count(self):
        for fam in (AllTrees(6), ByLeaves(6, 3), InternalRooted(6, 4)):
            kind = family_kind(fam)
            assert fix_count_closed(FixQuery(fam, kind, 0)) == closed_count(fam)

    def test_ord3_fix_vector(self):
        fam = AllTrees(3)
        fixes = [fix_count_bruteforce(FixQuery(fam, ORDINARY, e)) for e in range(6)]
        assert fixes == [5, 0, 2, 3, 2, 0]

    @given(st.integers(1, 6), st.integers(0, 30))
    def test_gcd_reduction(self, n, e):
        fam = AllTrees(n)
        import math
        g = math.gcd(e, 2 * n)
        assert fix_count_closed(FixQuery(fam, ORDINARY, e)) \
            == fix_count_closed(FixQuery(fam, ORDINARY, g if e else 0))


class TestTransfer:
    def test_transfer_exhaustive(self):
        for n in range(2, 7):
            for fam in tree_families(n):
                kind = family_kind(fam)
                if kind is ORDINARY:
                    continue
                order = rotation_order(fam, kind)
                for e in range(1, order + 1):
                    if order % e == 0:
                        assert check_rotation_transfer(fam, e), (fam, e)
