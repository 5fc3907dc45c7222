from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hookbias.partitions import (
    ALL,
    Partition,
    conjugate,
    count_hooks_oracle,
    distinct,
    enumerate_partitions,
    fixed_parts,
    hook_count_table,
    hook_lengths,
    hook_multiset,
    regular,
    residue,
)


def cell_scan_hooks(parts):
    # independent hook computation: walk the diagram cell by cell
    cells = {(r, c) for r, lam in enumerate(parts) for c in range(lam)}
    out = Counter()
    for r, c in cells:
        arm = sum(1 for cc in range(c + 1, parts[r]))
        leg = sum(1 for rr in range(r + 1, len(parts)) if (rr, c) in cells)
        out[arm + leg + 1] += 1
    return out


def as_tuples(n, cls):
    return [p.parts for p in enumerate_partitions(n, cls)]


class TestPartition:
    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            Partition((2, 0))

    def test_indexing_extends_by_zero(self):
        p = Partition.of(4, 3, 3)
        assert p[1] == 4 and p[3] == 3 and p[4] == 0 and p[10] == 0

    def test_stats(self):
        p = Partition.of(4, 3, 3, 2, 1)
        assert p.weight == 13 and p.length == 5
        assert p.multiplicity(3) == 2 and p.smallest == 1

    def test_empty(self):
        e = Partition.of()
        assert e.weight == 0 and e.length == 0 and not e


class TestEnumeration:
    def test_three_regular_six(self):
        assert as_tuples(6, regular(3)) == [
            (5, 1), (4, 2), (4, 1, 1), (2, 2, 2), (2, 2, 1, 1), (2, 1, 1, 1, 1), (1,) * 6]

    def test_three_distinct_six(self):
        assert as_tuples(6, distinct(3)) == [
            (6,), (5, 1), (4, 2), (4, 1, 1), (3, 3), (3, 2, 1), (2, 2, 1, 1)]

    def test_counts_all(self):
        assert [sum(1 for _ in enumerate_partitions(n)) for n in range(11)] == \
            [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]

    def test_zero(self):
        assert as_tuples(0, ALL) == [()]

    def test_order_is_decreasing_and_deterministic(self):
        a = as_tuples(15, ALL)
        assert a == sorted(a, reverse=True) and a == as_tuples(15, ALL)
        assert len(set(a)) == len(a)

    @pytest.mark.parametrize("t", [2, 3, 4, 5])
    def test_regular_equals_distinct_count(self, t):
        # Glaisher: t-regular and t-distinct partitions are equinumerous
        for n in range(41):
            assert sum(1 for _ in enumerate_partitions(n, regular(t))) == \
                sum(1 for _ in enumerate_partitions(n, distinct(t)))

    def test_class_membership(self):
        for p in enumerate_partitions(20, residue(1, 3, 4)):
            assert all(x % 3 == 1 and x >= 4 for x in p)
        assert all(set(p) <= {6, 9} for p in enumerate_partitions(30, fixed_parts((6, 9))))
        assert Partition.of(3, 1) not in regular(3)
        assert Partition.of(2, 2, 2) not in distinct(3)


class TestHooks:
    def test_small(self):
        assert hook_multiset(Partition.of(2, 1)) == Counter({3: 1, 1: 2})
        assert hook_lengths(Partition.of(4, 3, 3, 2, 1)) == [
            [8, 6, 4, 1], [6, 4, 2], [5, 3, 1], [3, 1], [1]]

    def test_conjugate(self):
        assert conjugate(Partition.of(4, 3, 3, 2, 1)) == Partition.of(5, 4, 3, 1)
        assert conjugate(Partition.of()) == Partition.of()

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.integers(1, 12), max_size=10))
    def test_against_cell_scan(self, parts):
        p = Partition(tuple(sorted(parts, reverse=True)))
        assert hook_multiset(p) == cell_scan_hooks(p.parts)
        assert hook_multiset(conjugate(p)) == hook_multiset(p)
        assert conjugate(conjugate(p)) == p

    def test_hook_sum_invariant(self):
        # each partition of n has exactly n hooks
        for n in range(31):
            total = count = 0
            for p in enumerate_partitions(n):
                total += sum(hook_multiset(p).values())
                count += 1
            assert total == n * count

    def test_single_part_hooks(self):
        # hooks of length 1 in t-regular partitions of 1
        for t in range(2, 6):
            assert count_hooks_oracle(1, t, 1) == 1

    @pytest.mark.parametrize("kind", ["regular", "distinct"])
    def test_oracle_matches_table(self, kind):
        table = hook_count_table(18, 3, 6, kind)
        for n in range(19):
            assert table[n] == [count_hooks_oracle(n, 3, i, kind) for i in range(1, 7)]

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            count_hooks_oracle(5, 1, 1)
        with pytest.raises(ValueError):
            count_hooks_oracle(5, 2, 0)


@pytest.mark.slow
def test_values_at_82():
    assert count_hooks_oracle(82, 2, 3) == 515393
    assert count_hooks_oracle(82, 2, 4) == 515487
