"""Partition enumeration, ranks, and rank distributions."""

import io
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rankmoments import (
    CapExceededError,
    EmptyPartitionError,
    Partition,
    count_with_rank,
    enumerate_partitions,
    partition_count,
    rank,
    rank_distribution,
)
from rankmoments import partitions as partitions_mod


class TestPartitionType:
    def test_valid_construction(self):
        p = Partition((3, 1, 1))
        assert p.weight == 5
        assert p.length == 3
        assert p.largest == 3
        assert p.smallest == 1

    def test_empty_conventions(self):
        empty = Partition()
        assert empty.weight == 0
        assert empty.length == 0
        assert empty.largest == 0
        assert empty.smallest == math.inf
        assert empty.is_empty

    def test_rejects_increasing_parts(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_rejects_nonpositive_parts(self):
        with pytest.raises(ValueError):
            Partition((3, 0))
        with pytest.raises(ValueError):
            Partition((-1,))


class TestEnumeration:
    def test_n0_yields_only_empty(self):
        assert list(enumerate_partitions(0)) == [Partition()]

    def test_n1(self):
        assert list(enumerate_partitions(1)) == [Partition((1,))]

    def test_canonical_order_n5(self):
        got = [p.parts for p in enumerate_partitions(5)]
        assert got == [
            (5,),
            (4, 1),
            (3, 2),
            (3, 1, 1),
            (2, 2, 1),
            (2, 1, 1, 1),
            (1, 1, 1, 1, 1),
        ]

    @pytest.mark.parametrize("n", range(13))
    def test_count_matches_pentagonal_recurrence(self, n):
        assert sum(1 for _ in enumerate_partitions(n)) == partition_count(n)

    @pytest.mark.parametrize("n", range(1, 13))
    def test_no_duplicates_and_weakly_decreasing(self, n):
        seen = set()
        for p in enumerate_partitions(n):
            assert p.parts not in seen
            seen.add(p.parts)
            assert p.weight == n
            assert all(
                p.parts[i] >= p.parts[i + 1] for i in range(len(p.parts) - 1)
            )

    def test_refuses_beyond_cap(self):
        with pytest.raises(CapExceededError):
            enumerate_partitions(61)

    def test_env_override_allows_more(self, monkeypatch):
        monkeypatch.setenv("RANKMOMENTS_MAX_N", "65")
        gen = enumerate_partitions(61)
        assert next(gen).parts == (61,)


class TestRank:
    @pytest.mark.parametrize(
        "parts,expected",
        [((5,), 4), ((1, 1, 1, 1, 1), -4), ((3, 1, 1), 0)],
    )
    def test_examples(self, parts, expected):
        assert rank(Partition(parts)) == expected

    def test_empty_is_an_error(self):
        with pytest.raises(EmptyPartitionError):
            rank(Partition())


def test_partition_count_first_values():
    # classical p(n), re-derivable by exhaustive generation (checked above)
    assert [partition_count(n) for n in range(13)] == [
        1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77,
    ]


class TestRankDistribution:
    def test_n5(self):
        dist = rank_distribution(5)
        assert dict(dist.sorted_items()) == {
            -4: 1, -2: 1, -1: 1, 0: 1, 1: 1, 2: 1, 4: 1,
        }

    def test_n1(self):
        assert dict(rank_distribution(1).sorted_items()) == {0: 1}

    def test_n4_total_and_symmetry(self):
        dist = rank_distribution(4)
        assert dist.total() == 5
        for m, c in dist.counts.items():
            assert dist.count(-m) == c

    def test_rejects_nonpositive_n(self):
        with pytest.raises(ValueError):
            rank_distribution(0)

    def test_refuses_beyond_cap(self):
        with pytest.raises(CapExceededError):
            rank_distribution(61)

    def test_count_with_rank_examples(self):
        assert count_with_rank(0, 5) == 1
        assert count_with_rank(7, 5) == 0
        assert count_with_rank(-2, 5) == 1

    @settings(max_examples=40, deadline=None)
    @given(n=st.integers(min_value=1, max_value=30))
    def test_invariants(self, n):
        dist = rank_distribution(n)
        # total = p(n), independently via the pentagonal recurrence
        assert dist.total() == partition_count(n)
        # symmetry N(m, n) = N(-m, n)
        for m, c in dist.counts.items():
            assert dist.count(-m) == c
        # support bound and the single maximal-rank partition
        assert all(abs(m) <= n - 1 for m in dist.counts)
        assert dist.count(n - 1) == 1

    def test_distribution_agrees_with_object_level_enumeration(self):
        # same counts through the Partition-object path
        for n in (3, 6, 9):
            direct = {}
            for p in enumerate_partitions(n):
                r = rank(p)
                direct[r] = direct.get(r, 0) + 1
            assert direct == dict(rank_distribution(n).counts)


class TestCsvPersistence:
    def test_round_trip(self, tmp_path):
        path = str(tmp_path / "dists.csv")
        partitions_mod.save_rank_distributions(path, 6)
        loaded = partitions_mod.load_rank_distributions(path)
        assert sorted(loaded) == list(range(1, 7))
        for n, dist in loaded.items():
            assert dict(dist.counts) == dict(rank_distribution(n).counts)

    def test_rows_sorted_and_headed(self):
        buf = io.StringIO()
        partitions_mod.save_rank_distributions(buf, 3)
        lines = buf.getvalue().splitlines()
        assert lines[0] == "n,m,count"
        keys = [tuple(map(int, line.split(",")[:2])) for line in lines[1:]]
        assert keys == sorted(keys)

    def test_rejects_bad_header(self):
        with pytest.raises(ValueError):
            partitions_mod.load_rank_distributions(io.StringIO("a,b,c\n1,2,3\n"))

    def test_seed_cache(self, tmp_path):
        path = str(tmp_path / "dists.csv")
        partitions_mod.save_rank_distributions(path, 4)
        partitions_mod.clear_caches()
        loaded = partitions_mod.load_rank_distributions(path, seed_cache=True)
        assert rank_distribution(4) is loaded[4]


def test_concurrent_cache_use():
    # the memoized distribution cache is lock-protected; hammer it from
    # several threads and check every thread observes identical values
    from concurrent.futures import ThreadPoolExecutor

    partitions_mod.clear_caches()
    ns = [25, 26, 27, 28] * 4
    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(lambda n: dict(rank_distribution(n).counts), ns))
    for n, counts in zip(ns, results):
        assert counts == dict(rank_distribution(n).counts)
        assert sum(counts.values()) == partition_count(n)
