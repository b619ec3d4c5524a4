from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from snzeros import (
    Partition,
    ResourceLimit,
    SampleStream,
    build_p_table,
    partitions_of,
    random_partition,
)
from snzeros.ptable import load_p_table, save_p_table
from snzeros.sampler import derive_seed, stream_rng, uniform_below

from oracles import bounded_part_count


class TestPartitionCountTable:
    def test_p0(self):
        assert build_p_table(0).counts == (1,)

    def test_small_values(self):
        table = build_p_table(50)
        assert table.counts[5] == 7
        assert table.counts[50] == 204226

    def test_matches_bounded_part_oracle(self):
        table = build_p_table(200)
        for m in range(201):
            assert table.counts[m] == bounded_part_count(m, m if m else 1)

    def test_cap_enforced(self):
        with pytest.raises(ResourceLimit):
            build_p_table(101, cap=100)

    def test_cache_round_trip(self, tmp_path):
        table = build_p_table(120)
        path = tmp_path / "ptable.txt"
        save_p_table(table, str(path))
        assert load_p_table(str(path)) == table

    def test_cache_detects_corruption(self, tmp_path):
        table = build_p_table(60)
        path = tmp_path / "ptable.txt"
        save_p_table(table, str(path))
        text = path.read_text().splitlines()
        text[2 + 50] = str(table.counts[50] + 1)  # corrupt p(50)
        path.write_text("\n".join(text) + "\n")
        with pytest.raises(ValueError):
            load_p_table(str(path))


class TestStreams:
    def test_streams_are_deterministic(self):
        a = stream_rng(SampleStream(123, 7)).getrandbits(256)
        b = stream_rng(SampleStream(123, 7)).getrandbits(256)
        assert a == b

    def test_streams_differ_by_index_and_seed(self):
        base = stream_rng(SampleStream(123, 7)).getrandbits(64)
        assert stream_rng(SampleStream(123, 8)).getrandbits(64) != base
        assert stream_rng(SampleStream(124, 7)).getrandbits(64) != base

    def test_derive_seed_is_stable(self):
        assert derive_seed(42, 10) == derive_seed(42, 10)
        assert derive_seed(42, 10) != derive_seed(42, 11)

    @given(st.integers(min_value=1, max_value=10**12), st.integers(0, 2**32))
    @settings(max_examples=200)
    def test_uniform_below_in_range(self, bound, seed):
        rng = stream_rng(SampleStream(seed, 0))
        assert 0 <= uniform_below(rng, bound) < bound


class TestRandomPartition:
    def test_n1_is_forced(self):
        table = build_p_table(1)
        for i in range(10):
            assert random_partition(1, SampleStream(0, i), table) == Partition((1,))

    def test_determinism_contract(self):
        table = build_p_table(30)
        for i in range(20):
            a = random_partition(30, SampleStream(5, i), table)
            b = random_partition(30, SampleStream(5, i), table)
            assert a == b

    def test_table_must_cover_n(self):
        with pytest.raises(ResourceLimit):
            random_partition(10, SampleStream(0, 0), build_p_table(5))

    @given(st.integers(1, 40), st.integers(0, 1000))
    @settings(max_examples=150, deadline=None)
    def test_output_is_valid_partition(self, n, index):
        table = build_p_table(40)
        lam = random_partition(n, SampleStream(1, index), table)
        assert lam.n == n
        assert all(a >= b >= 1 for a, b in zip(lam.parts, lam.parts[1:] + (1,)))

    def test_empirical_uniformity_n5(self):
        # every partition of 5 within 4 standard errors of 1/7
        n, samples = 5, 70_000
        table = build_p_table(n)
        tallies = Counter()
        for i in range(samples):
            tallies[random_partition(n, SampleStream(777, i), table).parts] += 1
        p = 1 / 7
        se = (samples * p * (1 - p)) ** 0.5
        for parts in partitions_of(n):
            assert abs(tallies[parts] - samples * p) < 4 * se, parts
