import pytest
from hypothesis import given, settings, strategies as st

from snzeros import (
    Partition,
    WeightMismatch,
    character,
    classify,
    dimension,
    partitions_of,
)

import checks


def all_partitions(n):
    return [Partition(t) for t in partitions_of(n)]


class TestCharacter:
    def test_trivial_character_is_one(self):
        for mu in all_partitions(8):
            assert character(Partition((8,)), mu) == 1

    def test_hand_worked_value(self):
        assert character(Partition((3, 1)), Partition((2, 2))) == -1

    def test_s4_table_zero(self):
        assert character(Partition((2, 2)), Partition((2, 1, 1))) == 0

    def test_sign_character(self):
        for n in range(1, 11):
            col = Partition((1,) * n)
            for mu in all_partitions(n):
                assert character(col, mu) == (-1) ** (n - mu.length)

    def test_empty_on_empty(self):
        assert character(Partition(()), Partition(())) == 1

    def test_weight_mismatch(self):
        with pytest.raises(WeightMismatch):
            character(Partition((2, 1)), Partition((2, 2)))

    def test_base_case_consistency(self):
        checks.check_dimension_base_case(max_n=12)

    def test_column_orthogonality(self):
        checks.check_column_orthogonality(max_n=12)

    def test_agrees_with_naive_recursion(self):
        checks.check_naive_mn_agreement(max_n=9)

    @given(st.integers(2, 11), st.randoms(use_true_random=False))
    @settings(max_examples=60, deadline=None)
    def test_bounded_by_dimension(self, n, rnd):
        shapes = all_partitions(n)
        lam = rnd.choice(shapes)
        mu = rnd.choice(shapes)
        assert abs(character(lam, mu)) <= dimension(lam)


class TestClassify:
    def test_type1_example(self):
        zc = classify(Partition((2, 2)), Partition((4,)))
        assert (zc.is_zero, zc.is_type1, zc.is_type2) == (True, True, True)

    def test_untyped_zero(self):
        zc = classify(Partition((2, 2)), Partition((2, 1, 1)))
        assert (zc.is_zero, zc.is_type1, zc.is_type2) == (True, False, False)

    def test_nonzero(self):
        zc = classify(Partition((4,)), Partition((2, 2)))
        assert not zc.is_zero

    def test_no_eval_reports_lower_bound(self):
        zc = classify(Partition((2, 2)), Partition((2, 1, 1)), evaluate=False)
        assert not zc.evaluated
        assert zc.is_zero == zc.is_type2 == False  # noqa: E712

    def test_chain_invariant(self):
        for n in range(1, 10):
            shapes = all_partitions(n)
            for lam in shapes:
                for mu in shapes:
                    zc = classify(lam, mu)
                    assert zc.is_type1 <= zc.is_type2 <= zc.is_zero

    def test_weight_mismatch(self):
        with pytest.raises(WeightMismatch):
            classify(Partition((3,)), Partition((2, 2)))

    def test_type_soundness(self):
        checks.check_type_soundness(max_n=12)
