"""Moment computations, linear combinations, and solution counters."""

import io

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rankmoments import (
    MomentTable,
    binomial,
    linear_combination_check,
    ordinary_moment,
    partition_count,
    positive_moment,
    solution_count,
    solution_count_formula,
    symmetrized_moment,
    symmetrized_positive_moment,
)


class TestBinomial:
    def test_polynomial_extension(self):
        assert binomial(-4, 2) == 10
        assert binomial(-2, 2) == 3
        assert binomial(-1, 2) == 1
        assert binomial(-2, 6) == 7

    def test_ordinary_values(self):
        assert binomial(4, 2) == 6
        assert binomial(3, 5) == 0
        assert binomial(7, 0) == 1

    def test_rejects_negative_k(self):
        with pytest.raises(ValueError):
            binomial(3, -1)


class TestOrdinaryAndPositive:
    def test_examples_at_5(self):
        assert ordinary_moment(1, 5) == 0
        assert ordinary_moment(2, 5) == 42  # 2 * (1 + 4 + 16)
        assert ordinary_moment(0, 5) == 7
        assert positive_moment(1, 5) == 7  # 1 + 2 + 4
        assert positive_moment(0, 5) == 3

    @pytest.mark.parametrize("j", range(5))
    def test_positive_moments_of_1_vanish(self, j):
        assert positive_moment(j, 1) == 0

    @settings(max_examples=30, deadline=None)
    @given(
        j=st.integers(min_value=1, max_value=4).map(lambda x: 2 * x - 1),
        n=st.integers(min_value=1, max_value=25),
    )
    def test_odd_ordinary_moments_vanish(self, j, n):
        assert ordinary_moment(j, n) == 0


class TestSymmetrized:
    def test_eta2_of_5(self):
        assert symmetrized_moment(2, 5) == 21

    def test_eta2_of_5_term_by_term(self):
        # C(m, 2) over ranks -4,-2,-1,0,1,2,4: 10+3+1+0+0+1+6
        terms = [binomial(m, 2) for m in (-4, -2, -1, 0, 1, 2, 4)]
        assert terms == [10, 3, 1, 0, 0, 1, 6]
        assert sum(terms) == 21

    def test_eta3_of_5_vanishes(self):
        assert symmetrized_moment(3, 5) == 0

    def test_positive_examples(self):
        assert symmetrized_positive_moment(1, 5) == 7
        assert symmetrized_positive_moment(2, 5) == 7
        # C(5,4)*1 + C(3,4)*1 + C(2,4)*1
        assert symmetrized_positive_moment(4, 5) == 5

    @settings(max_examples=40, deadline=None)
    @given(
        k=st.integers(min_value=1, max_value=4),
        n=st.integers(min_value=1, max_value=30),
    )
    def test_even_split_relation(self, k, n):
        # eta_2k = 2 etabar_2k + etabar_(2k-1)
        assert symmetrized_moment(2 * k, n) == (
            2 * symmetrized_positive_moment(2 * k, n)
            + symmetrized_positive_moment(2 * k - 1, n)
        )

    @settings(max_examples=40, deadline=None)
    @given(
        k=st.integers(min_value=0, max_value=4),
        n=st.integers(min_value=1, max_value=30),
    )
    def test_odd_symmetrized_vanish(self, k, n):
        assert symmetrized_moment(2 * k + 1, n) == 0

    @settings(max_examples=40, deadline=None)
    @given(
        k=st.integers(min_value=1, max_value=6),
        n=st.integers(min_value=1, max_value=30),
    )
    def test_positive_kinds_are_nonnegative(self, k, n):
        assert positive_moment(k, n) >= 0
        assert symmetrized_positive_moment(k, n) >= 0

    def test_index_validation(self):
        with pytest.raises(ValueError):
            symmetrized_moment(-1, 5)
        with pytest.raises(ValueError):
            symmetrized_positive_moment(0, 5)


class TestLinearCombinations:
    @pytest.mark.parametrize("formula_id", ["eta6", "etabar4", "etabar5"])
    def test_hold_exactly(self, formula_id):
        for n in range(1, 41):
            assert linear_combination_check(formula_id, n), n

    def test_trivial_case(self):
        # at n = 1 both sides of the etabar5 formula are 0
        assert linear_combination_check("etabar5", 1)

    def test_unknown_formula(self):
        with pytest.raises(ValueError):
            linear_combination_check("eta4", 5)


class TestSolutionCounts:
    def test_small_examples(self):
        # (m_2, t_1) solutions of |m_2| + 2 t_1 = 2: (2,0), (-2,0), (0,1)
        assert solution_count(1, 2, "free") == 3
        assert solution_count(1, 0, "free") == 1
        assert solution_count(1, 0, "positive_first") == 0

    @pytest.mark.parametrize("k", [1, 2, 3])
    @pytest.mark.parametrize("variant", ["free", "positive_first"])
    def test_matches_binomial_closed_form(self, k, variant):
        for n in range(13):
            assert solution_count(k, n, variant) == solution_count_formula(
                k, n, variant
            )

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            solution_count(0, 3)
        with pytest.raises(ValueError):
            solution_count(1, -1)
        with pytest.raises(ValueError):
            solution_count(1, 3, "mixed")


class TestMomentTable:
    def test_compute_eta_bar(self):
        table = MomentTable.compute("eta-bar", 1, 5)
        assert table.values == {1: 0, 2: 1, 3: 2, 4: 4, 5: 7}

    def test_compute_ordinary_zeroth_is_partition_count(self):
        table = MomentTable.compute("n", 0, 8)
        assert table.values == {n: partition_count(n) for n in range(1, 9)}

    def test_csv_export(self):
        buf = io.StringIO()
        MomentTable.compute("eta", 2, 5).to_csv(buf)
        assert buf.getvalue() == "n,value\n1,0\n2,1\n3,4\n4,10\n5,21\n"

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            MomentTable.compute("crank", 1, 5)
