"""Verification harness: reports, pass/fail/refused semantics, mutation guard."""

import pytest

from rankmoments import (
    verify_all,
    verify_andrews,
    verify_gf,
    verify_ji,
    verify_moment_relation,
    verify_negative_rank,
    verify_positive_rank,
    verify_solution_counts,
    verify_symmetry,
    verify_zero_rank,
)
from rankmoments import durfee
from rankmoments.identities import _run


@pytest.fixture
def fresh_durfee_caches():
    durfee.clear_caches()
    yield
    durfee.clear_caches()


class TestReportSemantics:
    def test_pass_requires_cases(self):
        report = _run("x", {}, iter([]))
        assert report.status == "fail"
        assert report.cases_checked == 0

    def test_mismatch_recorded_as_strings(self):
        report = _run("x", {}, iter([({"n": 3}, 4, 5)]))
        assert report.status == "fail"
        assert report.counterexamples == [
            {"inputs": {"n": 3}, "lhs": "4", "rhs": "5"}
        ]

    def test_json_shape(self):
        report = verify_andrews(1, 3)
        d = report.to_json_dict()
        assert set(d) == {
            "identity", "params", "cases_checked", "status", "counterexamples",
        }
        assert d["status"] == "pass"
        assert d["cases_checked"] == 3

    def test_refusal_distinct_from_failure(self):
        report = verify_ji(5, 30, 2)
        assert report.status == "refused"
        assert report.counterexamples == []
        assert not report.passed


class TestAndrews:
    def test_k1(self):
        report = verify_andrews(1, 10)
        assert report.passed
        assert report.cases_checked == 10

    def test_k1_edge_n1_both_sides_zero(self):
        assert verify_andrews(1, 1).passed

    def test_k2(self):
        assert verify_andrews(2, 8).passed


class TestRankInterpretations:
    def test_zero_rank_all_indices(self):
        report = verify_zero_rank(1, 6)
        assert report.passed
        assert report.cases_checked == 12  # 6 values of n times i in {1, 2}

    def test_specific_index(self):
        assert verify_zero_rank(1, 5, i=2).passed
        assert verify_positive_rank(1, 5, i=1).passed

    @pytest.mark.parametrize("k", [1, 2])
    def test_positive_and_negative(self, k):
        assert verify_positive_rank(k, 6).passed
        assert verify_negative_rank(k, 6).passed


class TestJiAndSymmetry:
    def test_ji_small(self):
        report = verify_ji(2, 6, 2)
        assert report.passed
        assert report.cases_checked == 6 * 5 * 5

    def test_ji_k3(self):
        assert verify_ji(3, 6, 2).passed

    def test_ji_requires_k_at_least_2(self):
        with pytest.raises(ValueError):
            verify_ji(1, 5, 2)

    def test_symmetry(self):
        assert verify_symmetry(2, 6).passed
        assert verify_symmetry(3, 6).passed

    def test_symmetry_exhaustive_range(self):
        assert verify_symmetry(3, 12).passed


class TestGf:
    def test_odd_and_even(self):
        assert verify_gf(1, 15, "odd").passed
        assert verify_gf(2, 15, "even").passed

    def test_rank_gf_mode_uses_k_as_m_bound(self):
        report = verify_gf(3, 20, "rank_gf")
        assert report.passed
        assert report.cases_checked == 7 * 20

    def test_marked(self):
        assert verify_gf(1, 8, "marked").passed

    def test_unknown_which(self):
        with pytest.raises(ValueError):
            verify_gf(1, 5, "both")


class TestStructural:
    def test_moment_relation(self):
        report = verify_moment_relation(2, 20)
        assert report.passed
        assert report.cases_checked == 2 * 20 * 2

    def test_solution_counts(self):
        assert verify_solution_counts(2, 8).passed


class TestVerifyAll:
    def test_quick_profile_passes(self):
        reports = verify_all("quick")
        assert all(r.passed for r in reports)
        ids = {r.identity_id for r in reports}
        assert ids == {
            "andrews", "zero-rank", "positive-rank", "negative-rank",
            "ji", "symmetry", "gf", "moment-relation", "solution-counts",
        }

    def test_unknown_profile(self):
        with pytest.raises(ValueError):
            verify_all("exhaustive")


class TestMutationGuard:
    def test_dropping_rank_adjustment_is_detected(
        self, monkeypatch, fresh_durfee_caches
    ):
        # deliberately broken i-th rank: the -1 adjustment for i < k removed
        def broken_ranks(sym):
            k = sym.k
            return tuple(
                alpha.length - beta.length
                for i, (alpha, beta) in enumerate(sym.vectors, start=1)
            )

        monkeypatch.setattr(durfee, "ranks", broken_ranks)
        report = verify_zero_rank(1, 5)
        assert report.status == "fail"
        assert any(ce["inputs"]["n"] == 5 for ce in report.counterexamples)

    def test_suite_recovers_after_restoration(self, fresh_durfee_caches):
        assert verify_zero_rank(1, 5).passed
