"""Named verifications cross-checking two independent computation paths.

Each verification pits direct enumeration (partitions or marked Durfee
symbols) against a structurally unrelated route (q-series coefficients,
moment sums, binomial closed forms) and reports counterexamples as data.
The two sides of a check share no code beyond the Partition type; that
independence is a deliberate test-design rule, not an accident.

A report's status is ``pass`` only when at least one case was checked and
none failed; exceeding a desk-scale cap yields ``refused``, which is
distinct from failure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from . import durfee, moments, qseries
from .config import CapExceededError
from .partitions import count_with_rank, partition_count, rank_distribution

__all__ = [
    "VerificationReport",
    "verify_andrews",
    "verify_zero_rank",
    "verify_positive_rank",
    "verify_negative_rank",
    "verify_ji",
    "verify_symmetry",
    "verify_gf",
    "verify_moment_relation",
    "verify_solution_counts",
    "verify_all",
    "IDENTITY_IDS",
]

# Keep failure reports bounded; enough to localize a defect.
MAX_COUNTEREXAMPLES = 50

Case = tuple[dict, int, int]  # (inputs, lhs, rhs)


@dataclass
class VerificationReport:
    identity_id: str
    parameters: dict
    cases_checked: int = 0
    status: str = "refused"  # pass | fail | refused
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_dict(self) -> dict:
        return {
            "identity": self.identity_id,
            "params": self.parameters,
            "cases_checked": self.cases_checked,
            "status": self.status,
            "counterexamples": self.counterexamples,
        }


def _run(identity_id: str, parameters: dict, cases: Iterable[Case]) -> VerificationReport:
    report = VerificationReport(identity_id, parameters)
    try:
        for inputs, lhs, rhs in cases:
            report.cases_checked += 1
            if lhs != rhs:
                if len(report.counterexamples) < MAX_COUNTEREXAMPLES:
                    report.counterexamples.append(
                        {"inputs": inputs, "lhs": str(lhs), "rhs": str(rhs)}
                    )
    except CapExceededError:
        report.status = "refused"
        return report
    if report.counterexamples or report.cases_checked == 0:
        report.status = "fail"
    else:
        report.status = "pass"
    return report


def verify_andrews(k: int, n_max: int) -> VerificationReport:
    """eta_2k(n) equals the number of (k+1)-marked Durfee symbols of n."""

    def cases() -> Iterator[Case]:
        for n in range(1, n_max + 1):
            yield (
                {"k": k, "n": n},
                moments.symmetrized_moment(2 * k, n),
                durfee.count_marked(k + 1, n),
            )

    return _run("andrews", {"k": k, "n_max": n_max}, cases())


def _verify_rank_filter(
    identity_id: str,
    moment_index_of_k,
    filter: durfee.RankFilter,
    k: int,
    n_max: int,
    i: int | None,
) -> VerificationReport:
    indices = range(1, k + 2) if i is None else (i,)

    def cases() -> Iterator[Case]:
        for n in range(1, n_max + 1):
            expected = moments.symmetrized_positive_moment(moment_index_of_k(k), n)
            for idx in indices:
                yield (
                    {"k": k, "i": idx, "n": n},
                    expected,
                    durfee.count_ith_rank_filtered(k + 1, idx, filter, n),
                )

    params = {"k": k, "n_max": n_max, "i": "all" if i is None else i}
    return _run(identity_id, params, cases())


def verify_zero_rank(k: int, n_max: int, i: int | None = None) -> VerificationReport:
    """etabar_(2k-1)(n) counts (k+1)-marked symbols with i-th rank zero.

    ``i = None`` checks every admissible index 1..k+1.
    """
    return _verify_rank_filter("zero-rank", lambda k: 2 * k - 1, "zero", k, n_max, i)


def verify_positive_rank(k: int, n_max: int, i: int | None = None) -> VerificationReport:
    """etabar_2k(n) counts (k+1)-marked symbols with i-th rank positive."""
    return _verify_rank_filter("positive-rank", lambda k: 2 * k, "positive", k, n_max, i)


def verify_negative_rank(k: int, n_max: int, i: int | None = None) -> VerificationReport:
    """Mirror form: etabar_2k(n) also counts symbols with i-th rank negative."""
    return _verify_rank_filter("negative-rank", lambda k: 2 * k, "negative", k, n_max, i)


def _truncated_rank_sum(m_vec: tuple[int, ...], n: int, k: int) -> int:
    # sum over t_1..t_(k-1) >= 0 of N(sum|m_i| + 2 sum t_i + k - 1, n);
    # finite because arguments above n-1 contribute nothing.
    base = sum(abs(m) for m in m_vec) + k - 1
    dist = rank_distribution(n)
    total = 0

    def rec(vars_left: int, acc: int) -> None:
        nonlocal total
        if vars_left == 0:
            if acc <= n - 1:
                total += dist.count(acc)
            return
        arg = acc
        while arg <= n - 1:
            rec(vars_left - 1, arg)
            arg += 2

    rec(k - 1, base)
    return total


def verify_ji(k: int, n_max: int, m_bound: int) -> VerificationReport:
    """D_k(m_vec; n) equals the truncated sum of rank counts
    N(sum|m_i| + 2 sum t_i + k - 1, n) over nonnegative t vectors (k >= 2).
    """
    if k < 2:
        raise ValueError(f"the identity requires k >= 2, got {k}")

    def cases() -> Iterator[Case]:
        for n in range(1, n_max + 1):
            tally = durfee.rank_vector_tally(k, n)
            for m_vec in itertools.product(
                range(-m_bound, m_bound + 1), repeat=k
            ):
                yield (
                    {"k": k, "n": n, "m_vec": list(m_vec)},
                    tally.get(m_vec, 0),
                    _truncated_rank_sum(m_vec, n, k),
                )

    return _run("ji", {"k": k, "n_max": n_max, "m_bound": m_bound}, cases())


def verify_symmetry(k: int, n_max: int) -> VerificationReport:
    """D_k is invariant under permuting and negating rank-vector entries."""

    def cases() -> Iterator[Case]:
        for n in range(1, n_max + 1):
            tally = durfee.rank_vector_tally(k, n)
            for m_vec, count in sorted(tally.items()):
                for perm in itertools.permutations(m_vec):
                    yield (
                        {"k": k, "n": n, "m_vec": list(m_vec), "image": list(perm)},
                        count,
                        tally.get(perm, 0),
                    )
                for signs in itertools.product((1, -1), repeat=k):
                    flipped = tuple(s * m for s, m in zip(signs, m_vec))
                    yield (
                        {"k": k, "n": n, "m_vec": list(m_vec), "image": list(flipped)},
                        count,
                        tally.get(flipped, 0),
                    )

    return _run("symmetry", {"k": k, "n_max": n_max}, cases())


def verify_gf(k: int, n_max: int, which: str) -> VerificationReport:
    """Series coefficients equal the corresponding direct computations.

    which = "odd" / "even": symmetrized positive moment generating functions
    against moment sums for index 2k-1 / 2k. which = "rank_gf": rank-count
    series against direct counts for all |m| <= k (k doubles as the m
    bound). which = "marked": both multivariate generating functions against
    enumerated (k+1)-marked rank-vector counts.
    """
    params = {"k": k, "n_max": n_max, "which": which}

    if which == "odd" or which == "even":
        index = 2 * k - 1 if which == "odd" else 2 * k
        series = (qseries.eta_bar_odd_gf if which == "odd" else qseries.eta_bar_even_gf)(
            k, n_max
        )

        def cases() -> Iterator[Case]:
            for n in range(1, n_max + 1):
                yield (
                    {"k": k, "n": n},
                    series.coefficient_at(n),
                    moments.symmetrized_positive_moment(index, n),
                )

        return _run("gf", params, cases())

    if which == "rank_gf":

        def cases() -> Iterator[Case]:
            for m in range(-k, k + 1):
                series = qseries.rank_gf(m, n_max)
                for n in range(1, n_max + 1):
                    yield (
                        {"m": m, "n": n},
                        series.coefficient_at(n),
                        count_with_rank(m, n),
                    )

        return _run("gf", params, cases())

    if which == "marked":
        zero_gf = qseries.marked_zero_rank_gf(k, n_max, n_max)
        pos_gf = qseries.marked_positive_rank_gf(k, n_max, n_max)

        def cases() -> Iterator[Case]:
            for n in range(1, n_max + 1):
                tally = durfee.rank_vector_tally(k + 1, n)
                seen_zero = dict(zero_gf.coefficient(n).terms)
                seen_pos = dict(pos_gf.coefficient(n).terms)
                for m_rest in itertools.product(range(-n, n + 1), repeat=k):
                    yield (
                        {"n": n, "m_vec": [0, *m_rest]},
                        seen_zero.pop(m_rest, 0),
                        tally.get((0, *m_rest), 0),
                    )
                for m1 in range(1, n + 1):
                    for m_rest in itertools.product(range(-n, n + 1), repeat=k):
                        yield (
                            {"n": n, "m_vec": [m1, *m_rest]},
                            seen_pos.pop((m1, *m_rest), 0),
                            tally.get((m1, *m_rest), 0),
                        )
                # any leftover series monomial would be a phantom count
                for exps, c in seen_zero.items():
                    yield ({"n": n, "extra_zero": list(exps)}, c, 0)
                for exps, c in seen_pos.items():
                    yield ({"n": n, "extra_positive": list(exps)}, c, 0)

        return _run("gf", params, cases())

    raise ValueError(
        f"unknown which {which!r}; expected odd, even, rank_gf, or marked"
    )


def verify_moment_relation(k_max: int, n_max: int) -> VerificationReport:
    """eta_2k = 2 etabar_2k + etabar_(2k-1), and odd eta vanish."""

    def cases() -> Iterator[Case]:
        for k in range(1, k_max + 1):
            for n in range(1, n_max + 1):
                yield (
                    {"k": k, "n": n, "relation": "even-split"},
                    moments.symmetrized_moment(2 * k, n),
                    2 * moments.symmetrized_positive_moment(2 * k, n)
                    + moments.symmetrized_positive_moment(2 * k - 1, n),
                )
                yield (
                    {"k": k, "n": n, "relation": "odd-vanishes"},
                    moments.symmetrized_moment(2 * k + 1, n),
                    0,
                )

    return _run("moment-relation", {"k_max": k_max, "n_max": n_max}, cases())


def verify_solution_counts(k_max: int, n_max: int) -> VerificationReport:
    """Brute-force solution counters match their binomial closed forms."""

    def cases() -> Iterator[Case]:
        for k in range(1, k_max + 1):
            for n in range(0, n_max + 1):
                for variant in ("free", "positive_first"):
                    yield (
                        {"k": k, "n": n, "variant": variant},
                        moments.solution_count(k, n, variant),
                        moments.solution_count_formula(k, n, variant),
                    )

    return _run("solution-counts", {"k_max": k_max, "n_max": n_max}, cases())


IDENTITY_IDS = (
    "andrews",
    "zero-rank",
    "positive-rank",
    "negative-rank",
    "ji",
    "symmetry",
    "gf",
    "moment-relation",
    "solution-counts",
)


def verify_all(profile: str = "quick") -> list[VerificationReport]:
    """Run the whole suite at a desk-scale parameter profile.

    ``quick`` finishes in seconds (k <= 2, n <= 10 enumeration, order 30);
    ``full`` stretches to k <= 3, n <= 14 enumeration and order/n 60 on the
    series and moment side.
    """
    if profile == "quick":
        jobs = [
            lambda: verify_andrews(1, 10),
            lambda: verify_andrews(2, 10),
            lambda: verify_zero_rank(1, 10),
            lambda: verify_zero_rank(2, 10),
            lambda: verify_positive_rank(1, 10),
            lambda: verify_positive_rank(2, 10),
            lambda: verify_negative_rank(1, 10),
            lambda: verify_negative_rank(2, 10),
            lambda: verify_ji(2, 10, 2),
            lambda: verify_symmetry(2, 10),
            lambda: verify_gf(1, 30, "odd"),
            lambda: verify_gf(2, 30, "odd"),
            lambda: verify_gf(1, 30, "even"),
            lambda: verify_gf(2, 30, "even"),
            lambda: verify_gf(4, 30, "rank_gf"),
            lambda: verify_gf(1, 10, "marked"),
            lambda: verify_moment_relation(2, 30),
            lambda: verify_solution_counts(2, 10),
        ]
    elif profile == "full":
        jobs = [
            lambda: verify_andrews(1, 14),
            lambda: verify_andrews(2, 14),
            lambda: verify_zero_rank(1, 14),
            lambda: verify_zero_rank(2, 14),
            lambda: verify_positive_rank(1, 14),
            lambda: verify_positive_rank(2, 14),
            lambda: verify_negative_rank(1, 14),
            lambda: verify_negative_rank(2, 14),
            lambda: verify_ji(2, 12, 3),
            lambda: verify_ji(3, 12, 3),
            lambda: verify_symmetry(2, 14),
            lambda: verify_symmetry(3, 12),
            lambda: verify_gf(1, 40, "odd"),
            lambda: verify_gf(2, 40, "odd"),
            lambda: verify_gf(3, 40, "odd"),
            lambda: verify_gf(1, 40, "even"),
            lambda: verify_gf(2, 40, "even"),
            lambda: verify_gf(3, 40, "even"),
            lambda: verify_gf(6, 60, "rank_gf"),
            lambda: verify_gf(1, 12, "marked"),
            lambda: verify_moment_relation(4, 60),
            lambda: verify_solution_counts(3, 20),
        ]
    else:
        raise ValueError(f"unknown profile {profile!r}; expected quick or full")
    return [job() for job in jobs]
