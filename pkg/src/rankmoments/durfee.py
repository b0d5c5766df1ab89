"""k-marked Durfee symbols: validation, rank vectors, exhaustive enumeration.

A k-marked Durfee symbol of n is a Durfee square side D >= 1 together with k
ordered pairs of partitions (alpha^i, beta^i), i = 1..k, subject to:

  (1) alpha^i is nonempty for 1 <= i < k; alpha^k and every beta^i may be
      empty;
  (2) for 2 <= i <= k: largest(beta^(i-1)) <= largest(alpha^(i-1)) <=
      min(smallest(alpha^i), smallest(beta^i)), where the smallest part of
      an empty partition falls back to D (the part sizes of an empty vector
      are unconstrained from below, but nothing may exceed the Durfee side);
  (3) largest(alpha^k) <= D and largest(beta^k) <= D;
  (4) sum of all vector weights plus D^2 equals n.

Consequently every part of every vector is at most D. The empty-partition
fallback in (2) is forced: it is the unique reading under which there are
exactly 21 2-marked symbols of 5 with a 7/7/7 split of the first rank into
zero/positive/negative.

The i-th rank of a symbol is length(alpha^i) - length(beta^i) - 1 for i < k
and length(alpha^k) - length(beta^k) for i = k. ``D_k(m_1,...,m_k; n)``
denotes the number of k-marked symbols of n with i-th rank m_i for all i.
"""

from __future__ import annotations

import math
import threading
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Literal, Mapping, Sequence

from .config import DEFAULT_MAX_MARKS, CapExceededError, durfee_n_cap
from .partitions import Partition

__all__ = [
    "MarkedDurfeeSymbol",
    "Verdict",
    "validate",
    "ranks",
    "enumerate_marked",
    "count_marked",
    "rank_vector_tally",
    "count_with_rank_vector",
    "count_ith_rank_filtered",
    "clear_caches",
]

RankFilter = Literal["zero", "positive", "negative"]


@dataclass(frozen=True)
class MarkedDurfeeSymbol:
    """Durfee square side plus k (alpha, beta) partition pairs.

    ``vectors[i - 1]`` holds the i-th vector; display order (JSON, repr)
    lists vectors from i = k down to 1, mirroring the two-line array
    notation.
    """

    durfee_side: int
    vectors: tuple[tuple[Partition, Partition], ...]

    def __post_init__(self) -> None:
        if self.durfee_side < 1:
            raise ValueError("Durfee square side must be positive")
        if not self.vectors:
            raise ValueError("at least one vector pair is required")

    @property
    def k(self) -> int:
        return len(self.vectors)

    @property
    def weight(self) -> int:
        total = self.durfee_side ** 2
        for alpha, beta in self.vectors:
            total += alpha.weight + beta.weight
        return total

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "D": self.durfee_side,
            "vectors": [
                {"alpha": list(alpha.parts), "beta": list(beta.parts)}
                for alpha, beta in reversed(self.vectors)
            ],
            "ranks": list(ranks(self)),
        }

    def __str__(self) -> str:
        cells = " ".join(
            f"a{i}={a} b{i}={b}"
            for i, (a, b) in zip(range(self.k, 0, -1), reversed(self.vectors))
        )
        return f"[D={self.durfee_side} {cells}]"


@dataclass(frozen=True)
class Verdict:
    """Validation outcome; a rejection names the first violated condition."""

    valid: bool
    violated_condition: int | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.valid


def _smallest_or(p: Partition, fallback: int) -> int:
    s = p.smallest
    return fallback if s == math.inf else int(s)


def validate(sym: MarkedDurfeeSymbol, expected_n: int) -> Verdict:
    """Check conditions (1)-(4) in order against the expected weight."""
    k = sym.k
    D = sym.durfee_side
    for i in range(1, k):
        if sym.vectors[i - 1][0].is_empty:
            return Verdict(False, 1, f"alpha^{i} is empty but i < k")
    for i in range(2, k + 1):
        alpha_prev, beta_prev = sym.vectors[i - 2]
        alpha_i, beta_i = sym.vectors[i - 1]
        upper = min(_smallest_or(alpha_i, D), _smallest_or(beta_i, D))
        if not (beta_prev.largest <= alpha_prev.largest <= upper):
            return Verdict(
                False,
                2,
                f"vector {i - 1}: need largest(beta) <= largest(alpha) <= {upper}",
            )
    alpha_k, beta_k = sym.vectors[-1]
    if alpha_k.largest > D or beta_k.largest > D:
        return Verdict(False, 3, f"vector {k} has a part exceeding D = {D}")
    if sym.weight != expected_n:
        return Verdict(False, 4, f"weight {sym.weight} != {expected_n}")
    return Verdict(True)


def ranks(sym: MarkedDurfeeSymbol) -> tuple[int, ...]:
    """Rank vector (rho_1, ..., rho_k).

    rho_i = length(alpha^i) - length(beta^i) - 1 for i < k; the k-th rank
    omits the -1 adjustment.
    """
    k = sym.k
    out = []
    for i, (alpha, beta) in enumerate(sym.vectors, start=1):
        r = alpha.length - beta.length
        if i < k:
            r -= 1
        out.append(r)
    return tuple(out)


def _bounded_parts(w: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    # weakly decreasing tuples with parts in [lo, hi] summing to w
    if w == 0:
        yield ()
        return
    for first in range(min(w, hi), lo - 1, -1):
        for rest in _bounded_parts(w - first, lo, first):
            yield (first,) + rest


def _stage_vectors(
    i: int, k: int, budget: int, lo: int, D: int
) -> Iterator[tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]]:
    # Bounds flow left to right: every part of stage i lies in [lo, D] with
    # lo = largest(alpha^(i-1)), and beta^i additionally stays <= largest
    # part of alpha^i for i < k. The final stage consumes the whole budget.
    if i == k:
        for wa in range(0, budget + 1):
            for alpha in _bounded_parts(wa, lo, D):
                for beta in _bounded_parts(budget - wa, lo, D):
                    yield ((alpha, beta),)
        return
    for wa in range(lo, budget + 1):
        for alpha in _bounded_parts(wa, lo, D):
            a1 = alpha[0]
            for wb in range(0, budget - wa + 1):
                for beta in _bounded_parts(wb, lo, a1):
                    for rest in _stage_vectors(i + 1, k, budget - wa - wb, a1, D):
                        yield ((alpha, beta),) + rest


def _check_caps(k: int, n: int, max_marks: int | None, max_n: int | None) -> None:
    marks_cap = DEFAULT_MAX_MARKS if max_marks is None else max_marks
    n_cap = durfee_n_cap() if max_n is None else max_n
    if k > marks_cap:
        raise CapExceededError(
            f"k={k} marks exceed the enumeration cap {marks_cap}"
        )
    if n > n_cap:
        raise CapExceededError(
            f"n={n} exceeds the enumeration cap {n_cap}; "
            f"raise RANKMOMENTS_MAX_N to override"
        )


def enumerate_marked(
    k: int, n: int, *, max_marks: int | None = None, max_n: int | None = None
) -> Iterator[MarkedDurfeeSymbol]:
    """Yield each valid k-marked Durfee symbol of n exactly once.

    Deterministic order: D ascending, then a fixed recursive order over the
    stages i = 1..k (alpha weight ascending, parts lexicographically
    decreasing, then the same for beta). Refuses above the desk-scale caps.
    """
    if k < 1 or n < 1:
        raise ValueError(f"k and n must be positive, got k={k}, n={n}")
    _check_caps(k, n, max_marks, max_n)  # eager: refuse before iteration

    def gen() -> Iterator[MarkedDurfeeSymbol]:
        for D in range(1, math.isqrt(n) + 1):
            for raw in _stage_vectors(1, k, n - D * D, 1, D):
                yield MarkedDurfeeSymbol(
                    D, tuple((Partition(a), Partition(b)) for a, b in raw)
                )

    return gen()


_tally_cache: dict[tuple[int, int], Mapping[tuple[int, ...], int]] = {}
_tally_lock = threading.Lock()


def rank_vector_tally(
    k: int, n: int, *, max_marks: int | None = None, max_n: int | None = None
) -> Mapping[tuple[int, ...], int]:
    """Map rank vector -> count over all k-marked symbols of n (memoized)."""
    key = (k, n)
    if max_marks is None and max_n is None:
        with _tally_lock:
            hit = _tally_cache.get(key)
        if hit is not None:
            return hit
    tally = Counter(
        ranks(sym) for sym in enumerate_marked(k, n, max_marks=max_marks, max_n=max_n)
    )
    result: Mapping[tuple[int, ...], int] = dict(tally)
    if max_marks is None and max_n is None:
        with _tally_lock:
            result = _tally_cache.setdefault(key, result)
    return result


def count_marked(k: int, n: int) -> int:
    """Total number of k-marked Durfee symbols of n."""
    return sum(rank_vector_tally(k, n).values())


def count_with_rank_vector(k: int, m_vec: Sequence[int], n: int) -> int:
    """D_k(m_1, ..., m_k; n): symbols whose rank vector equals m_vec."""
    m = tuple(m_vec)
    if len(m) != k:
        raise ValueError(f"rank vector must have length {k}, got {len(m)}")
    return rank_vector_tally(k, n).get(m, 0)


def count_ith_rank_filtered(k: int, i: int, filter: RankFilter, n: int) -> int:
    """Count k-marked symbols of n whose i-th rank is zero/positive/negative."""
    if not 1 <= i <= k:
        raise ValueError(f"rank index i must be in 1..{k}, got {i}")
    if filter == "zero":
        test = lambda r: r == 0
    elif filter == "positive":
        test = lambda r: r > 0
    elif filter == "negative":
        test = lambda r: r < 0
    else:
        raise ValueError(f"unknown filter {filter!r}")
    return sum(
        c for rv, c in rank_vector_tally(k, n).items() if test(rv[i - 1])
    )


def clear_caches() -> None:
    """Drop memoized rank-vector tallies (mainly for tests)."""
    with _tally_lock:
        _tally_cache.clear()
