"""Integer partitions, Dyson ranks, and exact rank distributions.

The rank of a partition is its largest part minus its number of parts.
``N(m, n)``, the number of partitions of n with rank m, is computed here by
direct counting: enumerate every partition of n and tally ranks. This module
is the brute-force oracle everything downstream is checked against, so it
stays deliberately dumb; the only sophistication is Euler's pentagonal
recurrence for p(n), which serves as an independent cross-check on the
enumeration itself.
"""

from __future__ import annotations

import math
import threading
from collections import Counter
from dataclasses import dataclass
from types import MappingProxyType
from typing import IO, Iterator, Mapping

from .config import CapExceededError, rank_n_cap

__all__ = [
    "EmptyPartitionError",
    "Partition",
    "RankDistribution",
    "enumerate_partitions",
    "bounded_partitions",
    "rank",
    "rank_distribution",
    "count_with_rank",
    "partition_count",
    "save_rank_distributions",
    "load_rank_distributions",
    "clear_caches",
]


class EmptyPartitionError(ValueError):
    """The rank of the empty partition is undefined."""


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of positive integer parts.

    The empty partition is allowed: its weight and length are 0, its largest
    part is 0, and its smallest part is the sentinel ``math.inf`` (meaning
    "no lower constraint"). Those conventions make the marked-Durfee-symbol
    condition checks uniform.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for i, p in enumerate(parts):
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"parts must be positive integers, got {p!r}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    @property
    def smallest(self) -> int | float:
        """Smallest part; ``math.inf`` for the empty partition."""
        return self.parts[-1] if self.parts else math.inf

    @property
    def is_empty(self) -> bool:
        return not self.parts

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class RankDistribution:
    """For fixed n, the finite map m -> N(m, n) over nonzero counts."""

    n: int
    counts: Mapping[int, int]

    def count(self, m: int) -> int:
        """N(m, n); zero for any rank not attained."""
        return self.counts.get(m, 0)

    def total(self) -> int:
        """Sum over all ranks, i.e. p(n)."""
        return sum(self.counts.values())

    def support(self) -> list[int]:
        """Attained ranks in ascending order."""
        return sorted(self.counts)

    def sorted_items(self) -> list[tuple[int, int]]:
        return sorted(self.counts.items())


def _check_n_cap(n: int) -> None:
    cap = rank_n_cap()
    if n > cap:
        raise CapExceededError(
            f"n={n} exceeds the configured cap {cap}; "
            f"raise RANKMOMENTS_MAX_N to override"
        )


def _descending_partitions(remaining: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if remaining == 0:
        yield ()
        return
    for first in range(min(remaining, max_part), 0, -1):
        for rest in _descending_partitions(remaining - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of n exactly once, lexicographically decreasing.

    The canonical order starts at the single-part partition (n) and ends at
    the all-ones partition; n = 0 yields exactly the empty partition. The
    order is fixed so golden-file tests stay stable.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    _check_n_cap(n)  # eager: refuse before handing out the generator

    def gen() -> Iterator[Partition]:
        for parts in _descending_partitions(n, n if n else 1):
            yield Partition(parts)

    return gen()


def bounded_partitions(
    n: int, min_part: int = 1, max_part: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Yield partitions of n with every part in [min_part, max_part].

    Raw tuples in lexicographically decreasing order; ``max_part=None``
    means unbounded. n = 0 yields the empty tuple regardless of bounds.
    """
    if n == 0:
        yield ()
        return
    lo = max(min_part, 1)
    top = n if max_part is None else min(n, max_part)
    for first in range(top, lo - 1, -1):
        for rest in bounded_partitions(n - first, lo, first):
            yield (first,) + rest


def rank(p: Partition) -> int:
    """Dyson rank: largest part minus number of parts.

    Raises EmptyPartitionError for the empty partition; the rank is only
    defined for partitions of n >= 1.
    """
    if p.is_empty:
        raise EmptyPartitionError("rank of the empty partition is undefined")
    return p.largest - p.length


def _tally_ranks(n: int) -> Counter[int]:
    # Ascending-composition partition generator (accel_asc), tallied in
    # place: the largest part is a[k] and the length is k+1, so no partition
    # object is materialized on this hot path.
    counts: Counter[int] = Counter()
    a = [0] * (n + 1)
    k = 1
    a[1] = n
    while k != 0:
        x = a[k - 1] + 1
        y = a[k] - 1
        k -= 1
        while x <= y:
            a[k] = x
            y -= x
            k += 1
        a[k] = x + y
        counts[a[k] - (k + 1)] += 1
    return counts


_dist_cache: dict[int, RankDistribution] = {}
_dist_lock = threading.Lock()


def rank_distribution(n: int) -> RankDistribution:
    """All rank counts N(m, n) for a fixed n >= 1, by direct enumeration.

    Distributions are memoized per n (moments and identity checks reuse them
    heavily); the cache is lock-protected and safe for concurrent use.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    _check_n_cap(n)
    with _dist_lock:
        hit = _dist_cache.get(n)
    if hit is not None:
        return hit
    dist = RankDistribution(n, MappingProxyType(dict(_tally_ranks(n))))
    with _dist_lock:
        return _dist_cache.setdefault(n, dist)


def count_with_rank(m: int, n: int) -> int:
    """N(m, n): the number of partitions of n with rank m."""
    return rank_distribution(n).count(m)


_pentagonal_cache: list[int] = [1]
_pentagonal_lock = threading.Lock()


def partition_count(n: int) -> int:
    """p(n) via Euler's pentagonal recurrence, independent of enumeration.

    p(n) = sum_{j>=1} (-1)^{j-1} (p(n - j(3j-1)/2) + p(n - j(3j+1)/2)).
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    with _pentagonal_lock:
        table = _pentagonal_cache
        while len(table) <= n:
            m = len(table)
            total = 0
            j = 1
            while True:
                g1 = j * (3 * j - 1) // 2
                g2 = j * (3 * j + 1) // 2
                if g1 > m and g2 > m:
                    break
                sign = -1 if j % 2 == 0 else 1
                if g1 <= m:
                    total += sign * table[m - g1]
                if g2 <= m:
                    total += sign * table[m - g2]
                j += 1
            table.append(total)
        return table[n]


def save_rank_distributions(destination: str | IO[str], n_max: int) -> None:
    """Persist N(m, n) for 1 <= n <= n_max as CSV.

    Header ``n,m,count``, one row per nonzero count, sorted by (n, m).
    """
    rows = ["n,m,count"]
    for n in range(1, n_max + 1):
        for m, c in rank_distribution(n).sorted_items():
            rows.append(f"{n},{m},{c}")
    text = "\n".join(rows) + "\n"
    if isinstance(destination, str):
        with open(destination, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        destination.write(text)


def load_rank_distributions(
    source: str | IO[str], *, seed_cache: bool = False
) -> dict[int, RankDistribution]:
    """Read a distribution CSV back; optionally seed the in-process cache."""
    if isinstance(source, str):
        with open(source, "r", encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    else:
        lines = source.read().splitlines()
    if not lines or lines[0] != "n,m,count":
        raise ValueError("expected header 'n,m,count'")
    by_n: dict[int, dict[int, int]] = {}
    for line in lines[1:]:
        if not line:
            continue
        n_s, m_s, c_s = line.split(",")
        by_n.setdefault(int(n_s), {})[int(m_s)] = int(c_s)
    dists = {
        n: RankDistribution(n, MappingProxyType(counts))
        for n, counts in by_n.items()
    }
    if seed_cache:
        with _dist_lock:
            for n, dist in dists.items():
                _dist_cache.setdefault(n, dist)
    return dists


def clear_caches() -> None:
    """Drop memoized rank distributions and p(n) values (mainly for tests)."""
    global _pentagonal_cache
    with _dist_lock:
        _dist_cache.clear()
    with _pentagonal_lock:
        _pentagonal_cache = [1]
