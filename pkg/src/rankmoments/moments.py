"""Rank moments: ordinary, positive, symmetrized, symmetrized-positive.

All sums run over the exact rank distribution of n:

* ordinary moment          N_j(n)     = sum_m m^j N(m, n)
* positive moment          Nbar_j(n)  = sum_{m>=1} m^j N(m, n)
* symmetrized moment       eta_k(n)   = sum_m C(m + floor((k-1)/2), k) N(m, n)
* symmetrized positive     etabar_k(n) = the same sum restricted to m >= 1

The binomial here is the polynomial (falling-factorial) extension, defined
for negative upper arguments; that extension is what makes eta_2(5) = 21
(C(-4, 2) = 10 contributes). Odd symmetrized moments vanish by the rank
symmetry N(m, n) = N(-m, n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import IO

from .partitions import rank_distribution

__all__ = [
    "binomial",
    "ordinary_moment",
    "positive_moment",
    "symmetrized_moment",
    "symmetrized_positive_moment",
    "linear_combination_check",
    "solution_count",
    "solution_count_formula",
    "MomentTable",
    "MOMENT_KINDS",
]


def binomial(x: int, k: int) -> int:
    """C(x, k) = x(x-1)...(x-k+1) / k! for any integer x, k >= 0.

    Always an exact integer; e.g. C(-4, 2) = 10, C(3, 5) = 0.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    num = 1
    for i in range(k):
        num *= x - i
    return num // math.factorial(k)


def ordinary_moment(j: int, n: int) -> int:
    """N_j(n) = sum_m m^j N(m, n)."""
    if j < 0:
        raise ValueError(f"j must be nonnegative, got {j}")
    return sum(m**j * c for m, c in rank_distribution(n).counts.items())


def positive_moment(j: int, n: int) -> int:
    """Nbar_j(n) = sum_{m>=1} m^j N(m, n)."""
    if j < 0:
        raise ValueError(f"j must be nonnegative, got {j}")
    return sum(m**j * c for m, c in rank_distribution(n).counts.items() if m >= 1)


def symmetrized_moment(k: int, n: int) -> int:
    """eta_k(n) = sum_m C(m + floor((k-1)/2), k) N(m, n)."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    shift = (k - 1) // 2
    return sum(
        binomial(m + shift, k) * c for m, c in rank_distribution(n).counts.items()
    )


def symmetrized_positive_moment(k: int, n: int) -> int:
    """etabar_k(n): the symmetrized sum truncated to positive ranks."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    shift = (k - 1) // 2
    return sum(
        binomial(m + shift, k) * c
        for m, c in rank_distribution(n).counts.items()
        if m >= 1
    )


_FORMULAS = {
    # eta_6 = N_6/720 - N_4/144 + N_2/180
    "eta6": (
        lambda n: Fraction(symmetrized_moment(6, n)),
        lambda n: (
            Fraction(ordinary_moment(6, n), 720)
            - Fraction(ordinary_moment(4, n), 144)
            + Fraction(ordinary_moment(2, n), 180)
        ),
    ),
    # etabar_4 = Nbar_4/24 - Nbar_3/12 - Nbar_2/24 + Nbar_1/12
    "etabar4": (
        lambda n: Fraction(symmetrized_positive_moment(4, n)),
        lambda n: (
            Fraction(positive_moment(4, n), 24)
            - Fraction(positive_moment(3, n), 12)
            - Fraction(positive_moment(2, n), 24)
            + Fraction(positive_moment(1, n), 12)
        ),
    ),
    # etabar_5 = Nbar_5/120 - Nbar_3/24 + Nbar_1/30
    "etabar5": (
        lambda n: Fraction(symmetrized_positive_moment(5, n)),
        lambda n: (
            Fraction(positive_moment(5, n), 120)
            - Fraction(positive_moment(3, n), 24)
            + Fraction(positive_moment(1, n), 30)
        ),
    ),
}


def linear_combination_check(formula_id: str, n: int) -> bool:
    """Assert one of the displayed moment linear combinations at n.

    formula_id is one of ``eta6``, ``etabar4``, ``etabar5``; the comparison
    runs over exact rationals, the fractional coefficients never round.
    """
    try:
        lhs, rhs = _FORMULAS[formula_id]
    except KeyError:
        raise ValueError(
            f"unknown formula {formula_id!r}; expected one of {sorted(_FORMULAS)}"
        ) from None
    return lhs(n) == rhs(n)


def solution_count(k: int, n: int, variant: str = "free") -> int:
    """Count integer solutions of |m_2|+...+|m_(k+1)| + 2t_1+...+2t_k = n.

    The ``free`` variant has k unrestricted integer m's and k nonnegative
    t's; ``positive_first`` adds a strictly positive m_1 term to the left
    side. Brute-force enumeration, used as the oracle for the binomial
    closed forms C(n+2k-1, 2k-1) and C(n+2k-1, 2k).
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if variant not in ("free", "positive_first"):
        raise ValueError(f"unknown variant {variant!r}")

    def count_t(vars_left: int, budget: int) -> int:
        if vars_left == 0:
            return 1 if budget == 0 else 0
        total = 0
        t = 0
        while 2 * t <= budget:
            total += count_t(vars_left - 1, budget - 2 * t)
            t += 1
        return total

    def count_m(vars_left: int, budget: int) -> int:
        if vars_left == 0:
            return count_t(k, budget)
        total = count_m(vars_left - 1, budget)  # m = 0
        for a in range(1, budget + 1):  # m = +-a
            total += 2 * count_m(vars_left - 1, budget - a)
        return total

    if variant == "free":
        return count_m(k, n)
    return sum(count_m(k, n - m1) for m1 in range(1, n + 1))


def solution_count_formula(k: int, n: int, variant: str = "free") -> int:
    """Binomial closed form the brute-force count is checked against."""
    if variant == "free":
        return binomial(n + 2 * k - 1, 2 * k - 1)
    if variant == "positive_first":
        return binomial(n + 2 * k - 1, 2 * k)
    raise ValueError(f"unknown variant {variant!r}")


MOMENT_KINDS = ("n", "nbar", "eta", "eta-bar")

_KIND_FUNCS = {
    "n": ordinary_moment,
    "nbar": positive_moment,
    "eta": symmetrized_moment,
    "eta-bar": symmetrized_positive_moment,
}


@dataclass(frozen=True)
class MomentTable:
    """A moment family evaluated over a range of n, exact values."""

    kind: str
    index: int
    values: dict[int, int]

    @classmethod
    def compute(cls, kind: str, index: int, n_max: int) -> "MomentTable":
        if kind not in _KIND_FUNCS:
            raise ValueError(f"unknown kind {kind!r}; expected one of {MOMENT_KINDS}")
        func = _KIND_FUNCS[kind]
        return cls(kind, index, {n: func(index, n) for n in range(1, n_max + 1)})

    def to_csv(self, destination: str | IO[str]) -> None:
        """Write rows ``n,value`` with exact decimal values."""
        rows = ["n,value"]
        for n in sorted(self.values):
            rows.append(f"{n},{self.values[n]}")
        text = "\n".join(rows) + "\n"
        if isinstance(destination, str):
            with open(destination, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        else:
            destination.write(text)
