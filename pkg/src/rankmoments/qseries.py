"""Exact truncated power series in q with sparse Laurent-polynomial coefficients.

All arithmetic is arbitrary-precision integer from the start. A series of
order O carries exact coefficients for q^0 .. q^O; products of series with
orders O1, O2 carry order min(O1, O2). Coefficients live in at most a few
auxiliary variables x_1..x_v with possibly negative exponents, stored as a
sparse map from exponent vectors to nonzero integers (v = 0 is the plain
univariate case).

The generating functions implemented here:

* ``rank_gf(m, order)``: coefficient of q^n is N(m, n), from
  (1/(q;q)_inf) * sum_{n>=1} (-1)^(n-1) q^(n(3n-1)/2 + |m|n) (1 - q^n).
* ``eta_bar_odd_gf(k, order)``: coefficient of q^n is the (2k-1)-th
  symmetrized positive rank moment, from the same alternating sum with
  exponent n(3n-1)/2 + kn over denominator (1 - q^n)^(2k-1).
* ``eta_bar_even_gf(k, order)``: the 2k-th symmetrized positive moment,
  exponent n(3n+1)/2 + kn over (1 - q^n)^(2k).
* ``marked_zero_rank_gf(k, order, max_x_degree)``: k variables; the
  coefficient of x_1^(m_2)...x_k^(m_(k+1)) q^n counts (k+1)-marked Durfee
  symbols of n with rank vector (0, m_2, ..., m_(k+1)).
* ``marked_positive_rank_gf(k, order, max_x_degree)``: k+1 variables; the
  coefficient of x_1^(m_1)...x_(k+1)^(m_(k+1)) q^n counts (k+1)-marked
  symbols with rank vector (m_1, ..., m_(k+1)), m_1 > 0.

Every alternating outer sum is truncated at the first n whose minimal
q-exponent exceeds the order; all later terms contribute nothing below the
truncation order.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Sequence

from .config import MAX_SERIES_VARIABLES, CapExceededError

__all__ = [
    "LaurentPoly",
    "TruncatedSeries",
    "series_add",
    "series_mul",
    "euler_product",
    "invert_unit_series",
    "rank_gf",
    "eta_bar_odd_gf",
    "eta_bar_even_gf",
    "marked_zero_rank_gf",
    "marked_positive_rank_gf",
    "coefficient",
]


class LaurentPoly:
    """Sparse Laurent polynomial with exact integer coefficients.

    Immutable after construction; zero coefficients are never stored, and
    every exponent vector has length ``num_vars``. ``num_vars = 0`` encodes
    a plain integer constant (the single key is the empty tuple).
    """

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: dict[tuple[int, ...], int] | None = None):
        clean: dict[tuple[int, ...], int] = {}
        for exps, c in (terms or {}).items():
            if len(exps) != num_vars:
                raise ValueError(
                    f"exponent vector {exps} has length {len(exps)}, expected {num_vars}"
                )
            if c:
                clean[tuple(exps)] = c
        self.num_vars = num_vars
        self.terms = clean

    @classmethod
    def constant(cls, value: int, num_vars: int = 0) -> "LaurentPoly":
        if value == 0:
            return cls(num_vars)
        return cls(num_vars, {(0,) * num_vars: value})

    @classmethod
    def monomial(cls, value: int, exponents: Sequence[int]) -> "LaurentPoly":
        return cls(len(exponents), {tuple(exponents): value})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return not self.terms or self.terms.keys() == {(0,) * self.num_vars}

    def constant_value(self) -> int:
        """The coefficient of the zero monomial."""
        return self.terms.get((0,) * self.num_vars, 0)

    def get(self, exponents: Sequence[int]) -> int:
        return self.terms.get(tuple(exponents), 0)

    def sum_of_coefficients(self) -> int:
        """Value at x_1 = ... = x_v = 1."""
        return sum(self.terms.values())

    def _require_same_vars(self, other: "LaurentPoly") -> None:
        if self.num_vars != other.num_vars:
            raise ValueError(
                f"num_vars mismatch: {self.num_vars} vs {other.num_vars}"
            )

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._require_same_vars(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        res = LaurentPoly.__new__(LaurentPoly)
        res.num_vars = self.num_vars
        res.terms = out
        return res

    def __neg__(self) -> "LaurentPoly":
        res = LaurentPoly.__new__(LaurentPoly)
        res.num_vars = self.num_vars
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            res = LaurentPoly.__new__(LaurentPoly)
            res.num_vars = self.num_vars
            res.terms = {e: c * other for e, c in self.terms.items()} if other else {}
            return res
        self._require_same_vars(other)
        out: dict[tuple[int, ...], int] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                v = out.get(e, 0) + ca * cb
                if v:
                    out[e] = v
                elif e in out:
                    del out[e]
        res = LaurentPoly.__new__(LaurentPoly)
        res.num_vars = self.num_vars
        res.terms = out
        return res

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.is_constant and self.constant_value() == other
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.num_vars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if self.is_zero:
            return "0"
        bits = []
        for e, c in sorted(self.terms.items()):
            mono = "*".join(
                f"x{i + 1}^{p}" for i, p in enumerate(e) if p
            )
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)


class TruncatedSeries:
    """Power series in q, exact through q^order, LaurentPoly coefficients."""

    __slots__ = ("order", "num_vars", "coeffs")

    def __init__(self, coeffs: Sequence[LaurentPoly], order: int):
        if order < 0:
            raise ValueError(f"order must be nonnegative, got {order}")
        if len(coeffs) != order + 1:
            raise ValueError(f"need {order + 1} coefficients, got {len(coeffs)}")
        num_vars = coeffs[0].num_vars
        for c in coeffs:
            if c.num_vars != num_vars:
                raise ValueError("coefficients must share num_vars")
        self.order = order
        self.num_vars = num_vars
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, order: int, num_vars: int = 0) -> "TruncatedSeries":
        z = LaurentPoly(num_vars)
        return cls([z] * (order + 1), order)

    @classmethod
    def one(cls, order: int, num_vars: int = 0) -> "TruncatedSeries":
        z = LaurentPoly(num_vars)
        first = LaurentPoly.constant(1, num_vars)
        return cls([first] + [z] * order, order)

    @classmethod
    def from_ints(cls, values: Iterable[int], order: int) -> "TruncatedSeries":
        """Univariate series from integer coefficients (padded with zeros)."""
        vals = list(values)
        if len(vals) > order + 1:
            raise ValueError("more coefficients than order allows")
        vals += [0] * (order + 1 - len(vals))
        return cls([LaurentPoly.constant(v) for v in vals], order)

    def coefficient(self, n: int) -> LaurentPoly:
        """Coefficient of q^n; error beyond the truncation order."""
        if not 0 <= n <= self.order:
            raise ValueError(f"q-power {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def coefficient_at(self, n: int, exponents: Sequence[int] = ()) -> int:
        """Exact integer coefficient of x^exponents q^n."""
        poly = self.coefficient(n)
        if len(exponents) != self.num_vars:
            raise ValueError(
                f"expected {self.num_vars} exponents, got {len(exponents)}"
            )
        return poly.get(exponents)

    def truncate(self, order: int) -> "TruncatedSeries":
        """Restrict to a lower order; exactness is preserved."""
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def _require_same_vars(self, other: "TruncatedSeries") -> None:
        if self.num_vars != other.num_vars:
            raise ValueError(
                f"num_vars mismatch: {self.num_vars} vs {other.num_vars}"
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._require_same_vars(other)
        order = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(order + 1)], order
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries([c * other for c in self.coeffs], self.order)
        self._require_same_vars(other)
        order = min(self.order, other.order)
        zero = LaurentPoly(self.num_vars)
        out = [zero] * (order + 1)
        for i in range(order + 1):
            ci = self.coeffs[i]
            if ci.is_zero:
                continue
            for j in range(order - i + 1):
                cj = other.coeffs[j]
                if cj.is_zero:
                    continue
                out[i + j] = out[i + j] + ci * cj
        return TruncatedSeries(out, order)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.order == other.order
            and self.num_vars == other.num_vars
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.order, self.num_vars, self.coeffs))

    def to_json_dict(self) -> dict:
        """Canonical dump: terms sorted by (q, x), coefficients as strings."""
        terms = []
        for n, poly in enumerate(self.coeffs):
            for exps, c in sorted(poly.terms.items()):
                terms.append({"q": n, "x": list(exps), "c": str(c)})
        return {"order": self.order, "num_vars": self.num_vars, "terms": terms}

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order}, num_vars={self.num_vars})"


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Exact coefficient-wise sum; result order = min of input orders."""
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Exact Cauchy product truncated at min of the input orders."""
    return a * b


def coefficient(s: TruncatedSeries, n: int, exponents: Sequence[int] = ()) -> int:
    """Exact coefficient of x^exponents q^n; error if n exceeds the order."""
    return s.coefficient_at(n, exponents)


def euler_product(order: int) -> TruncatedSeries:
    """(q;q)_inf truncated: pentagonal number theorem coefficients.

    The coefficient of q^(j(3j-1)/2) is (-1)^j for every integer j (both
    signs), all other coefficients vanish.
    """
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    vals = [0] * (order + 1)
    vals[0] = 1
    j = 1
    while True:
        g1 = j * (3 * j - 1) // 2
        g2 = j * (3 * j + 1) // 2
        if g1 > order and g2 > order:
            break
        sign = 1 if j % 2 == 0 else -1
        if g1 <= order:
            vals[g1] = sign
        if g2 <= order:
            vals[g2] = sign
        j += 1
    return TruncatedSeries.from_ints(vals, order)


def invert_unit_series(s: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series whose constant coefficient is +-1.

    Standard recurrence b_n = -a_0 * sum_{i=1..n} a_i b_{n-i}; exact because
    the constant term is a unit.
    """
    c0 = s.coeffs[0]
    if not c0.is_constant or c0.constant_value() not in (1, -1):
        raise ValueError("constant coefficient must be +1 or -1")
    a0 = c0.constant_value()
    zero = LaurentPoly(s.num_vars)
    out: list[LaurentPoly] = [LaurentPoly.constant(a0, s.num_vars)]
    for n in range(1, s.order + 1):
        acc = zero
        for i in range(1, n + 1):
            ai = s.coeffs[i]
            if ai.is_zero:
                continue
            acc = acc + ai * out[n - i]
        out.append(acc * (-a0))
    return TruncatedSeries(out, s.order)


@lru_cache(maxsize=None)
def _partition_gf(order: int) -> TruncatedSeries:
    # 1/(q;q)_inf: generates p(n)
    return invert_unit_series(euler_product(order))


def _geometric_power(n: int, power: int, order: int) -> list[int]:
    # 1/(1-q^n)^power as flat coefficients: C(b+power-1, power-1) at q^(nb)
    vals = [0] * (order + 1)
    b = 0
    while n * b <= order:
        vals[n * b] = math.comb(b + power - 1, power - 1)
        b += 1
    return vals


def rank_gf(m: int, order: int) -> TruncatedSeries:
    """Generating function of N(m, n): coefficient of q^n counts partitions
    of n with rank m.

    The alternating sum over n stops at the first n with
    n(3n-1)/2 + |m|n > order. The constant coefficient is pinned to 1 by
    convention (the n = 0 term carries no combinatorial meaning and is
    excluded from oracle comparisons).
    """
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    vals = [0] * (order + 1)
    n = 1
    while True:
        e = n * (3 * n - 1) // 2 + abs(m) * n
        if e > order:
            break
        sign = 1 if n % 2 == 1 else -1
        vals[e] += sign
        if e + n <= order:
            vals[e + n] -= sign
        n += 1
    out = TruncatedSeries.from_ints(vals, order) * _partition_gf(order)
    coeffs = list(out.coeffs)
    coeffs[0] = LaurentPoly.constant(1)
    return TruncatedSeries(coeffs, order)


def _eta_bar_gf(k: int, order: int, *, even: bool) -> TruncatedSeries:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    power = 2 * k if even else 2 * k - 1
    acc = [0] * (order + 1)
    n = 1
    while True:
        tri = n * (3 * n + 1) // 2 if even else n * (3 * n - 1) // 2
        e = tri + k * n
        if e > order:
            break
        sign = 1 if n % 2 == 1 else -1
        for shift, c in enumerate(_geometric_power(n, power, order - e)):
            if c:
                acc[e + shift] += sign * c
        n += 1
    return TruncatedSeries.from_ints(acc, order) * _partition_gf(order)


def eta_bar_odd_gf(k: int, order: int) -> TruncatedSeries:
    """Generating function whose q^n coefficient is the (2k-1)-th
    symmetrized positive rank moment of n."""
    return _eta_bar_gf(k, order, even=False)


def eta_bar_even_gf(k: int, order: int) -> TruncatedSeries:
    """Generating function whose q^n coefficient is the 2k-th symmetrized
    positive rank moment of n."""
    return _eta_bar_gf(k, order, even=True)


def _check_k_bound(k: int) -> None:
    # both multivariate generating functions refuse k > 3: the positive-rank
    # one needs k+1 variables and MAX_SERIES_VARIABLES = 4 is the ceiling
    if k > MAX_SERIES_VARIABLES - 1:
        raise CapExceededError(
            f"k={k} exceeds the multivariate bound {MAX_SERIES_VARIABLES - 1}; "
            f"term counts explode beyond that"
        )


def _lift(s: TruncatedSeries, num_vars: int) -> TruncatedSeries:
    # embed a univariate series into a larger variable set
    out = []
    for poly in s.coeffs:
        out.append(LaurentPoly.constant(poly.constant_value(), num_vars))
    return TruncatedSeries(out, s.order)


def _interleave_kernel(
    var: int, num_vars: int, n: int, order: int, max_x_degree: int
) -> TruncatedSeries:
    """sum_{a in Z} sum_{b >= 0} x_var^a q^(n(|a| + 2b)), truncated.

    Equals 1 / ((1 - x_var q^n)(1 - x_var^(-1) q^n)); the Laurent degree in
    x_var is bounded by order/n automatically and by max_x_degree on top.
    """
    zero = LaurentPoly(num_vars)
    levels: list[dict[tuple[int, ...], int]] = [dict() for _ in range(order + 1)]
    a_cap = min(max_x_degree, order // n)
    for a in range(-a_cap, a_cap + 1):
        base = n * abs(a)
        exps = tuple(a if t == var else 0 for t in range(num_vars))
        e = base
        while e <= order:
            levels[e][exps] = levels[e].get(exps, 0) + 1
            e += 2 * n
    coeffs = []
    for lvl in levels:
        if lvl:
            coeffs.append(LaurentPoly(num_vars, lvl))
        else:
            coeffs.append(zero)
    return TruncatedSeries(coeffs, order)


def marked_zero_rank_gf(k: int, order: int, max_x_degree: int) -> TruncatedSeries:
    """Multivariate generating function of marked-symbol counts with first
    rank zero.

    k auxiliary variables; the coefficient of x_1^(m_2) ... x_k^(m_(k+1)) q^n
    is the number of (k+1)-marked Durfee symbols of n with rank vector
    (0, m_2, ..., m_(k+1)). Monomials with any |exponent| > max_x_degree are
    pruned (not computed); all retained coefficients are exact.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if max_x_degree < 1:
        raise ValueError(f"max_x_degree must be positive, got {max_x_degree}")
    _check_k_bound(k)
    total = TruncatedSeries.zero(order, k)
    n = 1
    while True:
        e0 = n * (3 * n - 1) // 2 + k * n
        if e0 > order:
            break
        sign = 1 if n % 2 == 1 else -1
        vals = [0] * (order + 1)
        vals[e0] = sign
        if e0 + n <= order:
            vals[e0 + n] = -sign
        term = _lift(TruncatedSeries.from_ints(vals, order), k)
        for var in range(k):
            term = term * _interleave_kernel(var, k, n, order, max_x_degree)
        total = total + term
        n += 1
    return total * _lift(_partition_gf(order), k)


def marked_positive_rank_gf(k: int, order: int, max_x_degree: int) -> TruncatedSeries:
    """Multivariate generating function of marked-symbol counts with first
    rank positive.

    k+1 auxiliary variables; the coefficient of
    x_1^(m_1) x_2^(m_2) ... x_(k+1)^(m_(k+1)) q^n is the number of
    (k+1)-marked Durfee symbols of n with rank vector (m_1, ..., m_(k+1)),
    where x_1 only occurs with positive exponents (m_1 >= 1).
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if max_x_degree < 1:
        raise ValueError(f"max_x_degree must be positive, got {max_x_degree}")
    _check_k_bound(k)
    num_vars = k + 1
    total = TruncatedSeries.zero(order, num_vars)
    n = 1
    while True:
        e0 = n * (3 * n + 1) // 2 + k * n
        if e0 > order:
            break
        sign = 1 if n % 2 == 1 else -1
        # x_1 (1 - q^n) / (1 - x_1 q^n) = sum_{a>=1} x_1^a (q^(n(a-1)) - q^(na))
        zero = LaurentPoly(num_vars)
        levels: list[dict[tuple[int, ...], int]] = [dict() for _ in range(order + 1)]
        for a in range(1, max_x_degree + 1):
            lo = n * (a - 1)
            if lo > order:
                break
            exps = tuple(a if t == 0 else 0 for t in range(num_vars))
            levels[lo][exps] = levels[lo].get(exps, 0) + 1
            if lo + n <= order:
                levels[lo + n][exps] = levels[lo + n].get(exps, 0) - 1
        x1_factor = TruncatedSeries(
            [LaurentPoly(num_vars, lvl) if lvl else zero for lvl in levels], order
        )
        vals = [0] * (order + 1)
        vals[e0] = sign
        term = _lift(TruncatedSeries.from_ints(vals, order), num_vars) * x1_factor
        for var in range(1, num_vars):
            term = term * _interleave_kernel(var, num_vars, n, order, max_x_degree)
        total = total + term
        n += 1
    return total * _lift(_partition_gf(order), num_vars)
