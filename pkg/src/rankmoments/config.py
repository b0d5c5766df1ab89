"""Desk-scale caps and the refusal error they raise.

Every potentially explosive computation (rank distributions, marked-symbol
enumeration, multivariate series) is guarded by a hard cap. Exceeding a cap
is a *refusal*, reported as :class:`CapExceededError`, never a silent
truncation. The environment variable ``RANKMOMENTS_MAX_N`` overrides the
n-caps for a session.
"""

from __future__ import annotations

import os

ENV_MAX_N = "RANKMOMENTS_MAX_N"

DEFAULT_MAX_RANK_N = 60
DEFAULT_MAX_DURFEE_N = 25
DEFAULT_MAX_MARKS = 3

# Multivariate series carry at most 4 auxiliary variables (k <= 3 in both
# marked generating functions); term counts explode beyond that.
MAX_SERIES_VARIABLES = 4


class CapExceededError(RuntimeError):
    """A request exceeded a configured desk-scale cap and was refused."""


def _env_cap() -> int | None:
    raw = os.environ.get(ENV_MAX_N)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_MAX_N} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{ENV_MAX_N} must be positive, got {value}")
    return value


def rank_n_cap() -> int:
    """Largest n accepted by partition enumeration / rank distributions."""
    return _env_cap() or DEFAULT_MAX_RANK_N


def durfee_n_cap() -> int:
    """Largest n accepted by full marked-Durfee-symbol enumeration."""
    return _env_cap() or DEFAULT_MAX_DURFEE_N
