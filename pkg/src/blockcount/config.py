"""Resource caps and the exception hierarchy shared by every module."""

from __future__ import annotations

import os
from dataclasses import dataclass, field


class DomainError(ValueError):
    """Input outside the domain of an operation (bad rank, alcove violation, ...)."""


class CapExceeded(DomainError):
    """A configured size cap would be exceeded."""


class CrossCheckError(ArithmeticError):
    """Two independent evaluation routes disagree, or a numeric result is not integral."""


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"{name}={raw!r} is not an integer") from None
    if value < 1:
        raise DomainError(f"{name} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class Limits:
    max_alcove: int = field(default_factory=lambda: _env_int("BLOCKCOUNT_MAX_ALCOVE", 20_000))
    max_weyl_order: int = 2_000_000
    max_depth: int = 6
    max_branch_dim: int = 28
    max_theta_genus: int = 6
    max_matrix_rank: int = 4
    integrality_tol: float = 1e-6


def limits() -> Limits:
    # rebuilt on each call so the environment override is honoured at run time
    return Limits()
