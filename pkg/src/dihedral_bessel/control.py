"""Truncation policy and evaluation records."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class SeriesControl:
    """When to stop summing a series.

    A series stops once the first omitted term (or a rigorous bound for it)
    drops below ``max(abs_tol, rel_tol * |partial sum|)``.
    """

    max_terms: int = 500
    abs_tol: float = 1e-300
    rel_tol: float = 1e-16

    def __post_init__(self):
        if self.max_terms < 1:
            raise DomainError(f"max_terms must be >= 1, got {self.max_terms}")
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise DomainError("tolerances must be positive")

    def threshold(self, partial_sum):
        return max(self.abs_tol, self.rel_tol * abs(partial_sum))


# Purely relative in practice; used for special-function evaluations that sit
# inside an outer series governed by the caller's control.
DEFAULT_CONTROL = SeriesControl()


@dataclass(frozen=True)
class EvaluationResult:
    value: float
    est_error: float
    terms_used: int = 0
    nodes_used: int = 0

    def __post_init__(self):
        if not self.est_error >= 0:
            raise DomainError(f"est_error must be >= 0, got {self.est_error}")

    def __float__(self):
        return float(self.value)
