"""Tolerance/budget knobs for series summation and quadrature."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SeriesControl:
    """Stopping rule for infinite-series evaluation.

    ``rel_tol`` is relative to the accumulated sum; ``max_terms`` caps the
    number of terms.  Hitting the cap before the tolerance is an explicit
    :class:`~yulesimon.errors.SeriesConvergenceError`, never a silent
    truncation.
    """

    rel_tol: float = 1e-12
    max_terms: int = 10_000_000

    def __post_init__(self):
        if not self.rel_tol > 0.0:
            raise ValueError(f"rel_tol must be > 0, got {self.rel_tol}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms}")


@dataclass(frozen=True)
class QuadratureControl:
    """Absolute-tolerance budget for adaptive quadrature on (0, 1)."""

    abs_tol: float = 1e-9
    max_subdivisions: int = 200

    def __post_init__(self):
        if not self.abs_tol > 0.0:
            raise ValueError(f"abs_tol must be > 0, got {self.abs_tol}")
        if self.max_subdivisions < 1:
            raise ValueError(
                f"max_subdivisions must be >= 1, got {self.max_subdivisions}"
            )
