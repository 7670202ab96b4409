"""Evaluation result container used by the series engine and quadrature."""

from __future__ import annotations

import enum
from dataclasses import dataclass


class Status(enum.Enum):
    CONVERGED = "CONVERGED"
    MAX_TERMS = "MAX_TERMS"
    DIVERGENT_INPUT = "DIVERGENT_INPUT"


@dataclass(frozen=True)
class EvalResult:
    """Value plus a rigorous error bound under the evaluator's stated tail model.

    terms_used counts coefficient evaluations for series, integrand panels for
    quadrature.  status is CONVERGED only when error_bound met the requested
    tolerance.
    """

    value: float
    error_bound: float
    terms_used: int
    status: Status

    def converged(self) -> bool:
        return self.status is Status.CONVERGED
