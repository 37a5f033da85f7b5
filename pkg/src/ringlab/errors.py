"""Exception hierarchy shared by all ringlab modules.

The CLI maps each family onto an exit code: input problems (2),
budget/cap exhaustion (3), and internal discrepancies (1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


class RinglabError(Exception):
    """Base class for every error raised by ringlab."""

    exit_code = 2


# -- input / structural errors -------------------------------------------------


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[Any, ...]
    count: int = 1

    def __str__(self) -> str:
        extra = f" ({self.count} instances)" if self.count > 1 else ""
        return f"{self.axiom} fails at {self.witness}{extra}"


class AxiomViolation(RinglabError):
    """Tables do not satisfy the axioms; carries every violated axiom."""

    def __init__(self, violations: list[Violation]):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))

    @property
    def axioms(self) -> list[str]:
        return [v.axiom for v in self.violations]


class DimensionMismatch(RinglabError):
    pass


class NotAnIdeal(RinglabError):
    pass


class NotARetraction(RinglabError):
    pass


class NotCommutative(RinglabError):
    pass


class EmptyRng(RinglabError):
    pass


class HypothesisViolated(RinglabError):
    pass


class InvalidDecomposition(RinglabError):
    def __init__(self, condition: str, witness: tuple[Any, ...]):
        self.condition = condition
        self.witness = witness
        super().__init__(f"condition {condition!r} violated at {witness}")


# -- resource limits -------------------------------------------------------------


class LimitExceeded(RinglabError):
    exit_code = 3


class OrderCapExceeded(LimitExceeded):
    def __init__(self, order: int, cap: int, what: str = "construction"):
        self.order = order
        self.cap = cap
        super().__init__(f"{what} of order {order} exceeds cap {cap}")


class SearchBudgetExceeded(LimitExceeded):
    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"homomorphism search exceeded {budget} nodes")


# -- self-test failures ---------------------------------------------------------


class TheoremDiscrepancy(RinglabError):
    """A theorem path disagreed with its brute-force oracle.

    The theorems are proved, so this always signals an implementation bug.
    """

    exit_code = 1

    def __init__(self, what: str, expected: Any, actual: Any, witness: Any = None):
        self.what = what
        self.expected = expected
        self.actual = actual
        self.witness = witness
        super().__init__(f"{what}: expected {expected!r}, got {actual!r} (witness {witness!r})")
