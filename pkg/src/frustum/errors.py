"""Errors and warnings shared across the package."""

from __future__ import annotations


class FrustumError(Exception):
    """Base class for errors raised by this package."""


class SequenceRangeError(FrustumError):
    """A sequence was evaluated outside its valid range."""


class InvalidParamsError(FrustumError):
    """Model parameters failed validation.

    Carries the full list of violations, not just the first one.
    """

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("invalid model parameters: " + "; ".join(self.violations))


class BudgetExceededError(FrustumError):
    """A growth step would exceed the configured vertex budget."""

    def __init__(self, step: int, projected_vertices: int, budget: int):
        self.step = step
        self.projected_vertices = projected_vertices
        self.budget = budget
        super().__init__(
            f"step {step} would grow the graph to {projected_vertices} vertices, "
            f"over the budget of {budget}"
        )


class DisconnectedGraphError(FrustumError):
    """A distance metric was requested on a disconnected graph."""


class IsolatedVertexError(FrustumError):
    """Normalized Laplacian is undefined when a vertex has degree zero."""


class EigensolveError(FrustumError):
    """The symmetric eigensolve did not meet the residual tolerance."""

    def __init__(self, residual: float, tolerance: float):
        self.residual = residual
        self.tolerance = tolerance
        super().__init__(
            f"eigensolve residual {residual:.3e} exceeds tolerance {tolerance:.3e}"
        )


class StalledStepError(FrustumError):
    """A per-step ratio was requested for a step that created no vertices."""


class GrowthStallWarning(UserWarning):
    """A step found no clique of the requested order; the graph did not grow."""
