class ContractViolation(ValueError):
    """An operation was called outside its precondition."""


class ClassViolation(ContractViolation):
    """The input graph contains a forbidden induced subgraph."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class DefectError(RuntimeError):
    """A fact guaranteed by a theorem failed to hold on a concrete input."""


class BudgetExceeded(RuntimeError):
    """A per-graph time budget ran out before the solver finished."""
