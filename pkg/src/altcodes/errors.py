"""Exceptions shared across the package."""


class BudgetExceeded(RuntimeError):
    """A search ran out of candidates or wall-clock time before deciding."""
