"""Shared exception types."""


class BudgetError(RuntimeError):
    """A configured work budget (candidate products, recursion nodes) was
    exceeded; the computation was abandoned rather than truncated."""
