"""Exception types shared across the toolkit."""

from __future__ import annotations


class ParseError(ValueError):
    """Malformed hypergraph text or config file; carries the offending line."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class HypothesisViolation(ValueError):
    """Input fails the stated hypothesis of a conditional check.

    Distinguishes "the claim does not apply here" from "the claim was refuted".
    """


class BudgetExceeded(RuntimeError):
    """A bounded search hit its limits before finishing.

    The result is inconclusive, never "none found".  `stats` records how far
    the search got.
    """

    def __init__(self, message: str, stats: dict | None = None):
        super().__init__(message)
        self.stats = dict(stats or {})
