"""Exception types and the internal-check helper shared by the solvers.

The solvers distinguish two failure modes.  A ``HypothesisViolation`` means
the *input* does not meet the theorem-style preconditions of a solver and is
reported to the caller.  An ``InternalAssertionError`` means a runtime check
derived from the correctness argument failed; on validated input that is a
bug in this library, never an expected outcome, so it aborts loudly with
diagnostics instead of being retried or swallowed.
"""

from __future__ import annotations


class HypothesisViolation(Exception):
    """The input fails a precondition of a solver; carries the report."""

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class InternalAssertionError(Exception):
    """A proof-derived runtime check failed: signals a solver bug."""


class BudgetExceeded(Exception):
    """An exhaustive search would exceed the configured budget."""


class GenerationFailure(Exception):
    """A random-instance generator exhausted its retry budget."""


_checks_performed = 0


def ensure(condition, message: str, **context):
    """Raise InternalAssertionError with diagnostics unless condition holds.

    Every call is counted so test harnesses can confirm the runtime checks
    actually executed.
    """
    global _checks_performed
    _checks_performed += 1
    if not condition:
        detail = ""
        if context:
            detail = " [" + ", ".join(f"{k}={v!r}" for k, v in context.items()) + "]"
        raise InternalAssertionError(message + detail)


def checks_performed() -> int:
    """Total internal checks evaluated since import (monotone counter)."""
    return _checks_performed
