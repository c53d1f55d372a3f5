"""Exception types shared across the package."""


class SurfclassError(Exception):
    """Base class for all package errors."""


class TapeSyntaxError(SurfclassError):
    """Input text does not match the tape grammar at the token level."""


class TapeRangeError(SurfclassError):
    """A triangle index on the tape is 0, exceeds n, or has leading zeros."""


class IndexOutOfRange(SurfclassError):
    """A (triangle, column) address lies outside the table."""


class BudgetExceeded(SurfclassError):
    """A charge would push the workspace past its bit budget."""

    def __init__(self, needed, budget):
        super().__init__(f"work memory budget exceeded: need {needed} bits, budget {budget}")
        self.needed = needed
        self.budget = budget


class UnknownVertex(SurfclassError):
    """A connectivity query named a vertex that is not in the graph."""


class NotConnected(SurfclassError):
    """An operation that requires a connected surface got a disconnected one."""


class ParityError(SurfclassError):
    """3n + x came out odd; the table cannot be a validated surface."""


class ComponentOutOfRange(SurfclassError):
    """Component index outside 1..c."""


class InvalidSurface(SurfclassError):
    """A gluing table failed the surface conditions."""

    def __init__(self, message, violations=(), which=None):
        super().__init__(message)
        self.violations = list(violations)
        self.which = which


class InvalidTriple(SurfclassError):
    """An (o, chi, b) triple that no connected surface realises."""


class UnsupportedSpec(SurfclassError):
    """A family spec the generator cannot build."""
