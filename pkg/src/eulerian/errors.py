"""Exception types shared across the package."""


class BudgetExceeded(RuntimeError):
    """Brute-force enumeration would visit more elements than allowed."""


class DegenerateParameter(ValueError):
    """A closed-form route is undefined at the requested parameter (e.g. t = 1)."""


class UnsupportedCase(ValueError):
    """The requested object is not defined for these arguments."""


class SearchExhausted(RuntimeError):
    """A witness search ran to its cap without finding anything."""
