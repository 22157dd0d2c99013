"""Exception types shared across the library.

"undecided" outcomes are values, never exceptions; exceptions are reserved
for contract violations and genuinely unsupported inputs.
"""


class CharquadError(Exception):
    """Base class for library errors."""


class DomainError(CharquadError):
    """Operation applied to an input outside its stated domain."""


class UnsupportedLevel(CharquadError):
    """Coefficients live at a tower level the requested algorithm cannot handle."""


class UnsupportedPlace(CharquadError):
    """Place whose residue field is not a supported tower."""


class BudgetExceeded(CharquadError):
    """An enumeration or search exceeded its configured budget."""

    def __init__(self, message: str, budget: int | None = None, spent: int | None = None):
        super().__init__(message)
        self.budget = budget
        self.spent = spent
