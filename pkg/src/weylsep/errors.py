"""Exception types shared across the library."""


class DomainError(ValueError):
    """An argument is outside an operation's domain."""


class NotDivisibleError(ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class NotBiconvexError(DomainError):
    """A set of positive roots is not the inversion set of any element."""


class MixedSystemsError(DomainError):
    """Two group elements live in different root systems."""


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed the configured size budget."""
