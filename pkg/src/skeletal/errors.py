"""Exception types shared across the package."""


class DomainError(ValueError):
    """An operation was called outside its precondition."""


class CapacityError(RuntimeError):
    """A brute-force enumeration would exceed its configured budget."""


class ParseError(ValueError):
    """Malformed hypergraph text or JSON input."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ContractError(AssertionError):
    """An internal invariant of the improvement loop did not hold."""
