class ValidationError(ValueError):
    """Raised when an input violates a domain constraint."""


class CircuitBudgetError(ValidationError):
    """Raised when a circuit does not fit the statevector qubit budget."""
