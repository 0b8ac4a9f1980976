class InconsistencyError(ArithmeticError):
    """An exact identity that must hold (integrality, divisibility) failed."""


class UnsupportedModulus(ValueError):
    """No closed formula is available for the requested q."""


class GuardError(ValueError):
    """Input exceeds the size guard of a brute-force routine."""
