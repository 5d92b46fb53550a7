"""Exception types.  Each carries a stable ``code`` used by the CLI and reports."""


class SKTLieError(Exception):
    code = "ERROR"

    def __init__(self, message: str = "", **details):
        super().__init__(message or self.code)
        self.details = details


class DimensionMismatch(SKTLieError, ValueError):
    code = "DIMENSION_MISMATCH"


class JacobiFailure(SKTLieError, ValueError):
    code = "JACOBI_FAILURE"


class NotDerivation(SKTLieError, ValueError):
    code = "NOT_DERIVATION"


class HomomorphismViolation(SKTLieError, ValueError):
    code = "HOMOMORPHISM_VIOLATION"


class UnsupportedCodim(SKTLieError, ValueError):
    code = "UNSUPPORTED_CODIM"


class NotSolvable(SKTLieError, ValueError):
    code = "NOT_SOLVABLE"


class NotComplexStructure(SKTLieError, ValueError):
    code = "J_SQUARED_NOT_MINUS_ID"


class NotMetric(SKTLieError, ValueError):
    code = "NOT_SYMMETRIC_PD"


class NotCompatible(SKTLieError, ValueError):
    code = "NOT_COMPATIBLE"


class NotIntegrable(SKTLieError, ValueError):
    code = "NOT_INTEGRABLE"


class NotInvariant(SKTLieError, ValueError):
    code = "NOT_INVARIANT"


class NotCodim2(SKTLieError, ValueError):
    code = "NOT_CODIM_2"


class ExtensionError(SKTLieError, ValueError):
    """Violated ExtensionSpec invariant; ``code`` names the condition."""

    def __init__(self, code: str, message: str, **details):
        super().__init__(message, **details)
        self.code = code


class DslSyntaxError(SKTLieError, ValueError):
    code = "SYNTAX_ERROR"

    def __init__(self, message: str, position: int | None = None, **details):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message, position=position, **details)
        self.position = position
