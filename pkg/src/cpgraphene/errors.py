"""Exception types shared across the package."""


class CPGrapheneError(Exception):
    """Base class for all package errors."""


class InvalidParameterError(CPGrapheneError, ValueError):
    """A parameter is outside its allowed range."""


class DomainError(CPGrapheneError, ValueError):
    """Arguments lie outside the mathematical domain of an operation."""


class InvalidMaterialError(CPGrapheneError, ValueError):
    """A material description is empty or inconsistent."""


class ParseError(CPGrapheneError, ValueError):
    """A data file or configuration could not be parsed.

    ``line`` is the 1-based line number when known.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class IntegrationError(CPGrapheneError, RuntimeError):
    """Quadrature failed to converge.

    Carries the partial value and the error estimate reached when the
    evaluation budget ran out.
    """

    def __init__(self, message, value=None, error_estimate=None, evaluations=0):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate
        self.evaluations = evaluations


class CrossValidationError(CPGrapheneError, RuntimeError):
    """Independent quadrature rules disagree beyond tolerance."""


class SummationError(CPGrapheneError, RuntimeError):
    """A series (Matsubara sum) failed to converge within its term budget."""


class ConfigError(CPGrapheneError, ValueError):
    """A sweep configuration is invalid."""
