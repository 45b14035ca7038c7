"""
SteinCert Error Types
"""


class SteinCertError(Exception):
    """Base class for every error raised by the package"""


class DomainError(SteinCertError, ValueError):
    """Input outside the domain of an operation"""


class NumericError(SteinCertError, RuntimeError):
    """Root finding, scanning or precision failure"""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})


class VerificationError(SteinCertError):
    """A numerically checked claim did not hold"""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class StateError(SteinCertError):
    """Operation called on an object in the wrong state"""
