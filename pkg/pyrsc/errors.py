"""
Exception hierarchy for pyrsc.
"""

from typing import Optional


class PyrscError(Exception):
    """Base class for all pyrsc errors"""

    pass


class ComplexInputError(PyrscError, ValueError):
    """Raised when a simplex or complex argument is invalid"""

    pass


class ComplexParseError(ComplexInputError):
    """Raised when a complex file cannot be parsed"""

    def __init__(self, reason: str, line_number: int, path: Optional[str] = None):
        self.reason = reason
        self.line_number = line_number
        self.path = path or "<string>"
        super().__init__(f"{self.path}:{line_number}: {reason}")


class SamplingResourceError(PyrscError):
    """Raised when a sampler would need more faces than the configured bound"""

    def __init__(self, message: str, bound: int):
        self.bound = bound
        super().__init__(message)


class ParamError(PyrscError, ValueError):
    """Raised for invalid model parameters"""

    pass


class BoundaryCaseError(ParamError):
    """Raised when parameters sit on a boundary excluded by the threshold theorems"""

    pass


class CochainInputError(PyrscError, ValueError):
    """Raised for invalid cochain arguments (field, ambient complex, degree)"""

    pass


class ExperimentConfigError(PyrscError, ValueError):
    """Raised when an experiment configuration is malformed"""

    pass
