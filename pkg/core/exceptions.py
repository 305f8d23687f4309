"""
Exceptions module for core package
"""
from typing import Any, Optional


class VolatilityLabError(Exception):
    """
    Base error for the toolkit. Every subclass carries a machine readable
     code and the process exit status used by the command line.
    """
    code: str = "error"
    exit_code: int = 1

    def __init__(self, message: str,
                 details: Optional[dict[str, Any]] = None) -> None:
        super().__init__(message)
        self.message: str = message
        self.details: dict[str, Any] = details or {}

    def to_record(self) -> dict[str, Any]:
        """
        Machine readable error record
        :return: code, message, exit code and details
        :rtype: dict[str, Any]
        """
        return {"code": self.code, "message": self.message,
                "exit_code": self.exit_code, "details": self.details}


class UsageError(VolatilityLabError):
    """
    Bad flags or misuse of an operation
    """
    code = "usage"
    exit_code = 2


class ConfigurationError(UsageError):
    """
    Invalid configuration values, such as a degenerate split
    """
    code = "configuration"


class DataError(VolatilityLabError):
    """
    Problems with the supplied observations
    """
    code = "data"
    exit_code = 3


class InsufficientDataError(DataError):
    """
    Too few observations for the requested operation
    """
    code = "insufficient_data"


class DomainError(DataError):
    """
    Values outside the domain of an operation
    """
    code = "domain"


class DegenerateInputError(DataError):
    """
    Input without variation where variation is required
    """
    code = "degenerate_input"


class AlignmentError(DataError):
    """
    Forecast tracks that do not share dates and realized values
    """
    code = "alignment"


class IngestionError(DataError):
    """
    Unparseable input file
    """
    code = "ingestion"

    def __init__(self, message: str, line: Optional[int] = None,
                 details: Optional[dict[str, Any]] = None) -> None:
        details = dict(details or {})
        if line is not None:
            details["line"] = line
            message = f"line {line}: {message}"
        super().__init__(message, details)
        self.line: Optional[int] = line


class NumericalError(VolatilityLabError):
    """
    Failures of the numerical machinery
    """
    code = "numerical"
    exit_code = 4


class InvalidParameterError(NumericalError):
    """
    Parameters violating the family constraints
    """
    code = "invalid_parameter"


class NonstationaryModelError(NumericalError):
    """
    Model without a finite unconditional variance
    """
    code = "nonstationary_model"


class NumericalOverflowError(NumericalError):
    """
    Exponential overflow inside a log-variance recursion
    """
    code = "numerical_overflow"

    def __init__(self, message: str, index: int) -> None:
        super().__init__(f"{message} at index {index}", {"index": index})
        self.index: int = index


class DivergenceError(NumericalError):
    """
    Non-finite loss while training the network
    """
    code = "divergence"

    def __init__(self, epoch: int) -> None:
        super().__init__(f"training loss is not finite at epoch {epoch}",
                         {"epoch": epoch})
        self.epoch: int = epoch


class SearchFailedError(NumericalError):
    """
    Every candidate of a lag-order search failed to converge
    """
    code = "search_failed"


class ForecastError(NumericalError):
    """
    Rolling forecast without any usable parameter estimate
    """
    code = "forecast"
