from typing import Any


class DlaError(Exception):
    def __init__(
        self,
        message: str,
        *,
        code: str = "DLA_ERROR",
        context: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(message)
        self.message = message
        self.code = code
        self.context = context or {}


class ParameterError(DlaError):
    def __init__(self, message: str, *, context: dict[str, Any] | None = None) -> None:
        super().__init__(message, code="PARAMETER_ERROR", context=context)


class UnsupportedSizeError(DlaError):
    def __init__(self, message: str, *, context: dict[str, Any] | None = None) -> None:
        super().__init__(message, code="UNSUPPORTED_SIZE", context=context)


class PreconditionError(DlaError):
    def __init__(self, message: str, *, context: dict[str, Any] | None = None) -> None:
        super().__init__(message, code="PRECONDITION_FAILED", context=context)


class HypothesisViolation(DlaError):
    def __init__(self, condition: str, reason: str, *, context: dict[str, Any] | None = None) -> None:
        super().__init__(f"{condition}: {reason}", code="HYPOTHESIS_VIOLATION", context=context)
        self.condition = condition
        self.reason = reason


class NotASubdivisionError(DlaError):
    def __init__(self, property: str, reason: str, *, context: dict[str, Any] | None = None) -> None:
        super().__init__(f"{property}: {reason}", code="NOT_A_SUBDIVISION", context=context)
        self.property = property
        self.reason = reason


class CertificateError(DlaError):
    def __init__(self, message: str, *, index: int | None = None, context: dict[str, Any] | None = None) -> None:
        super().__init__(message, code="CERTIFICATE_INVALID", context=context)
        self.index = index


class DimensionMismatchError(DlaError):
    def __init__(self, left: int, right: int) -> None:
        super().__init__(
            f"qubit count mismatch: {left} != {right}",
            code="DIMENSION_MISMATCH",
            context={"left": left, "right": right},
        )


class ParseError(DlaError):
    def __init__(self, message: str, *, line: int, context: dict[str, Any] | None = None) -> None:
        super().__init__(f"line {line}: {message}", code="PARSE_ERROR", context=context)
        self.line = line


class ClosureOverflow(DlaError):
    def __init__(self, partial_dimension: int, maxdim: int) -> None:
        super().__init__(
            f"closure exceeded maxdim={maxdim}",
            code="CLOSURE_OVERFLOW",
            context={"partial_dimension": partial_dimension, "maxdim": maxdim},
        )
        self.partial_dimension = partial_dimension
        self.maxdim = maxdim
