"""PaWException hierarchy for validation, domain and verification failures."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from paw_entanglement.report import CheckRecord


class PaWException(Exception):
    """Base for all library exceptions."""


class PaWAbort(PaWException):
    """Controlled abort with a process exit code and detail."""

    def __init__(self, detail: str, *, exit_code: int = 1) -> None:
        super().__init__(detail)
        self.exit_code = exit_code
        self.detail = detail


class ValidationError(PaWAbort):
    """Input outside the documented domain of an operation (exit 1)."""

    def __init__(self, detail: str = "Invalid input") -> None:
        super().__init__(detail, exit_code=1)


class DomainError(ValidationError):
    """Valid input whose requested target cannot be reached (exit 1)."""

    def __init__(
        self, detail: str = "target distance unreachable for this entanglement"
    ) -> None:
        super().__init__(detail)


class VerificationFailed(PaWAbort):
    """One or more oracle checks exceeded their tolerance (exit 2)."""

    def __init__(
        self,
        detail: str = "Verification failed",
        *,
        failures: tuple[CheckRecord, ...] = (),
    ) -> None:
        super().__init__(detail, exit_code=2)
        self.failures = failures


class PaWInternalError(PaWException):
    """Numerical failure that valid inputs cannot trigger."""

    def __init__(self, detail: str) -> None:
        super().__init__(detail)
        self.detail = detail
