"""Tests for the PaWException hierarchy."""

from __future__ import annotations

from paw_entanglement.exceptions import (
    DomainError,
    PaWAbort,
    PaWException,
    PaWInternalError,
    ValidationError,
    VerificationFailed,
)
from paw_entanglement.report import CheckRecord


class TestPaWException:
    def test_is_base_exception(self) -> None:
        exc = PaWException("test")
        assert isinstance(exc, Exception)
        assert str(exc) == "test"


class TestPaWAbort:
    def test_default_exit_code(self) -> None:
        exc = PaWAbort("bad input")
        assert exc.exit_code == 1
        assert exc.detail == "bad input"

    def test_custom_exit_code(self) -> None:
        assert PaWAbort("stop", exit_code=3).exit_code == 3

    def test_is_paw_exception(self) -> None:
        assert issubclass(PaWAbort, PaWException)


class TestValidationError:
    def test_exit_code_1(self) -> None:
        exc = ValidationError()
        assert exc.exit_code == 1
        assert exc.detail == "Invalid input"

    def test_custom_detail(self) -> None:
        assert ValidationError("negative time").detail == "negative time"


class TestDomainError:
    def test_default_detail(self) -> None:
        exc = DomainError()
        assert exc.exit_code == 1
        assert "unreachable" in exc.detail

    def test_is_validation_error(self) -> None:
        assert issubclass(DomainError, ValidationError)


class TestVerificationFailed:
    def test_exit_code_2(self) -> None:
        assert VerificationFailed().exit_code == 2

    def test_carries_failures(self) -> None:
        record = CheckRecord(
            name="x", category="smalg", samples=1, max_error=1.0,
            tolerance=1e-10, outcome="FAIL", inputs="t=1",
        )
        exc = VerificationFailed("1 failed", failures=(record,))
        assert exc.failures == (record,)
        assert isinstance(exc, PaWAbort)


class TestPaWInternalError:
    def test_carries_detail(self) -> None:
        exc = PaWInternalError("jacobi diverged")
        assert exc.detail == "jacobi diverged"
        assert str(exc) == "jacobi diverged"

    def test_not_an_abort(self) -> None:
        assert not issubclass(PaWInternalError, PaWAbort)
