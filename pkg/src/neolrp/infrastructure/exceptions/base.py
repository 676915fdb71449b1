from typing import Any

from pydantic import BaseModel

from neolrp.infrastructure.constants import ERROR_TITLES, ErrorType, ExitCode


class ErrorDetail(BaseModel):
    type: str = "about:blank"
    title: str
    detail: str
    exit_code: int
    errors: list[dict[str, Any]] | None = None
    extra: dict[str, Any] | None = None


class NeoLrpError(Exception):
    def __init__(
        self,
        message: str,
        error_type: ErrorType | str = "about:blank",
        exit_code: int = ExitCode.FAILURE,
        details: dict[str, Any] | None = None,
        errors: list[dict[str, Any]] | None = None,
    ) -> None:
        self.message = message
        self.error_type = error_type
        self.exit_code = exit_code
        self.details = details or {}
        self.errors = errors
        super().__init__(message)

    def to_error_detail(self) -> ErrorDetail:
        return ErrorDetail(
            type=str(self.error_type),
            title=self._get_title(),
            detail=self.message,
            exit_code=int(self.exit_code),
            errors=self.errors,
            extra=self.details if self.details else None,
        )

    def _get_title(self) -> str:
        if isinstance(self.error_type, ErrorType):
            return ERROR_TITLES.get(self.error_type, "Error")
        return "Error"
