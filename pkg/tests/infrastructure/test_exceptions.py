from pathlib import Path

import pytest

from neolrp.infrastructure.constants import ErrorType, ExitCode
from neolrp.infrastructure.exceptions import (
    BackendError,
    ConfigError,
    GenerationStallError,
    LabelingError,
    NeoLrpError,
    ParseError,
    SizeLimitError,
    StageError,
)


class TestErrorDetail:
    def test_parse_error(self) -> None:
        error = ParseError("expected 2 depot lines", 7, "depot coordinates")

        detail = error.to_error_detail()

        assert detail.type == ErrorType.PARSE.value
        assert detail.title == "Parse Error"
        assert detail.exit_code == ExitCode.INPUT
        assert detail.detail == "expected 2 depot lines (depot coordinates, line 7)"
        assert detail.extra == {"line": 7, "section": "depot coordinates"}

    def test_end_of_input(self) -> None:
        assert "end of input" in ParseError("truncated", None, "customer demands").message

    def test_config_error_carries_field_errors(self) -> None:
        errors = [{"field": "runs", "message": "must be positive"}]

        detail = ConfigError("invalid experiment configuration", errors).to_error_detail()

        assert detail.title == "Configuration Error"
        assert detail.exit_code == ExitCode.USAGE
        assert detail.errors == errors
        assert detail.extra is None

    def test_untyped_error(self) -> None:
        detail = NeoLrpError("boom").to_error_detail()

        assert detail.title == "Error"
        assert detail.exit_code == ExitCode.FAILURE


class TestExitCodes:
    @pytest.mark.parametrize(
        ("error", "code"),
        [
            (ConfigError("bad"), ExitCode.USAGE),
            (ParseError("bad", 1, "customer count"), ExitCode.INPUT),
            (StageError("train", "missing", Path("x")), ExitCode.INPUT),
            (GenerationStallError(3, 10, 900), ExitCode.COMPUTATION),
            (SizeLimitError(12, 10), ExitCode.COMPUTATION),
            (LabelingError("failed", [1, 4]), ExitCode.COMPUTATION),
            (BackendError("pulp:X", "failed"), ExitCode.COMPUTATION),
        ],
    )
    def test_codes(self, error: NeoLrpError, code: ExitCode) -> None:
        assert error.exit_code == code

    def test_stall_details(self) -> None:
        error = GenerationStallError(produced=3, requested=10, rejected=900)

        assert error.details == {"produced": 3, "requested": 10, "rejected": 900}
        assert "3 of 10" in error.message

    def test_stage_error_names_the_stage(self) -> None:
        error = StageError("route", "missing upstream artifact run-0.json", Path("a/b.json"))

        assert error.message.startswith("route: ")
        assert error.details == {"stage": "route", "path": "a/b.json"}
