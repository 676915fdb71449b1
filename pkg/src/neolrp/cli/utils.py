from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path

import typer

from neolrp.config import settings
from neolrp.infrastructure.constants import ExitCode
from neolrp.infrastructure.exceptions import ErrorDetail, NeoLrpError
from neolrp.infrastructure.observability import configure_logging, get_logger
from neolrp.modules.pipeline import ExperimentConfig, SolveMode, StageContext, load_experiment

logger = get_logger(__name__)


def setup_logging() -> None:
    configure_logging(json_logs=settings.logging.json_format, log_level=settings.logging.level)


@contextmanager
def handle_errors() -> Iterator[None]:
    """Prints a JSON error detail on stderr and exits with the error's code.

    Anything that is not a NeoLrpError is reported as an internal error with exit code 1.
    """
    try:
        yield
    except typer.Exit:
        raise
    except NeoLrpError as e:
        typer.echo(e.to_error_detail().model_dump_json(exclude_none=True), err=True)
        raise typer.Exit(int(e.exit_code)) from None
    except KeyboardInterrupt:
        typer.echo('{"detail": "interrupted"}', err=True)
        raise typer.Exit(int(ExitCode.FAILURE)) from None
    except Exception as e:
        logger.exception("unexpected_error", error=type(e).__name__)
        detail = ErrorDetail(
            title="Internal Error",
            detail=str(e) or type(e).__name__,
            exit_code=int(ExitCode.FAILURE),
            extra={"exception": type(e).__name__},
        )
        typer.echo(detail.model_dump_json(exclude_none=True), err=True)
        raise typer.Exit(int(ExitCode.FAILURE)) from None


def load_config(config: Path, seed: int | None, out: Path | None) -> ExperimentConfig:
    experiment = load_experiment(config)
    if seed is not None:
        experiment = experiment.with_seed(seed)
    if out is not None:
        experiment = experiment.with_output_dir(out)
    return experiment


def load_context(
    config: Path,
    seed: int | None,
    out: Path | None,
    modes: tuple[SolveMode, ...] | None = None,
) -> StageContext:
    ctx = StageContext.from_config(load_config(config, seed, out), modes)
    ctx.workspace.root.mkdir(parents=True, exist_ok=True)
    ctx.workspace.config_file.write_text(
        ctx.config.model_dump_json(indent=1) + "\n", encoding="utf-8"
    )
    return ctx


def echo_paths(paths: list[Path]) -> None:
    for path in paths:
        typer.echo(str(path))
