from pathlib import Path

import typer

from neolrp.cli.utils import echo_paths, handle_errors, load_config, load_context, setup_logging
from neolrp.modules.pipeline import SolveMode, run_ablation, run_all_stages, run_stage

app = typer.Typer()

ConfigOption = typer.Option(
    ..., "--config", "-c", exists=True, dir_okay=False, help="Experiment file (TOML or JSON)"
)
SeedOption = typer.Option(None, "--seed", help="Override the experiment seed")
OutOption = typer.Option(None, "--out", help="Override the output directory")


def _stage(name: str, config: Path, seed: int | None, out: Path | None) -> None:
    setup_logging()
    with handle_errors():
        echo_paths(run_stage(name, load_context(config, seed, out)))


@app.command(help="Draw the VRP training (and test) datasets")
def sample(
    config: Path = ConfigOption, seed: int | None = SeedOption, out: Path | None = OutOption
) -> None:
    _stage("sample", config, seed, out)


@app.command(help="Label the sampled datasets with a VRP solver")
def label(
    config: Path = ConfigOption, seed: int | None = SeedOption, out: Path | None = OutOption
) -> None:
    _stage("label", config, seed, out)


@app.command(help="Search hyperparameters and train the cost surrogate")
def train(
    config: Path = ConfigOption, seed: int | None = SeedOption, out: Path | None = OutOption
) -> None:
    _stage("train", config, seed, out)


@app.command(help="Solve the location-allocation MILP for every instance and run")
def solve(
    config: Path = ConfigOption,
    seed: int | None = SeedOption,
    out: Path | None = OutOption,
    mode: SolveMode | None = typer.Option(None, "--mode", help="neo or flp; default from config"),
) -> None:
    setup_logging()
    with handle_errors():
        ctx = load_context(config, seed, out, (mode,) if mode else None)
        echo_paths(run_stage("solve", ctx))


@app.command(help="Route each open depot of every solved run")
def route(
    config: Path = ConfigOption, seed: int | None = SeedOption, out: Path | None = OutOption
) -> None:
    _stage("route", config, seed, out)


@app.command(help="Write the evaluation report")
def evaluate(
    config: Path = ConfigOption, seed: int | None = SeedOption, out: Path | None = OutOption
) -> None:
    _stage("evaluate", config, seed, out)


@app.command(help="Run the configured ablation sweep")
def ablate(
    config: Path = ConfigOption, seed: int | None = SeedOption, out: Path | None = OutOption
) -> None:
    setup_logging()
    with handle_errors():
        echo_paths(run_ablation(load_config(config, seed, out)))


@app.command(help="Run every stage in order")
def run(
    config: Path = ConfigOption, seed: int | None = SeedOption, out: Path | None = OutOption
) -> None:
    setup_logging()
    with handle_errors():
        for paths in run_all_stages(load_context(config, seed, out)).values():
            echo_paths(paths)
