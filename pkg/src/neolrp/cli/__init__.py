import typer

from neolrp.cli.commands import instance, pipeline

app = typer.Typer(
    name="neolrp",
    help="Neural-embedded location-routing toolkit",
    no_args_is_help=True,
)

app.add_typer(pipeline.app)
app.add_typer(instance.app, name="instance")


@app.command()
def version() -> None:
    from neolrp.config import settings

    typer.echo(f"{settings.name} v{settings.version}")


@app.command("settings")
def show_settings() -> None:
    """Print the resolved settings as JSON."""
    from neolrp.config import get_settings

    typer.echo(get_settings().model_dump_json(indent=2))


def main() -> None:
    app()


if __name__ == "__main__":
    main()
