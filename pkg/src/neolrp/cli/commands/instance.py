from pathlib import Path

import typer

from neolrp.cli.utils import handle_errors, setup_logging
from neolrp.infrastructure.exceptions import MetricError
from neolrp.modules.instances import load_instance
from neolrp.modules.metrics import bks_for

app = typer.Typer(help="Benchmark instance commands")


@app.command("show")
def show(path: Path = typer.Argument(..., exists=True, dir_okay=False)) -> None:
    """Parse a Prodhon instance file and print a summary."""
    setup_logging()
    with handle_errors():
        inst = load_instance(path)
        total_demand = sum(c.demand for c in inst.customers)
        total_capacity = sum(d.capacity for d in inst.depots)
        try:
            bks: str = f"{bks_for(inst.name):,.0f}"
        except MetricError:
            bks = "unknown"

        typer.echo(f"\nInstance {inst.name}")
        typer.echo("-" * 40)
        typer.echo(f"  customers:        {inst.n_customers}")
        typer.echo(f"  depots:           {inst.n_depots}")
        typer.echo(f"  vehicle capacity: {inst.vehicle_capacity}")
        typer.echo(f"  vehicle cost:     {inst.vehicle_fixed_cost:g}")
        typer.echo(f"  total demand:     {total_demand} (depot capacity {total_capacity})")
        typer.echo(f"  cost rounding:    {inst.rounding_mode.value}")
        typer.echo(f"  BKS:              {bks}")
