"""CayleyColor CLI - build, color, verify and certify Cayley graph colorings.

Exit codes: 0 success, 1 invalid input, 2 verification failure or improper coloring,
3 search or oracle budget exhausted.
"""

import inspect
import logging
from collections.abc import Generator
from contextlib import contextmanager
from pathlib import Path
from typing import Annotated, Any

import click
import typer

# Monkeypatch click.Parameter.make_metavar to accept 'ctx' parameter.
# This fixes a compatibility issue where Typer's click integration
# expects make_metavar to accept a 'ctx' argument (newer click behavior)
# but the installed click version doesn't provide it.
_parameter = click.Parameter
if "ctx" not in inspect.signature(_parameter.make_metavar).parameters:
    _original_make_metavar = _parameter.make_metavar

    def _patched_make_metavar(self, *args, **kwargs):  # type: ignore[no-untyped-def]
        return _original_make_metavar(self)  # type: ignore[call-arg]

    _parameter.make_metavar = _patched_make_metavar

# Usage errors share exit code 1 with invalid parameters.
click.exceptions.UsageError.exit_code = 1

from rich.table import Table  # noqa: E402

from . import __version__  # noqa: E402
from .config import settings  # noqa: E402
from .exceptions import (  # noqa: E402
    ColoringFormatError,
    GroupBudgetError,
    InvalidParameterError,
    NoPassingVariantError,
    SearchExhaustedError,
    VerificationError,
)
from .oracle.exact import OracleParameter  # noqa: E402
from .services.coloring_service import (  # noqa: E402
    ColoringService,
    GraphRequest,
    Method,
    VerifyKind,
)
from .services.manifest import RunManifest  # noqa: E402
from .utils.console import console, err_console  # noqa: E402
from .utils.files import dump_json, write_json, write_text  # noqa: E402

logger = logging.getLogger(__name__)

EXIT_INVALID = 1
EXIT_IMPROPER = 2
EXIT_BUDGET = 3

app = typer.Typer(
    name="cayleycolor",
    help="Colorings of Cayley graphs on groups and gyrogroups",
    no_args_is_help=True,
)

FamilyOption = Annotated[str, typer.Option("--family", "-f", help="Graph family")]
NOption = Annotated[int | None, typer.Option("--n", help="Degree or vertex count")]
KOption = Annotated[int | None, typer.Option("--k", help="Power / generator parameter")]
MOption = Annotated[int | None, typer.Option("--m", help="Gyrogroup half order")]
ConnectionOption = Annotated[
    str | None, typer.Option("--connection", help="Comma-separated circulant residues")
]
GensOption = Annotated[
    str | None,
    typer.Option("--gens", help='Generators: "(1,2);(1,2,3)" for sym/alt, "1,7,12" for gyro'),
]
GraphOption = Annotated[Path | None, typer.Option("--graph", help="Graph JSON file")]
JsonOption = Annotated[bool, typer.Option("--json", help="Machine-readable JSON output")]


def version_callback(value: bool) -> None:
    """Show version and exit."""
    if value:
        console.print(f"[bold blue]CayleyColor[/bold blue] v{__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: Annotated[
        bool | None,
        typer.Option("--version", "-v", callback=version_callback, is_eager=True),
    ] = None,
    debug: Annotated[
        bool,
        typer.Option("--debug", help="Show debug-level logs in terminal"),
    ] = False,
    log_file: Annotated[
        Path | None,
        typer.Option("--log-file", help="Also write logs to this file"),
    ] = None,
) -> None:
    """CayleyColor - constructive colorings with exact verification."""
    from .utils.logging import setup_logging

    setup_logging(
        level="DEBUG" if debug else settings.log_level,
        log_file=log_file or settings.log_file,
        console_level="DEBUG" if debug else "WARNING",
    )


@contextmanager
def _exit_codes() -> Generator[None]:
    """Map library exceptions onto the CLI's exit codes."""
    try:
        yield
    except GroupBudgetError as e:
        err_console.print(f"[yellow]Budget exhausted:[/yellow] {e}")
        raise typer.Exit(code=EXIT_BUDGET) from e
    except (InvalidParameterError, ColoringFormatError) as e:
        err_console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(code=EXIT_INVALID) from e
    except VerificationError as e:
        err_console.print(f"[red]Verification failed:[/red] {e}")
        raise typer.Exit(code=EXIT_IMPROPER) from e
    except NoPassingVariantError as e:
        err_console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(code=EXIT_IMPROPER) from e
    except SearchExhaustedError as e:
        err_console.print(f"[yellow]Budget exhausted:[/yellow] {e}")
        raise typer.Exit(code=EXIT_BUDGET) from e


def _residues(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(s) for s in text.replace(" ", "").split(",") if s]
    except ValueError as e:
        raise InvalidParameterError(f"residues must be comma-separated integers: {text!r}") from e


def _request(
    family: str,
    n: int | None,
    k: int | None,
    m: int | None,
    connection: str | None,
    gens: str | None,
    graph: Path | None,
) -> GraphRequest:
    return GraphRequest(
        family=family,  # type: ignore[arg-type]
        n=n,
        k=k,
        m=m,
        connection=_residues(connection),
        gens=gens,
        graph_path=graph,
    )


def _print_json(data: Any) -> None:
    typer.echo(dump_json(data), nl=False)


@app.command()
def build(
    family: FamilyOption,
    n: NOption = None,
    k: KOption = None,
    m: MOption = None,
    connection: ConnectionOption = None,
    gens: GensOption = None,
    graph: GraphOption = None,
    out: Annotated[Path | None, typer.Option("--out", help="Write graph JSON here")] = None,
    as_json: JsonOption = False,
) -> None:
    """Build a graph and write it as JSON (0-based vertex indices)."""
    with _exit_codes():
        req = _request(family, n, k, m, connection, gens, graph)
        service = ColoringService()
        g = service.build_graph(req)
        manifest = RunManifest("build", req.parameters())
        if out is not None:
            path = write_json(out, g.to_json())
            manifest.add_artifact(path, "graph", "built")
        if as_json:
            _print_json({"graph": g.to_json(), "manifest": manifest.finish().to_dict()})
            return
        table = Table(title=f"{family} graph")
        table.add_column("Vertices", justify="right")
        table.add_column("Edges", justify="right")
        table.add_column("Max degree", justify="right")
        table.add_column("Min degree", justify="right")
        table.add_row(str(g.n), str(g.edge_count), str(g.max_degree), str(g.min_degree))
        console.print(table)
        if out is not None:
            console.print(f"Wrote [cyan]{out}[/cyan]")


@app.command()
def color(
    method: Annotated[str, typer.Argument(help="Construction method")],
    n: NOption = None,
    k: KOption = None,
    m: MOption = None,
    gens: GensOption = None,
    seed: Annotated[int | None, typer.Option("--seed", help="Repair seed")] = None,
    out_dir: Annotated[Path | None, typer.Option("--out-dir", help="Artifact directory")] = None,
    as_json: JsonOption = False,
) -> None:
    """Run a construction, verify it, and write artifact, report and manifest."""
    with _exit_codes():
        service = ColoringService(output_dir=out_dir)
        method_name: Method = method  # type: ignore[assignment]
        outcome = service.color(method_name, n=n, k=k, m=m, gens=gens, seed=seed)
        report = outcome.construction.report
        if as_json:
            _print_json(
                {
                    "report": report.to_dict(),
                    "notes": outcome.construction.notes,
                    "manifest": outcome.manifest.to_dict(),
                }
            )
            return
        table = Table(title=f"{method} coloring")
        table.add_column("Vertices", justify="right")
        table.add_column("Max degree", justify="right")
        table.add_column("Colors", justify="right")
        table.add_column("Verdict")
        g = outcome.construction.graph
        table.add_row(str(g.n), str(g.max_degree), str(report.colors_used), report.summary)
        console.print(table)
        console.print(f"Artifact: [cyan]{outcome.artifact}[/cyan]")


@app.command()
def verify(
    kind: Annotated[str, typer.Argument(help="vertex, edge, total or conformable")],
    artifact: Annotated[Path, typer.Argument(help="Coloring JSON or total-matrix CSV")],
    family: FamilyOption = "file",
    n: NOption = None,
    k: KOption = None,
    m: MOption = None,
    connection: ConnectionOption = None,
    gens: GensOption = None,
    graph: GraphOption = None,
) -> None:
    """Verify a coloring artifact against a graph; prints the report as JSON."""
    with _exit_codes():
        if kind not in ("vertex", "edge", "total", "conformable"):
            raise InvalidParameterError(f"unknown verification kind {kind!r}")
        service = ColoringService()
        g = service.build_graph(_request(family, n, k, m, connection, gens, graph))
        verify_kind: VerifyKind = kind  # type: ignore[assignment]
        report = service.verify(verify_kind, g, artifact)
        _print_json(report.to_dict())
        if not report.ok:
            raise typer.Exit(code=EXIT_IMPROPER)


@app.command()
def oracle(
    parameter: Annotated[str, typer.Argument(help="chi, chi-prime, chi-double-prime or alpha")],
    family: FamilyOption,
    n: NOption = None,
    k: KOption = None,
    m: MOption = None,
    connection: ConnectionOption = None,
    gens: GensOption = None,
    graph: GraphOption = None,
    node_budget: Annotated[int | None, typer.Option("--node-budget")] = None,
    time_budget: Annotated[float | None, typer.Option("--time-budget")] = None,
) -> None:
    """Exact chromatic parameter with witness; prints JSON."""
    with _exit_codes():
        if parameter not in ("chi", "chi-prime", "chi-double-prime", "alpha"):
            raise InvalidParameterError(f"unknown oracle parameter {parameter!r}")
        service = ColoringService()
        g = service.build_graph(_request(family, n, k, m, connection, gens, graph))
        param: OracleParameter = parameter  # type: ignore[assignment]
        result = service.oracle(param, g, node_budget=node_budget, time_budget=time_budget)
        _print_json(result.to_dict())
        if not result.exact:
            raise typer.Exit(code=EXIT_BUDGET)


@app.command()
def iso(
    n: Annotated[int, typer.Option("--n", help="Circulant order")],
    s1: Annotated[str, typer.Option("--s1", help="First connection set")],
    s2: Annotated[str, typer.Option("--s2", help="Second connection set")],
) -> None:
    """Search for a unit a with a*S1 = S2 mod n; prints JSON."""
    with _exit_codes():
        _print_json(ColoringService().iso(n, _residues(s1), _residues(s2)))


@app.command()
def golden(as_json: JsonOption = False) -> None:
    """Re-derive the shipped golden total-color tables and diff them."""
    with _exit_codes():
        diffs = ColoringService().golden()
    if as_json:
        _print_json(
            [
                {
                    "name": d.name,
                    "n": d.n,
                    "k": d.k,
                    "identical": d.identical,
                    "first_difference": list(d.first_difference) if d.first_difference else None,
                }
                for d in diffs
            ]
        )
    else:
        table = Table(title="Golden tables")
        table.add_column("Table")
        table.add_column("Instance")
        table.add_column("Result")
        for d in diffs:
            verdict = "[green]identical[/green]" if d.identical else "[red]differs[/red]"
            table.add_row(d.name, f"C_{d.n}^{d.k}", verdict)
        console.print(table)
        for d in diffs:
            if d.first_difference:
                row, want, got = d.first_difference
                console.print(f"{d.name} line {row}: expected {want!r}, got {got!r}")
    if not all(d.identical for d in diffs):
        raise typer.Exit(code=EXIT_IMPROPER)


@app.command("gyro-table")
def gyro_table(
    m: Annotated[int, typer.Option("--m", help="Half order, a power of two >= 4")],
    variant: Annotated[
        int | None, typer.Option("--variant", help="Enumeration index (default: selected)")
    ] = None,
    out: Annotated[Path | None, typer.Option("--out", help="Write the CSV here")] = None,
) -> None:
    """Dump a gyrogroup operation table as CSV."""
    with _exit_codes():
        text, passed = ColoringService().gyro_table_dump(m, variant)
        if out is not None:
            write_text(out, text)
            console.print(f"Wrote [cyan]{out}[/cyan] (axioms {'pass' if passed else 'fail'})")
        else:
            typer.echo(text, nl=False)


@app.command()
def certify() -> None:
    """Run the desk-scale certification suite; exit 0 only if every check passes."""
    from .diagnostics import main as run_certify

    code = run_certify()
    if code:
        raise typer.Exit(code=code)


if __name__ == "__main__":
    app()
