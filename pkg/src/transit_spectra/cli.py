"""Command-line interface for transit-spectra.

Reports go to stdout; diagnostics and count footers go to stderr. Exit codes: 0 success or
pass, 1 verification failure, 2 usage or input error.
"""

from pathlib import Path
from typing import List, Optional

import typer
from pydantic import ValidationError as PydanticValidationError

from transit_spectra import __version__
from transit_spectra.core.constants import EXIT_USAGE, EXIT_VERIFICATION_FAILED
from transit_spectra.core.schemas import RunConfig
from transit_spectra.core.validate import TransitSpectraError

app = typer.Typer(
    help="Distance-spectral irregularity of graphs: measures, bounds and exhaustive checks",
    no_args_is_help=True,
)


def _fail(message: str, code: int = EXIT_USAGE) -> None:
    typer.secho(f"✗ {message}", fg=typer.colors.RED, err=True)
    raise typer.Exit(code)


def _config(config_path: Optional[Path], **overrides) -> RunConfig:
    """RunConfig from an optional YAML file with CLI overrides on top."""
    from transit_spectra.io.config import load_run_config

    tolerances = {}
    for key in ("perron", "tie"):
        value = overrides.pop(key, None)
        if value is not None:
            tolerances[key] = value
    try:
        if config_path is not None:
            return load_run_config(config_path, tolerances=tolerances, **overrides)
        fields = {k: v for k, v in overrides.items() if v is not None}
        if tolerances:
            fields["tolerances"] = tolerances
        return RunConfig(**fields)
    except (PydanticValidationError, FileNotFoundError, ValueError) as e:
        _fail(f"Invalid configuration: {e}")


def _emit(text: str, output: Optional[str]) -> None:
    from transit_spectra.io.files import write_text

    write_text(text, output)


@app.command()
def version():
    """Show transit-spectra version."""
    typer.echo(f"transit-spectra v{__version__}")


@app.command()
def analyze(
    graph6: Optional[str] = typer.Argument(None, help="A graph6 string"),
    input_path: Optional[str] = typer.Option(None, "--input", help="graph6 file, .gz or '-'"),
    scan: bool = typer.Option(False, "--scan", help="Aggregate the input into one report"),
    measure: Optional[str] = typer.Option(None, help="sigma or tau (with --scan)"),
    on_error: Optional[str] = typer.Option(None, "--on-error", help="skip or abort"),
    tol: Optional[float] = typer.Option(None, "--tol", help="Perron residual tolerance"),
    tie_tol: Optional[float] = typer.Option(None, "--tie-tol", help="Tie tolerance"),
    fmt: Optional[str] = typer.Option(None, "--format", help="json, csv or plain"),
    output: Optional[str] = typer.Option(None, "--output", help="Report path"),
    config: Optional[Path] = typer.Option(None, "--config", help="YAML run config"),
):
    """Transmissions, spectral radii, sigma, tau and DVDR witness for each graph."""
    from transit_spectra.core.families import is_dvdr
    from transit_spectra.core.graph import distance_matrix, transmission_profile
    from transit_spectra.core.graph6 import to_graph6
    from transit_spectra.core.schemas import GraphAnalysis
    from transit_spectra.enumeration.stream import read_graph6_stream
    from transit_spectra.io.files import open_graph6_source
    from transit_spectra.io.report import render
    from transit_spectra.runners.verify import scan_stream
    from transit_spectra.spectral.irregularity import irregularity

    cfg = _config(
        config,
        subcommand="analyze",
        measure=measure,
        on_error=on_error,
        perron=tol,
        tie=tie_tol,
        output_format=fmt,
        output_path=output,
        input_path=input_path,
    )
    if graph6 is None and cfg.input_path is None:
        _fail("Give a graph6 argument or --input")

    diagnostics = []
    try:
        if graph6 is not None:
            graphs = list(read_graph6_stream([graph6], "abort"))
        else:
            with open_graph6_source(cfg.input_path) as source:
                graphs = list(read_graph6_stream(source, cfg.on_error, diagnostics))

        for diagnostic in diagnostics:
            typer.secho(
                f"✗ line {diagnostic.line_number}: {diagnostic.message}",
                fg=typer.colors.YELLOW,
                err=True,
            )

        if scan:
            report = scan_stream(graphs, cfg.measure, cfg.tolerances)
            _emit(render(report, cfg.output_format), cfg.output_path)
            if not report.passed:
                raise typer.Exit(EXIT_VERIFICATION_FAILED)
            return

        records = []
        for g in graphs:
            measures = irregularity(g, cfg.tolerances.perron)
            profile = transmission_profile(distance_matrix(g))
            records.append(
                GraphAnalysis(
                    graph6=to_graph6(g),
                    n=g.order,
                    transmissions=list(profile.transmissions),
                    wiener=profile.wiener,
                    gap=profile.gap,
                    dmax=profile.dmax,
                    dmin=profile.dmin,
                    distance_radius=measures.distance_radius,
                    dsl_radius=measures.dsl_radius,
                    sigma=measures.sigma,
                    tau=measures.tau,
                    transmission_regular=profile.gap == 0,
                    dvdr=is_dvdr(g),
                )
            )
    except (TransitSpectraError, FileNotFoundError, UnicodeDecodeError) as e:
        _fail(str(e))

    _emit(render(records, cfg.output_format), cfg.output_path)


@app.command()
def verify(
    n: Optional[int] = typer.Option(None, "--n", help="Graph order"),
    theorem: Optional[int] = typer.Option(None, "--theorem", help="1: connected graphs, 2: trees"),
    measure: Optional[str] = typer.Option(None, help="sigma or tau (theorem 1)"),
    tol: Optional[float] = typer.Option(None, "--tol", help="Perron residual tolerance"),
    tie_tol: Optional[float] = typer.Option(None, "--tie-tol", help="Tie tolerance"),
    jobs: Optional[int] = typer.Option(None, "--jobs", help="Worker processes"),
    fmt: Optional[str] = typer.Option(None, "--format", help="json, csv or plain"),
    output: Optional[str] = typer.Option(None, "--output", help="Report path"),
    config: Optional[Path] = typer.Option(None, "--config", help="YAML run config"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Progress on stderr"),
):
    """Certify the tau bound over connected graphs (theorem 1) or sigma/tau over trees (2)."""
    from transit_spectra.io.report import render, render_reports
    from transit_spectra.runners.verify import verify_theorem1, verify_theorem2

    cfg = _config(
        config,
        subcommand="verify",
        n=n,
        theorem=theorem,
        measure=measure,
        perron=tol,
        tie=tie_tol,
        jobs=jobs,
        output_format=fmt,
        output_path=output,
        verbose=verbose or None,
    )
    if cfg.n is None:
        _fail("verify needs --n (or n in the run config)")

    try:
        if cfg.theorem == 1:
            reports = [verify_theorem1(cfg.n, cfg.measure, cfg.tolerances, cfg.jobs, cfg.verbose)]
            text = render(reports[0], cfg.output_format)
        else:
            reports = list(verify_theorem2(cfg.n, cfg.tolerances, cfg.jobs, cfg.verbose))
            text = render_reports(reports, cfg.output_format)
    except TransitSpectraError as e:
        _fail(str(e))

    _emit(text, cfg.output_path)

    if all(r.passed for r in reports):
        typer.secho(f"✓ Verification passed at n={cfg.n}", fg=typer.colors.GREEN, err=True)
    else:
        for r in reports:
            for failure in r.failures:
                typer.secho(f"✗ {failure}", fg=typer.colors.RED, err=True)
        raise typer.Exit(EXIT_VERIFICATION_FAILED)


@app.command()
def bounds(
    n_min: int = typer.Option(3, "--n-min", help="Smallest order"),
    n_max: int = typer.Option(20, "--n-max", help="Largest order"),
    trends: bool = typer.Option(False, "--trends", help="Monotonicity summary instead"),
    fmt: str = typer.Option("csv", "--format", help="json, csv or plain"),
    output: Optional[str] = typer.Option(None, "--output", help="Output path"),
):
    """Table of gamma_n, eta_n, tau_n, sigma'_n, tau'_n and quadratic residuals."""
    from transit_spectra.core.bounds import bound_values, residuals, sequence_trends
    from transit_spectra.io.report import render

    if fmt not in ("json", "csv", "plain"):
        _fail(f"Unknown format {fmt!r}")
    for value in (n_min, n_max):
        _config(None, subcommand="bounds", n=value)
    if n_min > n_max:
        _fail(f"Empty range {n_min}..{n_max}")

    try:
        if trends:
            _emit(render(sequence_trends(n_max), fmt), output)
            return
        rows = []
        for n in range(n_min, n_max + 1):
            values = bound_values(n)
            r = residuals(values)
            rows.append(
                {
                    **values.model_dump(),
                    "residual_tau_n": r.tau_n,
                    "residual_sigma_tree": r.sigma_tree,
                    "residual_tau_tree": r.tau_tree,
                }
            )
    except TransitSpectraError as e:
        _fail(str(e))

    _emit(render(rows, fmt), output)


def _construct_graphs(family: str, params: List[str]):
    from transit_spectra.core import families
    from transit_spectra.core.graph6 import parse_graph6

    if family == "dvdr-join":
        if len(params) != 1:
            raise typer.BadParameter("dvdr-join takes one graph6 string")
        return [families.dvdr_join(parse_graph6(params[0]))]

    try:
        numbers = [int(p) for p in params]
    except ValueError:
        raise typer.BadParameter(f"{family} takes integer parameters, got {params}")

    if family == "multipartite":
        return [families.complete_multipartite(numbers)]

    single = {
        "star": families.star,
        "complete": families.complete,
        "path": families.path,
        "cycle": families.cycle,
        "wheel": families.wheel,
        "cocktail-apex": families.cocktail_apex,
    }
    if family == "extremal-even":
        if len(numbers) != 1:
            raise typer.BadParameter("extremal-even takes one order")
        return families.extremal_even_family(numbers[0])
    if family not in single:
        raise typer.BadParameter(f"Unknown family {family!r}")
    if len(numbers) != 1:
        raise typer.BadParameter(f"{family} takes one order")
    return [single[family](numbers[0])]


@app.command()
def construct(
    family: str = typer.Argument(
        ...,
        help="star, complete, path, cycle, wheel, cocktail-apex, extremal-even, "
        "multipartite or dvdr-join",
    ),
    params: List[str] = typer.Argument(..., help="Order, part sizes, or a graph6 string"),
):
    """Print one graph6 line per constructed graph."""
    from transit_spectra.core.graph6 import to_graph6

    try:
        graphs = _construct_graphs(family, params)
    except typer.BadParameter as e:
        _fail(str(e))
    except TransitSpectraError as e:
        _fail(str(e))

    for g in graphs:
        typer.echo(to_graph6(g))


@app.command(name="enumerate")
def enumerate_graphs(
    graph_class: str = typer.Argument(..., help="connected or trees"),
    n: int = typer.Argument(..., help="Order"),
    jobs: Optional[int] = typer.Option(None, "--jobs", help="Worker processes"),
    allow_order_10: bool = typer.Option(False, "--allow-order-10", help="Lift the cap to 10"),
):
    """Print one graph6 line per isomorphism class; the count goes to stderr."""
    from transit_spectra.runners.population import population_graph6

    if graph_class not in ("connected", "trees"):
        _fail(f"Unknown graph class {graph_class!r}")
    cfg = _config(
        None,
        subcommand="enumerate",
        graph_class=graph_class,
        n=n,
        jobs=jobs,
        allow_order_10=allow_order_10,
    )

    count = 0
    try:
        for line in population_graph6(cfg.graph_class, cfg.n, cfg.jobs, cfg.allow_order_10):
            typer.echo(line)
            count += 1
    except TransitSpectraError as e:
        _fail(str(e))

    typer.secho(f"✓ {count} graphs", fg=typer.colors.GREEN, err=True)


if __name__ == "__main__":
    app()
