"""Main CLI entry point for Stable Sections."""

import functools
from collections.abc import Callable
from pathlib import Path
from typing import Any, TypeVar

import click
from rich.console import Console
from rich.markup import escape

from stable_sections import __version__
from stable_sections.config import get_settings
from stable_sections.errors import InvalidInputError, ModuleParseError

# Results go to stdout through click.echo; everything else goes here.
console = Console(stderr=True)

EXIT_INVALID = 2
EXIT_PARSE = 3

F = TypeVar("F", bound=Callable[..., Any])


def _fail(message: str, code: int) -> None:
    console.print(f"[red]Error: {escape(message)}[/red]")
    raise SystemExit(code)


def _handle_errors(func: F) -> F:
    """Map domain errors onto exit codes."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except ModuleParseError as e:
            _fail(str(e), EXIT_PARSE)
        except InvalidInputError as e:
            _fail(str(e), EXIT_INVALID)

    return wrapper  # type: ignore[return-value]


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        click.echo(text, nl=False)
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text, encoding="utf-8")
    console.print(f"Wrote [green]{output}[/green]")


@click.group()
@click.version_option(version=__version__, prog_name="stable-sections")
@click.option("--verbose", is_flag=True, help="Print stage diagnostics to stderr")
def main(verbose: bool) -> None:
    """Stable Sections - homological stability of non-singular sections.

    Stability ranges from jet ampleness, stable rational cohomology,
    characteristic classes of jet bundles, Thom modules over the Steenrod
    algebra and Adams E2 charts.
    """
    if verbose:
        get_settings().verbose = True


@main.command("range")
@click.option("--n", "n", type=int, required=True, help="Complex dimension of X")
@click.option("--r", "r", type=int, default=1, show_default=True, help="Jet order")
@click.option("--d", "d", type=int, help="Twist of O(d); sets the jet ampleness to d")
@click.option("--amp", type=int, help="Jet ampleness level of E")
@click.option("--rk", type=int, help="Complex rank of J^r E (default: C(n+r, r))")
@click.option("--codim", type=int, help="Real codimension of the Taylor condition")
@click.option("--zero-section", is_flag=True, help="Use the zero section (codim = 2 rk)")
@_handle_errors
def range_command(
    n: int,
    r: int,
    d: int | None,
    amp: int | None,
    rk: int | None,
    codim: int | None,
    zero_section: bool,
) -> None:
    """Homological stability range of the section space."""
    from stable_sections.models.ranges import RangeInput
    from stable_sections.stablerange.bounds import jet_rank, stability_bound

    level = amp if amp is not None else d
    if level is None:
        _fail("Give --d or --amp", EXIT_INVALID)
        return
    rank_value = rk if rk is not None else jet_rank(n, r)
    if zero_section:
        codim = 2 * rank_value
    if codim is None:
        _fail("Give --codim or --zero-section", EXIT_INVALID)
        return

    report = stability_bound(RangeInput(n=n, r=r, amp=level, rk=rank_value, codim=codim))

    click.echo(f"N = {report.big_n}, e = {report.e}")
    click.echo(f"main bound: * < {report.bound_main}")
    click.echo(f"introductory bound: * < {report.bound_intro}")
    if report.bound_line_bundle is not None:
        click.echo(f"line-bundle bound: * < {report.bound_line_bundle}")
    if report.discrepancy:
        click.echo("note: integer ranges differ by one degree; the main bound is reported")
    click.echo(report.describe())


@main.command()
@click.option("--n", "n", type=int, required=True, help="Complex dimension of CP^n")
@click.option("--d", "d", type=int, required=True, help="Twist of O(d)")
@_handle_errors
def sw(n: int, d: int) -> None:
    """Total Stiefel-Whitney class of J^1 O(d) - T CP^n."""
    from stable_sections.algebra.charclasses import sw_virtual

    click.echo(str(sw_virtual(n, d)))


@main.command()
@click.option("--n", "n", type=int, required=True, help="Complex dimension of CP^n")
@click.option("--d", "d", type=int, required=True, help="Twist of O(d)")
@_handle_errors
def chern(n: int, d: int) -> None:
    """Total Chern class of J^1 O(d) on CP^n."""
    from stable_sections.algebra.charclasses import chern_jet1_line, cp1_sphere_bundle_trivial

    click.echo(str(chern_jet1_line(n, d)))
    if n == 1 and cp1_sphere_bundle_trivial(d):
        click.echo("Γ ≃ map(S², S³)")


@main.command()
@click.option("--n", "n", type=int, required=True, help="Complex dimension of CP^n")
@click.option("--d", "d", type=int, required=True, help="Twist of O(d)")
@click.option("--thom-degree", type=int, default=2, show_default=True, help="Thom class degree")
@click.option("-o", "--output", type=click.Path(path_type=Path), help="Write the module here")
@_handle_errors
def thom(n: int, d: int, thom_degree: int, output: Path | None) -> None:
    """Thom module of J^1 O(d) - T CP^n in the interchange format."""
    from stable_sections.algebra.charclasses import sw_virtual
    from stable_sections.thom.interchange import render_module
    from stable_sections.thom.module import build_thom_module

    w = sw_virtual(n, d)
    _emit(render_module(build_thom_module(w.ring, w, thom_degree)), output)


@main.command()
@click.argument("module_file", type=click.Path(path_type=Path), required=False)
@click.option("--sphere", is_flag=True, help="Resolve F2 in degree 0 instead of a file")
@click.option("--max-s", type=int, help="Homological degree bound")
@click.option("--max-t", type=int, help="Internal degree bound")
@click.option(
    "--format", "fmt", type=click.Choice(["ascii", "svg", "table"]), help="Chart format"
)
@click.option("-o", "--output", type=click.Path(path_type=Path), help="Write the chart here")
@_handle_errors
def ext(
    module_file: Path | None,
    sphere: bool,
    max_s: int | None,
    max_t: int | None,
    fmt: str | None,
    output: Path | None,
) -> None:
    """Adams E2 chart of a module given in the interchange format."""
    from stable_sections.ext.render import render_chart
    from stable_sections.models.pipeline import ComputationContext
    from stable_sections.pipeline import create_ext_pipeline
    from stable_sections.thom.interchange import read_module
    from stable_sections.thom.module import sphere_module, verify_module

    settings = get_settings()
    if sphere == (module_file is not None):
        _fail("Give exactly one of MODULE_FILE or --sphere", EXIT_INVALID)
        return
    module = sphere_module() if module_file is None else read_module(module_file)

    window_s = settings.ext_max_s if max_s is None else max_s
    window_t = settings.ext_max_t if max_t is None else max_t
    if window_t - module.d_min > settings.steenrod_degree_cap:
        _fail(
            f"Window t <= {window_t} exceeds the degree cap {settings.steenrod_degree_cap}",
            EXIT_INVALID,
        )
    report = verify_module(module)
    if not report.ok:
        _fail(
            "Module breaks Adem relations: " + ", ".join(str(v) for v in report.violations),
            EXIT_INVALID,
        )

    context = ComputationContext(module=module, max_s=window_s, max_t=window_t)
    result = create_ext_pipeline(settings).run(context)
    if not result.success or context.chart is None:
        _fail("; ".join(result.errors), EXIT_INVALID)
        return

    _emit(render_chart(context.chart, fmt or settings.chart_format), output)


@main.command("stable-betti")
@click.option("--cpn", type=int, help="Use the Betti numbers of CP^n")
@click.option("--curve-genus", type=int, help="Use the Betti numbers of a genus-g curve")
@click.option("--betti", type=str, help="Comma-separated Betti numbers b0,b1,...")
@click.option("--max", "max_deg", type=int, default=10, show_default=True, help="Top degree")
@click.option("--by-degree", is_flag=True, help="Print 'deg: dim' lines")
@_handle_errors
def stable_betti(
    cpn: int | None,
    curve_genus: int | None,
    betti: str | None,
    max_deg: int,
    by_degree: bool,
) -> None:
    """Stable rational Betti numbers of the section space."""
    from stable_sections.stablerange.series import curve_betti, projective_betti, stable_series

    given = [v is not None for v in (cpn, curve_genus, betti)]
    if sum(given) != 1:
        _fail("Give exactly one of --cpn, --curve-genus, --betti", EXIT_INVALID)
        return
    if cpn is not None:
        numbers = projective_betti(cpn)
    elif curve_genus is not None:
        numbers = curve_betti(curve_genus)
    else:
        try:
            numbers = [int(part) for part in (betti or "").split(",")]
        except ValueError:
            _fail(f"Cannot read Betti numbers from {betti!r}", EXIT_INVALID)
            return

    series = stable_series(numbers, max_deg)
    if get_settings().verbose:
        factors = " x ".join(g.eilenberg_maclane() for g in series.generators)
        console.print(f"rational homotopy type: {factors}")
    if by_degree:
        click.echo("\n".join(series.lines()))
    else:
        click.echo(" ".join(str(c) for c in series.coefficients))


@main.command("e1-zones")
@click.option("--N", "big_n_value", type=int, help="Stability index N directly")
@click.option("--e", "e", type=int, default=2, show_default=True, help="Excess codimension")
@click.option("--rk", type=int, help="Complex rank of J^r E")
@click.option("--n", "n", type=int, help="Complex dimension of X (with --amp)")
@click.option("--r", "r", type=int, default=1, show_default=True, help="Jet order")
@click.option("--amp", type=int, help="Jet ampleness level of E")
@click.option("--tmax", type=int, default=8, show_default=True, help="Top row")
@click.option("--format", "fmt", type=click.Choice(["ascii", "svg"]), default="ascii")
@_handle_errors
def e1_zones(
    big_n_value: int | None,
    e: int,
    rk: int | None,
    n: int | None,
    r: int,
    amp: int | None,
    tmax: int,
    fmt: str,
) -> None:
    """Support and vanishing zones of the first page of the spectral sequence."""
    from stable_sections.models.ranges import RangeInput
    from stable_sections.stablerange.bounds import jet_rank
    from stable_sections.stablerange.zones import render_e1_zones, zone_input

    if big_n_value is not None:
        inp = zone_input(big_n_value, e, rk if rk is not None else 2)
    elif n is not None and amp is not None:
        rank_value = rk if rk is not None else jet_rank(n, r)
        inp = RangeInput(n=n, r=r, amp=amp, rk=rank_value, codim=e + 2 * n)
    else:
        _fail("Give --N, or --n together with --amp", EXIT_INVALID)
        return

    click.echo(
        render_e1_zones(inp, tmax, fmt=fmt, cell_size=get_settings().svg_cell_size), nl=False
    )


@main.command("repro-h2")
@click.option("--d", "d", type=int, required=True, help="Twist of O(d) on CP^2, d >= 6")
@_handle_errors
def repro_h2(d: int) -> None:
    """H_2 of non-singular sections of O(d) on CP^2 with Z/2 coefficients."""
    from stable_sections.ext.render import render_chart
    from stable_sections.models.pipeline import ComputationContext
    from stable_sections.pipeline import create_repro_pipeline

    if d < 6:
        _fail(f"The computation assumes d >= 6, got d = {d}", EXIT_INVALID)
        return

    settings = get_settings()
    # one extra stage so that h0 is known on the top reported row
    context = ComputationContext(
        n=2,
        d=d,
        thom_degree=2,
        max_s=settings.ext_max_s + 1,
        max_t=settings.ext_max_t,
        report_max_s=settings.ext_max_s,
        stem=3,
    )
    result = create_repro_pipeline(settings).run(context)
    if not result.success:
        _fail("; ".join(result.errors), EXIT_INVALID)
        return

    console.print(
        f"stem {context.stem} E2 total over s <= {context.report_max_s}: {context.stem_total}"
    )
    if context.verdict == "inconclusive" and context.chart is not None:
        click.echo(render_chart(context.chart, "ascii"), nl=False)
        for possible in context.possible_differentials:
            click.echo(f"possible {possible}")
    click.echo(context.verdict)


@main.command("p-torsion")
@click.option("--p", "p", type=int, required=True, help="A prime")
@click.option("--n", "n", type=int, required=True, help="Complex dimension of CP^n")
@_handle_errors
def p_torsion(p: int, n: int) -> None:
    """Whether the p-local sphere bundle is trivial (p >= n + 2)."""
    from stable_sections.stablerange.bounds import p_torsion_stable

    click.echo("true" if p_torsion_stable(p, n) else "false")


@main.command()
def info() -> None:
    """Show current configuration."""
    settings = get_settings()

    click.echo("Configuration")
    click.echo(f"  Steenrod degree cap: {settings.steenrod_degree_cap}")
    click.echo(f"  Ext window: s <= {settings.ext_max_s}, t <= {settings.ext_max_t}")
    click.echo(f"  Chart format: {settings.chart_format}")
    click.echo(f"  SVG cell size: {settings.svg_cell_size}")
    click.echo(f"  Verbose: {settings.verbose}")


if __name__ == "__main__":
    main()
