"""
Batch front end.

    python -m app.cli congruence data/I4.sgp data/pair.prs
    python -m app.cli contains data/I4.sgp data/pair.prs "[1 2 4] (3)" "[1 4] (2 3)"

Exit codes: 0 success or true, 1 false, 2 usage, 3 parse, 4 not in semigroup.
"""
from functools import wraps

import click

from app.core.config import ENGINES, config_provider
from app.core.exceptions import (
    EXIT_FALSE,
    EXIT_NOT_IN_SEMIGROUP,
    EXIT_PARSE,
    EXIT_TRUE,
    EXIT_USAGE,
    CongruenceError,
    NotationError,
    NotInSemigroupError,
)
from app.core.logging_config import set_level
from app.models.report_models import ContainsReport
from app.services import lattice, reports
from app.services.bench import run_bench, write_csv
from app.services.congruence import Congruence
from app.services.notation import format_image_list, parse_element
from app.services.semigroup import InverseSemigroup
from app.utils.helper_functions import read_pairs_file, read_semigroup_file


def handle_errors(func):
    """Map domain errors onto exit codes."""

    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except NotationError as e:
            click.echo(f"parse error: {e}", err=True)
            raise SystemExit(EXIT_PARSE)
        except NotInSemigroupError as e:
            click.echo(f"not in semigroup: {e}", err=True)
            raise SystemExit(EXIT_NOT_IN_SEMIGROUP)
        except CongruenceError as e:
            click.echo(f"error: {e}", err=True)
            raise SystemExit(EXIT_USAGE)

    return wrapper


json_option = click.option("--json", "as_json", is_flag=True, help="Emit JSON instead of text.")
engine_option = click.option(
    "--engine",
    type=click.Choice(ENGINES),
    default=None,
    help="Computation engine; defaults to CONGRUENCE_ENGINE.",
)


def _engine(engine):
    return engine or config_provider.get_engine()


def _load(sgp: str) -> InverseSemigroup:
    degree, gens = read_semigroup_file(sgp)
    return InverseSemigroup(degree, gens)


def _load_congruence(ds: InverseSemigroup, prs: str, engine: str):
    return reports.make_congruence(ds, read_pairs_file(prs, ds.degree), engine)


def _emit_elements(report, as_json: bool) -> None:
    if as_json:
        click.echo(report.model_dump_json(indent=2))
        return
    click.echo(f"size {report.size}")
    for x in report.elements:
        click.echo(x)


@click.group()
@click.option("--log-level", default=None, help="Override LOG_LEVEL for this run.")
def cli(log_level):
    """Congruences of finite inverse semigroups of partial permutations."""
    if log_level:
        set_level(log_level)


@cli.command()
@click.argument("sgp", type=click.Path())
@click.option("--dot", "dot_path", type=click.Path(), default=None, help="Write the idempotent word graph as DOT.")
@json_option
@handle_errors
def info(sgp, dot_path, as_json):
    """Size, idempotents and D-classes of the semigroup."""
    ds = _load(sgp)
    report = reports.semigroup_report(ds)
    if dot_path:
        labels = [format_image_list(e) for e in ds.nodes]
        with open(dot_path, "w") as handle:
            handle.write(ds.gamma.to_dot(labels, ds.letter_names))
    if as_json:
        click.echo(report.model_dump_json(indent=2))
        return
    click.echo(f"degree {report.degree}")
    click.echo(f"|S| = {report.size}")
    click.echo(f"|E(S)| = {report.idempotents}")
    click.echo(f"D-classes: {report.d_classes} (sizes {', '.join(map(str, report.d_class_sizes))})")


@cli.command(name="congruence")
@click.argument("sgp", type=click.Path())
@click.argument("prs", type=click.Path())
@json_option
@engine_option
@handle_errors
def congruence_command(sgp, prs, as_json, engine):
    """Number of classes and the structure of the quotient."""
    engine = _engine(engine)
    ds = _load(sgp)
    report = reports.congruence_report(_load_congruence(ds, prs, engine), engine)
    if as_json:
        click.echo(report.model_dump_json(indent=2))
        return
    click.echo(f"classes: {report.nr_classes}")
    click.echo(f"trace classes: {report.trace_classes}")
    for comp in report.components:
        click.echo(
            f"  f = {comp.meet}  |C| = {comp.trace_classes}  |G| = {comp.group_order}  "
            f"|N| = {comp.normal_subgroup_order}  |G/N| = {comp.quotient_group_order}"
        )


@cli.command(name="class-of")
@click.argument("sgp", type=click.Path())
@click.argument("prs", type=click.Path())
@click.argument("element")
@json_option
@engine_option
@handle_errors
def class_of_command(sgp, prs, element, as_json, engine):
    """All elements related to ELEMENT."""
    ds = _load(sgp)
    x = parse_element(element, ds.degree)
    c = _load_congruence(ds, prs, _engine(engine))
    _emit_elements(reports.element_set_report(c.class_of(x), x), as_json)


@cli.command(name="contains")
@click.argument("sgp", type=click.Path())
@click.argument("prs", type=click.Path())
@click.argument("a")
@click.argument("b")
@json_option
@engine_option
@handle_errors
def contains_command(sgp, prs, a, b, as_json, engine):
    """Exit 0 if A and B are related, 1 otherwise."""
    ds = _load(sgp)
    x, y = parse_element(a, ds.degree), parse_element(b, ds.degree)
    result = _load_congruence(ds, prs, _engine(engine)).contains(x, y)
    if as_json:
        report = ContainsReport(a=format_image_list(x), b=format_image_list(y), contains=result)
        click.echo(report.model_dump_json(indent=2))
    else:
        click.echo("true" if result else "false")
    raise SystemExit(EXIT_TRUE if result else EXIT_FALSE)


@cli.command()
@click.argument("sgp", type=click.Path())
@click.argument("prs", type=click.Path())
@json_option
@engine_option
@handle_errors
def kernel(sgp, prs, as_json, engine):
    """Elements related to an idempotent."""
    ds = _load(sgp)
    c = _load_congruence(ds, prs, _engine(engine))
    _emit_elements(reports.element_set_report(c.kernel()), as_json)


@cli.command()
@click.argument("sgp", type=click.Path())
@click.argument("prs", type=click.Path())
@json_option
@engine_option
@handle_errors
def trace(sgp, prs, as_json, engine):
    """The partition of the idempotents."""
    ds = _load(sgp)
    report = reports.trace_report(_load_congruence(ds, prs, _engine(engine)))
    if as_json:
        click.echo(report.model_dump_json(indent=2))
        return
    for members in report.classes:
        click.echo(" ".join(members))


@cli.command()
@click.argument("sgp", type=click.Path())
@click.argument("prs", type=click.Path())
@json_option
@engine_option
@handle_errors
def reps(sgp, prs, as_json, engine):
    """One representative per class."""
    ds = _load(sgp)
    _emit_elements(reports.reps_report(_load_congruence(ds, prs, _engine(engine))), as_json)


def _lattice_command(operation: str, sgp, prs1, prs2, as_json, engine):
    engine = _engine(engine)
    ds = _load(sgp)
    c1 = _load_congruence(ds, prs1, engine)
    c2 = _load_congruence(ds, prs2, engine)
    if isinstance(c1, Congruence):
        result = getattr(lattice, operation)(c1, c2)
    else:
        result = getattr(c1, operation)(c2)
    report = reports.congruence_report(result, engine)
    if as_json:
        click.echo(report.model_dump_json(indent=2))
    else:
        click.echo(f"classes: {report.nr_classes}")
        click.echo(f"trace classes: {report.trace_classes}")


@cli.command()
@click.argument("sgp", type=click.Path())
@click.argument("prs1", type=click.Path())
@click.argument("prs2", type=click.Path())
@json_option
@engine_option
@handle_errors
def join(sgp, prs1, prs2, as_json, engine):
    """Least congruence containing both."""
    _lattice_command("join", sgp, prs1, prs2, as_json, engine)


@cli.command()
@click.argument("sgp", type=click.Path())
@click.argument("prs1", type=click.Path())
@click.argument("prs2", type=click.Path())
@json_option
@engine_option
@handle_errors
def meet(sgp, prs1, prs2, as_json, engine):
    """Intersection of both."""
    _lattice_command("meet", sgp, prs1, prs2, as_json, engine)


@cli.command(name="mu")
@click.argument("sgp", type=click.Path())
@json_option
@handle_errors
def mu_command(sgp, as_json):
    """The maximum idempotent-separating congruence."""
    report = reports.mu_report(_load(sgp))
    if as_json:
        click.echo(report.model_dump_json(indent=2))
        return
    click.echo("atoms: " + " ".join("{" + ",".join(map(str, atom)) + "}" for atom in report.atoms))
    click.echo(f"kernel (centraliser of E(S)): {len(report.centraliser)} elements")
    click.echo(f"classes: {report.nr_classes}")
    click.echo(f"trivial: {'yes' if report.trivial else 'no'}")


@cli.command()
@click.option("--samples", type=int, default=None, help="Number of instances; defaults to BENCH_SAMPLES.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--degree", "degrees", type=int, multiple=True, help="Degrees to draw from (repeatable).")
@click.option("--limit", type=int, default=50_000, show_default=True, help="Largest semigroup to keep.")
@click.option("--min-size", type=int, default=5000, show_default=True, help="Size threshold for the median ratio.")
@click.option("--csv", "csv_path", type=click.Path(), default=None, help="Write the records as CSV.")
@json_option
@handle_errors
def bench(samples, seed, degrees, limit, min_size, csv_path, as_json):
    """Time the quotient engine against the naive closure."""
    samples = samples if samples is not None else config_provider.get_bench_samples()
    if samples < 1:
        raise click.UsageError("--samples must be positive")
    report = run_bench(samples, seed=seed, degrees=degrees or (6, 7), limit=limit, min_size=min_size, progress=not as_json)
    if csv_path:
        write_csv(report, csv_path)
    if as_json:
        click.echo(report.model_dump_json(indent=2))
        return
    click.echo("seed  degree  |S|  |E|  fast_s  naive_s  ratio")
    for r in report.records:
        click.echo(
            f"{r.seed}  {r.degree}  {r.size}  {r.idempotents}  {r.fast_seconds:.4f}  {r.naive_seconds:.4f}  {r.ratio:.1f}"
        )
    median = "n/a" if report.median_ratio is None else f"{report.median_ratio:.1f}"
    click.echo(f"median ratio (|S| >= {report.min_size}): {median}")


if __name__ == "__main__":
    cli()
