import copy
import functools
import logging
import sys
from dataclasses import dataclass
from typing import Optional

import click
from sqlalchemy.exc import SQLAlchemyError

from application.dto.scan_dto import SCAN_HEADER
from application.dto.verify_dto import VERIFY_HEADER, ClaimStatus
from application.services.formatting import format_cell, format_rational, format_real
from application.use_cases.chern_use_cases import ChernUseCases
from application.use_cases.scan_use_cases import ScanUseCases
from application.use_cases.verify_use_cases import VerifyUseCases
from domain.entities.surface import SurfaceData
from domain.repositories.class_number_repository import ClassNumberRepository
from domain.services import hz, surface
from domain.services.classnum import ClassNumberService
from domain.value_objects.bound_constants import PRINTED_ROBIN_CONSTANT, BoundConstants
from domain.value_objects.hz_params import HzParams
from infrastructure.config.settings import Settings, settings
from infrastructure.reports.csv_writer import write_csv
from infrastructure.repositories.sql_class_number_repository import SqlClassNumberRepository
from infrastructure.repositories.tsv_class_number_repository import TsvClassNumberRepository


logger = logging.getLogger(__name__)

EXIT_INVALID_ARGUMENT = 2
EXIT_IO_FAILURE = 3


@dataclass
class CliContext:
    classes: ClassNumberService
    repository: Optional[ClassNumberRepository]
    settings: Settings


def build_repository(config: Settings) -> Optional[ClassNumberRepository]:
    if not config.cache_enabled:
        return None
    if config.cache_is_database:
        return SqlClassNumberRepository.from_url(config.database_url())
    return TsvClassNumberRepository(config.cache_path)


def handle_errors(command):
    """Map domain errors to exit code 2 and I/O errors to exit code 3, flushing the cache on success"""
    @functools.wraps(command)
    def wrapper(ctx: click.Context, *args, **kwargs):
        try:
            result = command(ctx, *args, **kwargs)
            repository = ctx.obj.repository
            if repository is not None:
                repository.flush()
            return result
        except ValueError as e:
            click.echo(f"error: {e}", err=True)
            ctx.exit(EXIT_INVALID_ARGUMENT)
        except (OSError, SQLAlchemyError) as e:
            click.echo(f"error: {e}", err=True)
            ctx.exit(EXIT_IO_FAILURE)
    return wrapper


@click.group()
@click.option("--cache", "cache_path", type=click.Path(dir_okay=False), default=None,
              help="Class number cache: a TSV file, a .db file or a sqlite:/// URL")
@click.option("--no-cache", is_flag=True, help="Do not read or write the class number cache")
@click.option("--verbose", "-v", is_flag=True, help="Log progress to stderr")
@click.pass_context
def cli(ctx: click.Context, cache_path: Optional[str], no_cache: bool, verbose: bool):
    """Self-intersections of Hirzebruch-Zagier cycles and the bounds around them."""
    config = copy.copy(settings)
    if cache_path is not None:
        config.cache_path = cache_path
    if no_cache:
        config.cache_enabled = False
    logging.basicConfig(
        level=logging.INFO if verbose else config.log_level,
        stream=sys.stderr,
        format="%(asctime)s %(name)s %(levelname)s %(message)s"
    )
    try:
        repository = build_repository(config)
    except (OSError, SQLAlchemyError) as e:
        click.echo(f"error: {e}", err=True)
        ctx.exit(EXIT_IO_FAILURE)
    ctx.obj = CliContext(classes=ClassNumberService(repository), repository=repository, settings=config)


@cli.command()
@click.option("-d", "discriminant", type=int, required=True, help="Negative discriminant")
@click.pass_context
@handle_errors
def classnum(ctx: click.Context, discriminant: int):
    """Print the class number h(d)."""
    click.echo(str(ctx.obj.classes.class_number(discriminant)))


@cli.command()
@click.option("-p", "p", type=int, required=True, help="Prime p = 1 mod 4")
@click.option("-N", "N", type=int, required=True, help="Index of T_N")
@click.option("--A", "A", type=int, default=1, show_default=True, help="Norm of the ideal a")
@click.option("--include-ip", is_flag=True, help="Add the I_p contribution")
@click.option("--tol", type=float, default=None, help="Absolute error allowed for I_p")
@click.option("--allow-non-squarefree", is_flag=True, help="Evaluate the formula for non-squarefree N")
@click.pass_context
@handle_errors
def selfint(ctx: click.Context, p: int, N: int, A: int, include_ip: bool, tol: Optional[float],
            allow_non_squarefree: bool):
    """Print T_N^2."""
    tol = ctx.obj.settings.tolerance if tol is None else tol
    value = hz.t_n_squared(
        HzParams(p, A), N,
        include_ip=include_ip,
        tol=tol,
        allow_non_squarefree=allow_non_squarefree,
        classes=ctx.obj.classes
    )
    if include_ip:
        click.echo(f"{format_real(value)} +/- {format_real(tol)}")
    else:
        click.echo(format_rational(value))


@cli.command()
@click.option("-p", "p", type=int, required=True, help="Prime p = 1 mod 4")
@click.option("--n-max", type=int, required=True, help="Largest N scanned")
@click.option("--include-ip", is_flag=True, help="Add the I_p contribution")
@click.option("--tol", type=float, default=None, help="Absolute error allowed for I_p")
@click.option("--any-n", is_flag=True, help="Scan every N <= n-max, not only split prime products")
@click.option("--workers", type=int, default=None, help="Worker processes")
@click.option("-o", "out_path", type=click.Path(dir_okay=False), required=True, help="CSV output")
@click.pass_context
@handle_errors
def scan(ctx: click.Context, p: int, n_max: int, include_ip: bool, tol: Optional[float], any_n: bool,
         workers: Optional[int], out_path: str):
    """Tabulate T_N^2 against the Lemma 2 bounds."""
    config = ctx.obj.settings
    params = HzParams(p)
    use_cases = ScanUseCases(ctx.obj.classes, workers=config.workers if workers is None else workers)
    records = use_cases.scan(
        params, n_max,
        include_ip=include_ip,
        tol=config.tolerance if tol is None else tol,
        any_n=any_n
    )
    write_csv(out_path, SCAN_HEADER, (record.csv_row() for record in records))
    click.echo(use_cases.summarize(params, n_max, records).summary_line())


@cli.command()
@click.option("-p", "p", type=int, required=True, help="Prime p = 1 mod 4")
@click.option("--n-max", type=int, required=True, help="Largest N scanned")
@click.option("--d-max", type=int, required=True, help="Largest |d| in the Paley audit")
@click.option("--robin-constant", type=float, default=PRINTED_ROBIN_CONSTANT, show_default=True,
              help="Second constant of the two-term Robin bound")
@click.option("-o", "out_path", type=click.Path(dir_okay=False), required=True, help="CSV output")
@click.pass_context
@handle_errors
def verify(ctx: click.Context, p: int, n_max: int, d_max: int, robin_constant: float, out_path: str):
    """Check every printed claim against exact data and write the claim table."""
    use_cases = VerifyUseCases(
        ctx.obj.classes,
        constants=BoundConstants(robin_constant=robin_constant),
        max_listed_exceptions=ctx.obj.settings.paley_max_exceptions
    )
    claims = use_cases.verify(HzParams(p), n_max, d_max)
    write_csv(out_path, VERIFY_HEADER, (claim.csv_row() for claim in claims))
    failed = sum(1 for claim in claims if claim.status is ClaimStatus.FAIL)
    click.echo(f"{len(claims)} claims checked, {failed} failed")


@cli.command()
@click.option("-p", "p", type=int, required=True, help="Prime p = 1 mod 4")
@click.pass_context
@handle_errors
def chern(ctx: click.Context, p: int):
    """Print zeta_K(-1), the volume and the c_2 bounds."""
    use_cases = ChernUseCases(ctx.obj.classes)
    for line in use_cases.report_lines(use_cases.report(p)):
        click.echo(line)


@cli.command("surface-bound")
@click.option("--c2", type=float, required=True, help="Second Chern number")
@click.option("--ksq", type=float, required=True, help="K_X^2")
@click.option("--delta", type=float, default=None, help="delta of the curve")
@click.option("--sc", type=float, default=None, help="S.C")
@click.option("--rho", type=float, default=None, help="rho(C)")
@click.pass_context
@handle_errors
def surface_bound(ctx: click.Context, c2: float, ksq: float, delta: Optional[float], sc: Optional[float],
                  rho: Optional[float]):
    """Print d_2 and the lower bounds for C^2."""
    data = SurfaceData(c2=c2, ksq=ksq)
    click.echo(f"d2 = {format_cell(data.d2)}")
    click.echo(f"-9 d2 = {format_cell(-9 * data.d2)}")
    click.echo(f"exact-constant bound = {format_cell(surface.exact_c2_lower(data.d2))}")
    given = [value is not None for value in (delta, sc, rho)]
    if all(given):
        click.echo(f"chain lower bound = {format_cell(surface.c2_chain_lower(delta, sc, rho, data.d2))}")
    elif any(given):
        raise click.UsageError("--delta, --sc and --rho must be given together")


def main():
    cli(prog_name="hz-bounds")
