"""Command-line surface: hn, wallcross, verify, kronecker and dynkin."""

import json
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

import click
from pydantic import BaseModel

from cli import rendering
from cli.errors import EXIT_FAILURES, EXIT_OK, ReportingGroup
from cli.schemas import (
    SUITES,
    DynkinPayload,
    HNPayload,
    HNRow,
    KroneckerPayload,
    KroneckerRow,
    QuiverDescription,
    RunConfig,
    VerifyPayload,
    WallcrossPayload,
    WallcrossRow,
)
from config import Settings, get_settings
from errors import ConfigurationError, NonGenericStability
from oracle.counting import Budgets, verify_oracle
from quivers.catalog import ORIENTATIONS, dynkin_quiver
from quivers.quiver import DimVector, Functional, Quiver, Stability, load_stability
from quivers.roots import is_dynkin
from services.dynkin import dynkin_factorization
from services.hn_recursion import (
    HNContext,
    e_d,
    p_d_recursive,
    slope_series,
    verify_hnsa,
    verify_recursion_agreement,
)
from services.kronecker import dt_table, verify_kronecker
from services.poisson_service import verify_main_theorem, verify_poisson
from services.reports import Report
from services.wallcross import smooth_model_table, verify_integrality
from utils.logger import get_logger, log_with_context, set_level
from utils.text_utils import parse_named_ints, parse_slope, parse_suites

logger = get_logger(__name__)


def load_quiver_file(path: str) -> Tuple[QuiverDescription, Quiver, Stability]:
    """Read and validate a quiver JSON file.

    Raises:
        ConfigurationError: If the file is missing or not JSON
        ValidationError: If a required field such as "theta" is absent
    """
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise ConfigurationError(f"quiver file not found: {path}") from None
    except json.JSONDecodeError as e:
        raise ConfigurationError(f"quiver file {path} is not valid JSON: {e}") from None
    description = QuiverDescription.model_validate(raw)
    quiver, theta = description.build()
    log_with_context(
        logger,
        "debug",
        "Quiver loaded",
        path=path,
        vertices=quiver.vertices,
        arrows=len(quiver.arrows),
    )
    return description, quiver, theta


def _dim_from_flag(
    raw: str, description: QuiverDescription, quiver: Quiver
) -> DimVector:
    # positional values follow the file's vertex order, not the admissible order
    return quiver.dim_vector(parse_named_ints(raw, description.vertices))


def _emit(config: RunConfig, payload: BaseModel, as_text: Callable[..., str]) -> None:
    if config.output_format == "json":
        click.echo(rendering.render_json(payload))
    else:
        click.echo(as_text(payload))


def _settings(ctx: click.Context) -> Settings:
    return ctx.find_object(Settings) or get_settings()


@click.group(cls=ReportingGroup)
@click.option("--log-level", default=None, help="Override LOG_LEVEL for this run.")
@click.pass_context
def cli(ctx: click.Context, log_level: Optional[str]) -> None:
    """Harder-Narasimhan and wall-crossing computations for acyclic quivers."""
    settings = ctx.obj if isinstance(ctx.obj, Settings) else get_settings()
    ctx.obj = settings
    set_level(log_level or settings.log_level)


def quiver_option(func: Callable) -> Callable:
    return click.option(
        "--quiver",
        "quiver_path",
        required=True,
        type=click.Path(dir_okay=False),
        help="Quiver JSON file.",
    )(func)


def order_option(func: Callable) -> Callable:
    return click.option(
        "--order", type=int, default=None, help="Truncation order N."
    )(func)


def format_option(func: Callable) -> Callable:
    return click.option(
        "--format",
        "output_format",
        type=click.Choice(["text", "json"]),
        default=None,
        help="Output format.",
    )(func)


@cli.command()
@quiver_option
@click.option("--dim", default=None, help="Dimension vector, e.g. 1,1 or i=1,j=1.")
@order_option
@format_option
@click.pass_context
def hn(
    ctx: click.Context,
    quiver_path: str,
    dim: Optional[str],
    order: Optional[int],
    output_format: Optional[str],
) -> None:
    """Print e_d and p_d for one d, or for every d with dim d <= N."""
    description, quiver, theta = load_quiver_file(quiver_path)
    requested = _dim_from_flag(dim, description, quiver) if dim else None
    config = RunConfig.from_settings(
        _settings(ctx),
        quiver_path=quiver_path,
        order=order,
        output_format=output_format,
        dim=list(requested) if requested is not None else None,
    )
    hn_ctx = HNContext(quiver, theta)
    if requested is not None:
        vectors = [requested]
    else:
        vectors = list(quiver.dimension_vectors(config.order))
    rows = [
        HNRow(
            dim=rendering.dim_payload(quiver, d),
            slope=str(hn_ctx.mu(d)) if not d.is_zero else "-",
            e=rendering.rational_payload(e_d(hn_ctx, d)),
            p=rendering.rational_payload(p_d_recursive(hn_ctx, d)),
        )
        for d in vectors
    ]
    payload = HNPayload(
        vertices=list(quiver.vertices),
        theta=description.theta,
        order=config.order,
        rows=rows,
    )
    _emit(config, payload, rendering.hn_text)


@cli.command()
@quiver_option
@order_option
@click.option(
    "--slope", "slope_filter", default=None, help="Only this slope, e.g. 1/2."
)
@click.option(
    "--max-framing",
    type=int,
    default=None,
    help="Largest multiple n of each unit framing (default N).",
)
@format_option
@click.pass_context
def wallcross(
    ctx: click.Context,
    quiver_path: str,
    order: Optional[int],
    slope_filter: Optional[str],
    max_framing: Optional[int],
    output_format: Optional[str],
) -> None:
    """Tabulate Poincare polynomials and Euler characteristics of the smooth models."""
    config = RunConfig.from_settings(
        _settings(ctx),
        quiver_path=quiver_path,
        order=order,
        slope=slope_filter,
        output_format=output_format,
    )
    description, quiver, theta = load_quiver_file(quiver_path)
    hn_ctx = HNContext(quiver, theta)
    top = max(config.order, 1) if max_framing is None else max_framing
    framings = [
        Functional.unit(quiver.rank, k).scale(n)
        for k in range(quiver.rank)
        for n in range(1, top + 1)
    ]
    wanted: Optional[Fraction] = parse_slope(config.slope) if config.slope else None

    rows: List[WallcrossRow] = []
    for mu in slope_series(hn_ctx, config.order):
        if wanted is not None and mu != wanted:
            continue
        table = smooth_model_table(hn_ctx, mu, framings, config.order)
        for (d, n), row in table.rows.items():
            rows.append(
                WallcrossRow(
                    slope=str(mu),
                    dim=rendering.dim_payload(quiver, d),
                    framing=rendering.dim_payload(quiver, n.weights),
                    poincare=rendering.laurent_payload(row.poincare),
                    euler=row.euler,
                )
            )
    payload = WallcrossPayload(
        vertices=list(quiver.vertices),
        theta=description.theta,
        order=config.order,
        rows=rows,
    )
    _emit(config, payload, rendering.wallcross_text)


def kronecker_arrows(quiver: Quiver) -> Optional[int]:
    """m if the quiver is K_m (two vertices, all arrows parallel), else None."""
    if quiver.rank != 2 or not quiver.arrows or len(set(quiver.arrows)) != 1:
        return None
    return len(quiver.arrows)


def _skipped(suite: str, reason: str) -> Report:
    return Report(suite=suite, subject=f"skipped: {reason}")


def run_suites(config: RunConfig, quiver: Quiver, theta: Stability) -> List[Report]:
    """Run the selected suites in canonical order."""
    ctx = HNContext(quiver, theta)
    order = config.order
    reports: List[Report] = []
    for suite in config.suites:
        if suite == "hn":
            reports.append(verify_hnsa(ctx, order))
            reports.append(verify_recursion_agreement(ctx, order))
        elif suite == "factorization":
            reports.append(verify_main_theorem(ctx, order))
        elif suite == "integrality":
            reports.append(verify_integrality(ctx, order))
        elif suite == "poisson":
            reports.append(
                verify_poisson(
                    ctx, order, seed=config.seed, samples=config.poisson_samples
                )
            )
        elif suite == "oracle":
            budgets = Budgets(
                reps=config.budget_reps, subspaces=config.budget_subspaces
            )
            primes = [config.q] if config.q else [2]
            for prime in primes:
                oracle_order = min(order, config.oracle_order)
                reports.append(verify_oracle(ctx, oracle_order, prime, budgets))
        elif suite == "dynkin":
            if not is_dynkin(quiver):
                reports.append(_skipped("dynkin", "not a Dynkin quiver"))
                continue
            try:
                reports.append(dynkin_factorization(quiver, theta, order))
            except NonGenericStability as e:
                report = dynkin_factorization(quiver, None, order)
                report.details["file_theta"] = f"not generic: {e}"
                reports.append(report)
        elif suite == "kronecker":
            m = kronecker_arrows(quiver)
            if m is None:
                reports.append(_skipped("kronecker", "not a Kronecker quiver"))
                continue
            reports.append(verify_kronecker(m, order))
    return reports


def _finish(ctx: click.Context, reports: List[Report]) -> None:
    failures = sum(len(r.discrepancies) for r in reports)
    ctx.exit(EXIT_OK if failures == 0 else EXIT_FAILURES)


@cli.command()
@quiver_option
@order_option
@click.option(
    "--suites",
    default="all",
    show_default=True,
    help=f"Comma-separated subset of {','.join(SUITES)} or all.",
)
@click.option(
    "--q", "q", type=int, default=None, help="Field size for the oracle (2 or 3)."
)
@click.option(
    "--budget-reps", type=int, default=None, help="Cap on enumerated representations."
)
@click.option(
    "--budget-subspaces",
    type=int,
    default=None,
    help="Cap on subspace tuples per representation.",
)
@click.option("--seed", type=int, default=None, help="Seed for randomized checks.")
@format_option
@click.pass_context
def verify(
    ctx: click.Context,
    quiver_path: str,
    order: Optional[int],
    suites: str,
    q: Optional[int],
    budget_reps: Optional[int],
    budget_subspaces: Optional[int],
    seed: Optional[int],
    output_format: Optional[str],
) -> None:
    """Run verification suites; exit status 1 if any check fails."""
    config = RunConfig.from_settings(
        _settings(ctx),
        quiver_path=quiver_path,
        order=order,
        suites=parse_suites(suites, SUITES),
        q=q,
        budget_reps=budget_reps,
        budget_subspaces=budget_subspaces,
        seed=seed,
        output_format=output_format,
    )
    _, quiver, theta = load_quiver_file(quiver_path)
    reports = run_suites(config, quiver, theta)
    failures = sum(len(r.discrepancies) for r in reports)
    payload = VerifyPayload(ok=failures == 0, failures=failures, reports=reports)
    _emit(config, payload, rendering.verify_text)
    log_with_context(
        logger,
        "info",
        "Verification finished",
        suites=",".join(config.suites),
        failures=failures,
    )
    _finish(ctx, reports)


@cli.command()
@click.option(
    "--m", "m", type=int, required=True, help="Number of Kronecker arrows."
)
@order_option
@format_option
@click.pass_context
def kronecker(
    ctx: click.Context, m: int, order: Optional[int], output_format: Optional[str]
) -> None:
    """DT exponents d(a, b) of the Kronecker factorization."""
    config = RunConfig.from_settings(
        _settings(ctx), order=order, output_format=output_format
    )
    if m < 1:
        raise ConfigurationError(f"--m must be >= 1, got {m}")
    table = dt_table(m, config.order)
    rows = [
        KroneckerRow(
            a=a,
            b=b,
            slope=str(row.slope),
            c={str(k): value for k, value in sorted(row.c.items())},
            d={
                f"{x},{y}": str(value)
                for (x, y), value in sorted(row.d.items())
                if value
            },
        )
        for (a, b), row in sorted(
            table.rows.items(), key=lambda item: item[1].slope, reverse=True
        )
    ]
    report = verify_kronecker(m, config.order)
    payload = KroneckerPayload(m=m, order=config.order, rows=rows, report=report)
    _emit(config, payload, rendering.kronecker_text)
    _finish(ctx, [report])


@cli.command()
@click.option(
    "--type", "dynkin_type", required=True, help="Dynkin type, e.g. A3, D4, E6."
)
@click.option(
    "--orientation",
    type=click.Choice(list(ORIENTATIONS)),
    default="linear",
    show_default=True,
)
@click.option(
    "--theta",
    default=None,
    help="Stability, e.g. 0,1,3 or 1=0,2=1,3=3; searched if absent.",
)
@order_option
@format_option
@click.pass_context
def dynkin(
    ctx: click.Context,
    dynkin_type: str,
    orientation: str,
    theta: Optional[str],
    order: Optional[int],
    output_format: Optional[str],
) -> None:
    """Factor T_{i_1} o ... o T_{i_r} into one automorphism per positive root."""
    config = RunConfig.from_settings(
        _settings(ctx), order=order, output_format=output_format
    )
    quiver = dynkin_quiver(dynkin_type, orientation)
    stability: Optional[Stability] = None
    if theta:
        names = sorted(quiver.vertices, key=int)
        weights: Dict[str, int] = parse_named_ints(theta, names)
        stability = load_stability(quiver, weights)
    report = dynkin_factorization(quiver, stability, config.order)
    payload = DynkinPayload(
        type=dynkin_type.upper(),
        orientation=orientation,
        order=config.order,
        report=report,
    )
    _emit(config, payload, rendering.dynkin_text)
    _finish(ctx, [report])
