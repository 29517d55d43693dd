"""CLI commands for the rewriting toolkit."""
import functools
import json
import logging
import sys
from pathlib import Path

import click

from fpsrewrite.core.config import get_config
from fpsrewrite.core.errors import ConfigError, FPSError, PrecisionLoss
from fpsrewrite.modules.algebra.schemas import DistanceSchema, SeriesSchema
from fpsrewrite.modules.algebra.service import AlgebraService
from fpsrewrite.modules.cofactor.schemas import MembershipVerdictSchema
from fpsrewrite.modules.cofactor.service import CofactorService
from fpsrewrite.modules.confluence.schemas import JoinResultSchema, SBReportSchema
from fpsrewrite.modules.confluence.service import ConfluenceService
from fpsrewrite.modules.oracle.schemas import CrossValidationReportSchema, OracleSolutionSchema
from fpsrewrite.modules.oracle.service import OracleService
from fpsrewrite.modules.rewrite.models import TieBreak
from fpsrewrite.modules.rewrite.schemas import BUNDLED_SYSTEMS, ReductionResultSchema, SystemConfig
from fpsrewrite.modules.rewrite.service import RewriteService
from fpsrewrite.modules.tars.models import parse_epsilon
from fpsrewrite.modules.tars.schemas import RefutationVerdictSchema
from fpsrewrite.modules.tars.service import TarsService

logger = logging.getLogger(__name__)

DEFAULT_SYSTEM = 'idempotent'


def resolve_system_path(value: str = None) -> Path:
    """A path on disk, or the name of a bundled system ('idempotent', 'adversarial.json')."""
    value = value or DEFAULT_SYSTEM
    path = Path(value)
    if path.is_file():
        return path
    bundled = BUNDLED_SYSTEMS / (path.name if path.suffix == '.json' else f'{path.name}.json')
    if bundled.is_file():
        return bundled
    raise ConfigError(f'System file {value} not found')


def load_system(value: str = None) -> SystemConfig:
    return SystemConfig.load(resolve_system_path(value))


def resolve_precision(precision, system: SystemConfig) -> int:
    if precision is not None:
        if precision < 0:
            raise PrecisionLoss(f'Negative precision {precision}')
        return precision
    if system.precision is not None:
        return system.precision
    return get_config().DEFAULT_PRECISION


def emit(data, as_json: bool, text: str) -> None:
    if as_json:
        click.echo(json.dumps(data, sort_keys=True, indent=2))
    else:
        click.echo(text)


def handle_errors(func):
    """Report toolkit errors as 'ErrorName: message' with exit status 1."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except FPSError as e:
            logger.debug(f'{func.__name__} failed: {e.code}: {e}')
            raise click.ClickException(f'{e.code}: {e}')
    return wrapper


def system_options(func):
    func = click.option('--json', 'as_json', is_flag=True, help='Emit the structured record as JSON')(func)
    func = click.option('--precision', '-D', type=int, default=None,
                        help='Working precision D (defaults to the system file, then FPS_PRECISION)')(func)
    func = click.option('--system', 'system_path', default=None,
                        help='System file (JSON) or bundled system name; defaults to "idempotent"')(func)
    return func


def tie_break_option(func):
    return click.option('--tie-break', type=click.Choice([t.value for t in TieBreak]),
                        default=TieBreak.SMALLEST.value, show_default=True,
                        help='Generator chosen when several leading monomials divide')(func)


def _input_text(series, input_text) -> str:
    text = input_text if input_text is not None else series
    if text is None:
        raise click.UsageError('Missing input series (positional or --input)')
    return text


@click.group(name='fps')
@click.option('--log-level', default=None, help='Logging level (defaults to LOG_LEVEL)')
def fps_cli(log_level):
    """Rewriting on truncated formal power series."""
    level = (log_level or get_config().LOG_LEVEL).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
    )


@fps_cli.command()
@click.argument('series', required=False)
@click.option('--input', 'input_text', default=None, help='Input series (alternative to the argument)')
@system_options
@tie_break_option
@handle_errors
def reduce(series, input_text, system_path, precision, as_json, tie_break):
    """Reduce a series to normal form modulo (X)^D."""
    config = load_system(system_path)
    system = config.build()
    D = resolve_precision(precision, config)
    f = config.parse(_input_text(series, input_text))
    result = RewriteService.reduce_to_precision(f, system, D, TieBreak(tie_break))
    emit(ReductionResultSchema.serialize(result, system), as_json,
         ReductionResultSchema.render(result, system))


@fps_cli.command()
@click.argument('series', required=False)
@click.option('--input', 'input_text', default=None, help='Input series (alternative to the argument)')
@system_options
@handle_errors
def member(series, input_text, system_path, precision, as_json):
    """Decide membership in I + (X)^D by elimination."""
    config = load_system(system_path)
    system = config.build()
    D = resolve_precision(precision, config)
    verdict = CofactorService.limit_coefficients(config.parse(_input_text(series, input_text)), system, D)
    emit(MembershipVerdictSchema.serialize(verdict, system), as_json,
         MembershipVerdictSchema.render(verdict, system))


@fps_cli.command()
@click.argument('series', required=False)
@click.option('--input', 'input_text', default=None, help='Input series (alternative to the argument)')
@system_options
@handle_errors
def cofactor(series, input_text, system_path, precision, as_json):
    """Extract cofactors f = sum f_i s_i mod (X)^D with the elimination trace."""
    config = load_system(system_path)
    system = config.build()
    D = resolve_precision(precision, config)
    f = config.parse(_input_text(series, input_text))
    verdict = CofactorService.limit_coefficients(f, system, D)
    identity = CofactorService.verify_cofactor_identity(f, verdict, system, D)
    violations = CofactorService.trace_violations(verdict.trace, system)

    data = MembershipVerdictSchema.serialize(verdict, system)
    data['identity'] = identity
    data['violations'] = violations
    data['certified_cofactors'] = [
        SeriesSchema.serialize(c, system.names, system.order)
        for c in CofactorService.certified_cofactors(verdict.trace)
    ]
    text = MembershipVerdictSchema.render(verdict, system, with_trace=True)
    if verdict.member:
        text += f'\nidentity f = sum f_i s_i mod (X)^{D}: {"verified" if identity else "FAILED"}'
    for violation in violations:
        text += f'\ntrace violation: {violation}'
    emit(data, as_json, text)


@fps_cli.command()
@click.argument('g')
@click.argument('h')
@system_options
@tie_break_option
@handle_errors
def join(g, h, system_path, precision, as_json, tie_break):
    """Join two series by simultaneous rewriting modulo (X)^D."""
    config = load_system(system_path)
    system = config.build()
    D = resolve_precision(precision, config)
    result = ConfluenceService.join(config.parse(g), config.parse(h), system, D, TieBreak(tie_break))
    emit(JoinResultSchema.serialize(result, system), as_json, JoinResultSchema.render(result, system))


@fps_cli.command('check-sb')
@system_options
@click.option('--max-workers', type=int, default=1, show_default=True,
              help='Threads used to reduce the S-series')
@handle_errors
def check_sb(system_path, precision, as_json, max_workers):
    """Truncated standard-basis check over all generator pairs."""
    config = load_system(system_path)
    system = config.build()
    D = resolve_precision(precision, config)
    report = ConfluenceService.check_standard_basis(system, D, max_workers)
    emit(SBReportSchema.serialize(report, system), as_json, SBReportSchema.render(report, system))


@fps_cli.command()
@click.argument('f')
@click.argument('g')
@system_options
@handle_errors
def delta(f, g, system_path, precision, as_json):
    """Adic distance 2^-val(f-g)."""
    config = load_system(system_path)
    a, b = config.parse(f), config.parse(g)
    if precision is not None:
        precision = resolve_precision(precision, config)
        a, b = a.truncate(precision), b.truncate(precision)
    distance = AlgebraService.delta(a, b)
    emit(DistanceSchema.serialize(distance), as_json, str(distance))


@fps_cli.group()
def tars():
    """Abstract topological rewriting systems."""


@tars.command('demo')
@click.argument('name', type=click.Choice(['cyclic', 'nbar']))
@click.option('--eps', default='2^-10', show_default=True, help='Resolution as 2^-k or a rational')
@click.option('--max-steps', type=int, default=None, help='Search bound (defaults to FPS_TARS_MAX_STEPS)')
@click.option('--json', 'as_json', is_flag=True)
@handle_errors
def tars_demo(name, eps, max_steps, as_json):
    """Witness paths to two normal forms and the refutation verdict."""
    system = TarsService.get_system(name)
    max_steps = max_steps if max_steps is not None else get_config().TARS_MAX_STEPS
    verdict = TarsService.demo(system, parse_epsilon(eps), max_steps)
    data = RefutationVerdictSchema.serialize(verdict, system)
    data['rewriting_loop'] = TarsService.has_rewriting_loop(system.start, system, max_steps)
    emit(data, as_json, RefutationVerdictSchema.render(verdict, system))


@fps_cli.group()
def oracle():
    """Linear-algebra membership oracle."""


@oracle.command('member')
@click.argument('series', required=False)
@click.option('--input', 'input_text', default=None, help='Input series (alternative to the argument)')
@system_options
@handle_errors
def oracle_member(series, input_text, system_path, precision, as_json):
    """Membership in I + (X)^D by exact Gaussian elimination."""
    config = load_system(system_path)
    system = config.build()
    D = resolve_precision(precision, config)
    solution = OracleService.membership_oracle(config.parse(_input_text(series, input_text)), system, D)
    emit(OracleSolutionSchema.serialize(solution, system, D), as_json,
         OracleSolutionSchema.render(solution, system, D))


@oracle.command('cross-validate')
@system_options
@click.option('--trials', type=int, default=None, help='Random inputs (defaults to FPS_ORACLE_TRIALS)')
@click.option('--seed', type=int, default=None, help='Random seed (defaults to FPS_SEED)')
@click.option('--input', 'inputs', multiple=True, help='Extra input series; repeatable')
@handle_errors
def oracle_cross_validate(system_path, precision, as_json, trials, seed, inputs):
    """Compare elimination membership with the oracle on seeded random inputs."""
    config = load_system(system_path)
    system = config.build()
    D = resolve_precision(precision, config)
    settings = get_config()
    trials = trials if trials is not None else settings.ORACLE_TRIALS
    seed = seed if seed is not None else settings.DEFAULT_SEED
    report = OracleService.cross_validate(system, D, trials, seed, [config.parse(t) for t in inputs])
    emit(CrossValidationReportSchema.serialize(report, system), as_json,
         CrossValidationReportSchema.render(report, system))


@fps_cli.command()
def version():
    """Print the package version."""
    from fpsrewrite import __version__
    click.echo(f'fpsrewrite {__version__}')


def run(argv=None) -> int:
    """Entry point returning the exit status: 0 on a computed result, 1 on errors."""
    try:
        result = fps_cli.main(args=argv, prog_name='fpsrewrite', standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return 1
    except click.exceptions.Abort:
        click.echo('Aborted!', err=True)
        return 1
    return result if isinstance(result, int) else 0


def register_cli_commands(app):
    """Register CLI commands with the app."""
    app.cli.add_command(fps_cli)
