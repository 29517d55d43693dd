"""Rewriting API endpoints."""
from flask import current_app, request

from fpsrewrite.modules.algebra.schemas import DistanceSchema, SeriesSchema
from fpsrewrite.modules.algebra.service import AlgebraService
from fpsrewrite.modules.cofactor.schemas import MembershipVerdictSchema
from fpsrewrite.modules.cofactor.service import CofactorService
from fpsrewrite.modules.confluence.schemas import JoinResultSchema, SBReportSchema
from fpsrewrite.modules.confluence.service import ConfluenceService
from fpsrewrite.modules.oracle.schemas import CrossValidationReportSchema, OracleSolutionSchema
from fpsrewrite.modules.oracle.service import OracleService
from fpsrewrite.modules.rewrite.schemas import ReductionResultSchema
from fpsrewrite.modules.rewrite.service import RewriteService
from .schemas import APIResponse, RequestValidator
from . import api_v1_bp


def _load(*required: str):
    """Validated body, system config, rewrite system and precision of the current request."""
    data = RequestValidator.validate_body(request.get_json(silent=True), *required)
    config = RequestValidator.validate_system(data.get('system'))
    precision = RequestValidator.validate_precision(data.get('precision'), config, current_app.config)
    RequestValidator.validate_size(config, precision, current_app.config)
    return data, config, config.build(), precision


@api_v1_bp.route('/reduce', methods=['POST'])
def reduce_series():
    """Reduce a series to normal form modulo (X)^D."""
    data, config, system, precision = _load('input')
    tie_break = RequestValidator.validate_tie_break(data.get('tie_break'))
    result = RewriteService.reduce_to_precision(config.parse(data['input']), system, precision, tie_break)
    return APIResponse.success(ReductionResultSchema.serialize(result, system))


@api_v1_bp.route('/member', methods=['POST'])
def member():
    """Membership in I + (X)^D by elimination."""
    data, config, system, precision = _load('input')
    verdict = CofactorService.limit_coefficients(config.parse(data['input']), system, precision)
    return APIResponse.success(MembershipVerdictSchema.serialize(verdict, system))


@api_v1_bp.route('/cofactor', methods=['POST'])
def cofactor():
    """Cofactors, certified prefixes and the recomputed identity."""
    data, config, system, precision = _load('input')
    f = config.parse(data['input'])
    verdict = CofactorService.limit_coefficients(f, system, precision)
    payload = MembershipVerdictSchema.serialize(verdict, system)
    payload['identity'] = CofactorService.verify_cofactor_identity(f, verdict, system, precision)
    payload['violations'] = CofactorService.trace_violations(verdict.trace, system)
    payload['certified_cofactors'] = [
        SeriesSchema.serialize(c, system.names, system.order)
        for c in CofactorService.certified_cofactors(verdict.trace)
    ]
    return APIResponse.success(payload)


@api_v1_bp.route('/join', methods=['POST'])
def join():
    """Join two series by simultaneous rewriting."""
    data, config, system, precision = _load('g', 'h')
    tie_break = RequestValidator.validate_tie_break(data.get('tie_break'))
    result = ConfluenceService.join(config.parse(data['g']), config.parse(data['h']), system,
                                    precision, tie_break)
    return APIResponse.success(JoinResultSchema.serialize(result, system))


@api_v1_bp.route('/check-sb', methods=['POST'])
def check_standard_basis():
    """Truncated standard-basis check."""
    data, config, system, precision = _load()
    max_workers = RequestValidator.validate_count(data.get('max_workers'), 'max_workers', 1, 8)
    report = ConfluenceService.check_standard_basis(system, precision, max(max_workers, 1))
    return APIResponse.success(SBReportSchema.serialize(report, system))


@api_v1_bp.route('/delta', methods=['POST'])
def delta():
    """Adic distance between two series."""
    data = RequestValidator.validate_body(request.get_json(silent=True), 'f', 'g')
    config = RequestValidator.validate_system(data.get('system'))
    distance = AlgebraService.delta(config.parse(data['f']), config.parse(data['g']))
    return APIResponse.success(DistanceSchema.serialize(distance))


@api_v1_bp.route('/oracle/member', methods=['POST'])
def oracle_member():
    """Membership in I + (X)^D by Gaussian elimination."""
    data, config, system, precision = _load('input')
    solution = OracleService.membership_oracle(config.parse(data['input']), system, precision)
    return APIResponse.success(OracleSolutionSchema.serialize(solution, system, precision))


@api_v1_bp.route('/oracle/cross-validate', methods=['POST'])
def oracle_cross_validate():
    """Seeded comparison of elimination and oracle membership."""
    data, config, system, precision = _load()
    settings = current_app.config
    trials = RequestValidator.validate_count(data.get('trials'), 'trials',
                                             settings['ORACLE_TRIALS'], settings['ORACLE_TRIALS'])
    seed = data.get('seed', settings['DEFAULT_SEED'])
    if isinstance(seed, bool) or not isinstance(seed, int):
        return APIResponse.error(f'seed must be an integer, got {seed!r}', code='ConfigError'), 400
    inputs = [config.parse(text) for text in data.get('inputs', [])]
    report = OracleService.cross_validate(system, precision, trials, seed, inputs)
    current_app.logger.info(f'Cross-validation over HTTP: {report.checked} inputs, {len(report.bugs)} bugs')
    return APIResponse.success(CrossValidationReportSchema.serialize(report, system))
