"""Abstract rewriting system API endpoints."""
from flask import current_app, request

from fpsrewrite.modules.tars.models import parse_epsilon
from fpsrewrite.modules.tars.schemas import RefutationVerdictSchema
from fpsrewrite.modules.tars.service import TarsService
from .schemas import APIResponse, RequestValidator
from . import api_v1_bp


@api_v1_bp.route('/tars/<name>/demo')
def tars_demo(name):
    """Witness paths to both normal forms and the refutation verdict."""
    system = TarsService.get_system(name)
    limit = current_app.config['TARS_MAX_STEPS']
    max_steps = RequestValidator.validate_count(request.args.get('max_steps', type=int),
                                                'max_steps', limit, limit)
    verdict = TarsService.demo(system, parse_epsilon(request.args.get('eps', '2^-10')), max_steps)
    data = RefutationVerdictSchema.serialize(verdict, system)
    data['rewriting_loop'] = TarsService.has_rewriting_loop(system.start, system, max_steps)
    return APIResponse.success(data)
