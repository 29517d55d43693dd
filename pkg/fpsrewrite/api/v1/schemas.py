"""API v1 schemas for request/response validation."""
from datetime import datetime, timezone
from typing import Any, Dict, Optional

from fpsrewrite.core.errors import ConfigError, PreconditionViolation
from fpsrewrite.modules.algebra.models import monomial_count
from fpsrewrite.modules.rewrite.models import TieBreak
from fpsrewrite.modules.rewrite.schemas import SystemConfig


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


class APIResponse:
    """Standard API response format."""

    @staticmethod
    def success(data: Any = None, message: str = None) -> Dict:
        """Create success response."""
        response = {
            'success': True,
            'timestamp': _now()
        }

        if data is not None:
            response['data'] = data

        if message:
            response['message'] = message

        return response

    @staticmethod
    def error(message: str, code: str = None, details: Any = None) -> Dict:
        """Create error response."""
        response = {
            'success': False,
            'error': {
                'message': message,
                'timestamp': _now()
            }
        }

        if code:
            response['error']['code'] = code

        if details:
            response['error']['details'] = details

        return response


class RequestValidator:
    """Request data validation."""

    @staticmethod
    def validate_body(data: Optional[Dict], *required: str) -> Dict:
        if not isinstance(data, dict):
            raise ConfigError('Request body must be a JSON object')
        missing = [key for key in required if key not in data]
        if missing:
            raise ConfigError(f'Missing field(s): {", ".join(missing)}')
        return data

    @staticmethod
    def validate_system(value) -> SystemConfig:
        """A system file object, or the name of a bundled system."""
        if value is None:
            value = 'idempotent'
        if isinstance(value, str):
            return SystemConfig.bundled(value)
        return SystemConfig.from_dict(value)

    @staticmethod
    def validate_precision(value, system: SystemConfig, settings) -> int:
        """Requested precision, else the system's, else the default; bounded by API_MAX_PRECISION."""
        if value is None:
            value = system.precision if system.precision is not None else settings['DEFAULT_PRECISION']
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigError(f'precision must be an integer, got {value!r}')
        limit = settings['API_MAX_PRECISION']
        if value < 0 or value > limit:
            raise PreconditionViolation(f'precision must lie in [0, {limit}], got {value}')
        return value

    @staticmethod
    def validate_size(system: SystemConfig, precision: int, settings) -> None:
        """Bound the generator count and the number of monomials below precision."""
        generators = len(system.generators)
        if generators > settings['API_MAX_GENERATORS']:
            raise PreconditionViolation(
                f'At most {settings["API_MAX_GENERATORS"]} generators accepted, got {generators}'
            )
        monomials = monomial_count(len(system.vars), precision)
        if monomials > settings['API_MAX_MONOMIALS']:
            raise PreconditionViolation(
                f'{len(system.vars)} variables at precision {precision} span {monomials} monomials; '
                f'at most {settings["API_MAX_MONOMIALS"]} accepted'
            )

    @staticmethod
    def validate_tie_break(value) -> TieBreak:
        try:
            return TieBreak(value or TieBreak.SMALLEST.value)
        except ValueError:
            raise ConfigError(f'tie_break must be "smallest" or "largest", got {value!r}')

    @staticmethod
    def validate_count(value, name: str, default: int, limit: int) -> int:
        if value is None:
            return default
        if isinstance(value, bool) or not isinstance(value, int) or not 0 <= value <= limit:
            raise ConfigError(f'{name} must be an integer in [0, {limit}], got {value!r}')
        return value
