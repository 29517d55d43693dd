"""Error hierarchy and global error handlers."""
import logging

logger = logging.getLogger(__name__)


class FPSError(Exception):
    """Base class for every error raised by the algebra modules."""

    @property
    def code(self) -> str:
        return self.__class__.__name__

    def to_dict(self) -> dict:
        return {'code': self.code, 'message': str(self)}


class DimensionMismatch(FPSError):
    """Operands live over different variable counts."""


class FieldMismatch(FPSError):
    """Operands use different coefficient fields."""


class ZeroSeries(FPSError):
    """Operation needs a non-empty support."""


class InvalidStep(FPSError):
    """Rewrite step does not apply to the series."""


class PrecisionLoss(FPSError):
    """Some input is known to a lower precision than requested."""


class NonCompatibleOrder(FPSError):
    """Monomial order is not compatible with the degree."""


class IrreducibleLeadingMonomial(FPSError):
    """No generator leading monomial divides the leading monomial."""

    def __init__(self, monomial, message: str = None):
        self.monomial = monomial
        super().__init__(message or f'leading monomial {monomial} is irreducible')


class ParseError(FPSError):
    """Malformed series or state text."""

    def __init__(self, message: str, position: int = None):
        self.position = position
        if position is not None:
            message = f'{message} at position {position}'
        super().__init__(message)

    def to_dict(self) -> dict:
        data = super().to_dict()
        data['position'] = self.position
        return data


class UnknownVariable(ParseError):
    """Variable name not declared by the system."""


class DomainViolation(FPSError):
    """State outside the domain of an abstract rewriting system."""


class PreconditionViolation(FPSError):
    """Caller broke an operation precondition."""


class ConfigError(FPSError):
    """Invalid system file or configuration value."""


def register_error_handlers(app):
    """Register JSON error handlers for the application."""
    from flask import jsonify
    from fpsrewrite.api.v1.schemas import APIResponse

    @app.errorhandler(FPSError)
    def algebra_error(error):
        logger.info(f'Request rejected: {error.code}: {error}')
        return jsonify(APIResponse.error(str(error), code=error.code, details=error.to_dict())), 400

    @app.errorhandler(404)
    def not_found_error(error):
        return jsonify(APIResponse.error('Not found', code='NotFound')), 404

    @app.errorhandler(405)
    def method_not_allowed_error(error):
        return jsonify(APIResponse.error('Method not allowed', code='MethodNotAllowed')), 405

    @app.errorhandler(500)
    def internal_error(error):
        logger.error(f'Server Error: {error}')
        return jsonify(APIResponse.error('Internal server error', code='InternalError')), 500
