"""Rewriting on truncated formal power series: reduction, cofactors, confluence checks."""
import logging
import os
from logging.handlers import RotatingFileHandler
from typing import Optional

from flask import Flask

# Load environment variables from .env file (optional)
try:
    from dotenv import load_dotenv
    load_dotenv()
except ImportError:
    pass

from fpsrewrite.core.config import get_config

__version__ = '0.3.0'


def _configure_file_logging(app: Flask) -> None:
    """Rotating log files under LOG_DIR; console only when the filesystem refuses."""
    logs_dir = app.config.get('LOG_DIR', 'logs')
    try:
        os.makedirs(logs_dir, exist_ok=True)
        formatter = logging.Formatter(
            '%(asctime)s %(levelname)s: %(message)s [in %(pathname)s:%(lineno)d]'
        )
        file_handler = RotatingFileHandler(
            os.path.join(logs_dir, 'fpsrewrite.log'),
            maxBytes=10240000,  # 10MB
            backupCount=10
        )
        file_handler.setFormatter(formatter)
        file_handler.setLevel(logging.INFO)
        app.logger.addHandler(file_handler)

        error_handler = RotatingFileHandler(
            os.path.join(logs_dir, 'errors.log'),
            maxBytes=10240000,
            backupCount=5
        )
        error_handler.setFormatter(formatter)
        error_handler.setLevel(logging.ERROR)
        app.logger.addHandler(error_handler)

        log_level = app.config.get('LOG_LEVEL', 'INFO')
        app.logger.setLevel(getattr(logging, log_level.upper(), logging.INFO))
    except (PermissionError, OSError) as e:
        # read-only filesystem: console logging only
        app.logger.warning(f'File logging disabled due to filesystem restrictions: {e}')
        app.logger.setLevel(logging.INFO)


def create_app(config_name: Optional[str] = None) -> Flask:
    """Application factory pattern."""
    if config_name is None:
        config_name = os.getenv('FPS_ENV', 'production')

    app = Flask(__name__)
    app.config.from_object(get_config(config_name)())

    if not app.debug and not app.testing:
        _configure_file_logging(app)
        app.logger.info(f'fpsrewrite {__version__} startup - Config: {config_name}')

    from fpsrewrite.api.v1 import api_v1_bp
    app.register_blueprint(api_v1_bp)

    @app.route('/healthz')
    def health_check():
        """Health check endpoint for monitoring."""
        return {'status': 'ok', 'version': __version__}, 200

    from fpsrewrite.core.errors import register_error_handlers
    register_error_handlers(app)

    from fpsrewrite.core.cli import register_cli_commands
    register_cli_commands(app)

    return app
