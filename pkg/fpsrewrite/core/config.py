"""Application configuration."""
import os


def _env_int(name: str, default: int) -> int:
    value = os.environ.get(name)
    if value is None or value == '':
        return default
    try:
        return int(value)
    except ValueError:
        raise RuntimeError(f'{name} must be an integer, got {value!r}')


class BaseConfig:
    """Base configuration."""
    # Working precision D used when neither the command line nor the system file sets one
    DEFAULT_PRECISION = _env_int('FPS_PRECISION', 8)

    # Randomized verbs (oracle cross-validation)
    DEFAULT_SEED = _env_int('FPS_SEED', 0)
    ORACLE_TRIALS = _env_int('FPS_ORACLE_TRIALS', 100)

    # Bounded search in abstract rewriting systems
    TARS_MAX_STEPS = _env_int('FPS_TARS_MAX_STEPS', 64)

    # HTTP surface; the oracle matrix has one column per monomial below D
    API_MAX_PRECISION = _env_int('FPS_API_MAX_PRECISION', 16)
    API_MAX_MONOMIALS = _env_int('FPS_API_MAX_MONOMIALS', 2000)
    API_MAX_GENERATORS = _env_int('FPS_API_MAX_GENERATORS', 16)

    # Logging
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'INFO')
    LOG_DIR = os.environ.get('LOG_DIR', 'logs')


class DevelopmentConfig(BaseConfig):
    """Development configuration."""
    DEBUG = True
    TESTING = False


class ProductionConfig(BaseConfig):
    """Production configuration."""
    DEBUG = False
    TESTING = False

    def __init__(self):
        """Validate production configuration."""
        super().__init__()
        if self.DEFAULT_PRECISION < 1:
            raise RuntimeError('FPS_PRECISION must be at least 1')
        if self.API_MAX_PRECISION < self.DEFAULT_PRECISION:
            raise RuntimeError(
                'FPS_API_MAX_PRECISION must not be smaller than FPS_PRECISION '
                f'({self.API_MAX_PRECISION} < {self.DEFAULT_PRECISION})'
            )
        if self.TARS_MAX_STEPS < 1:
            raise RuntimeError('FPS_TARS_MAX_STEPS must be at least 1')


class TestingConfig(BaseConfig):
    TESTING = True
    LOG_LEVEL = 'WARNING'
    DEFAULT_PRECISION = 8
    DEFAULT_SEED = 0


config_by_name = {
    "production": ProductionConfig,
    "development": DevelopmentConfig,
    "testing": TestingConfig,
}


def get_config(config_name=None):
    """Get configuration based on environment."""
    if config_name is None:
        config_name = os.environ.get('FPS_ENV', 'development')
    return config_by_name.get(config_name, DevelopmentConfig)
