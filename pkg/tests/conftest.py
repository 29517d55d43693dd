"""Shared fixtures: the bundled systems, parsers and the Flask test app."""
import pytest

from fpsrewrite import create_app
from fpsrewrite.core.coefficients import CoefficientField
from fpsrewrite.modules.rewrite.schemas import SystemConfig

IDEMPOTENT = {
    'vars': ['x', 'y', 'z'],
    'order': 'deglex',
    'field': 'Q',
    'generators': ['z - y', 'z - x', 'y - y^2', 'x - x^2'],
    'precision': 8,
}

ADVERSARIAL = {
    'vars': ['x', 'y'],
    'order': 'deglex',
    'field': 'Q',
    'generators': ['x^2 - y^5', 'x*y'],
    'precision': 8,
}


@pytest.fixture
def idempotent_config():
    """System {z - y, z - x, y - y^2, x - x^2} under deglex with x > y > z."""
    return SystemConfig.from_dict(IDEMPOTENT)


@pytest.fixture
def idempotent(idempotent_config):
    return idempotent_config.build()


@pytest.fixture
def adversarial_config():
    """{x^2 - y^5, xy}: not a standard basis (its S-series is -y^6)."""
    return SystemConfig.from_dict(ADVERSARIAL)


@pytest.fixture
def adversarial(adversarial_config):
    return adversarial_config.build()


@pytest.fixture
def parse(idempotent_config):
    """Parse series text over the idempotent system's variables."""
    return idempotent_config.parse


@pytest.fixture
def rationals():
    return CoefficientField('Q')


@pytest.fixture
def gf7():
    return CoefficientField('Fp:7')


@pytest.fixture
def app():
    """Flask application in testing configuration."""
    return create_app('testing')


@pytest.fixture
def client(app):
    return app.test_client()
