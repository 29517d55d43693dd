"""Seeded generators for sampled property checks."""
import random
from fractions import Fraction

import pytest

from fpsrewrite.modules.algebra.models import Monomial
from fpsrewrite.modules.rewrite.schemas import SystemConfig

NAMES = ('x', 'y', 'z')
COEFFICIENTS = ('1', '2', '3', '1/2')
UNITS = ('1', '2', '3')

# {c - b, c - a, b - b^2, a - a^2} with a > b > c
IDEMPOTENT_TEMPLATE = (
    ((1, 'c'), (-1, 'b')),
    ((1, 'c'), (-1, 'a')),
    ((1, 'b'), (-1, 'b^2')),
    ((1, 'a'), (-1, 'a^2')),
)


def _random_monomial(rng, nvars, low, high):
    exponents = [0] * nvars
    for _ in range(rng.randint(low, high)):
        exponents[rng.randrange(nvars)] += 1
    return Monomial(tuple(exponents))


def _random_terms(rng, names, low, high, count, factor=None):
    pieces = []
    for _ in range(count):
        monomial = _random_monomial(rng, len(names), low, high)
        if factor is not None:
            monomial = factor * monomial
        sign = rng.choice(('+', '-'))
        pieces.append(f'{sign} {rng.choice(COEFFICIENTS)}*{monomial.format(names)}')
    return ' '.join(pieces)


def _signed_term(coeff, body):
    sign = '-' if coeff < 0 else '+'
    return f'{sign} {abs(coeff)}*{body}'


def _pick_names(rng):
    nvars = rng.choice((2, 3))
    return NAMES[:nvars]


def variable_basis(rng, field='Q'):
    """{x_i - p_i} with p_i of order >= 2: distinct variables lead."""
    names = _pick_names(rng)
    chosen = rng.sample(range(len(names)), rng.randint(1, len(names)))
    generators = [f'{names[i]} {_random_terms(rng, names, 2, 3, rng.randint(1, 3))}' for i in chosen]
    return SystemConfig.from_dict({
        'vars': list(names),
        'order': rng.choice(('deglex', 'degrevlex')),
        'field': field,
        'generators': generators,
    })


def monomial_unit_basis(rng, field='Q'):
    """{m_i * u_i} with u_i a unit: the ideal is (m_1, ..., m_k).

    Leading monomials have degree up to 3 and often share variables.
    """
    names = _pick_names(rng)
    generators = []
    for _ in range(rng.randint(1, 4)):
        monomial = _random_monomial(rng, len(names), 1, 3)
        unit_tail = _random_terms(rng, names, 1, 2, rng.randint(1, 2), factor=monomial)
        generators.append(f'{rng.choice(UNITS)}*{monomial.format(names)} {unit_tail}')
    return SystemConfig.from_dict({
        'vars': list(names),
        'order': rng.choice(('deglex', 'degrevlex')),
        'field': field,
        'generators': generators,
    })


def idempotent_variant(rng, field='Q'):
    """The idempotent system with renamed variables, scaled and shuffled generators."""
    renamed = list(NAMES)
    rng.shuffle(renamed)
    names = dict(zip('abc', renamed))
    generators = []
    for template in IDEMPOTENT_TEMPLATE:
        scale = Fraction(rng.choice(COEFFICIENTS)) * rng.choice((1, -1))
        pieces = []
        for coeff, body in template:
            variable, _, power = body.partition('^')
            text = names[variable] + (f'^{power}' if power else '')
            pieces.append(_signed_term(coeff * scale, text))
        generators.append('0 ' + ' '.join(pieces))
    rng.shuffle(generators)
    return SystemConfig.from_dict({
        'vars': list(NAMES),
        'order': 'deglex',
        'field': field,
        'generators': generators,
        'priority': [names['a'], names['b'], names['c']],
    })


FAMILIES = {
    'variable': variable_basis,
    'monomial_unit': monomial_unit_basis,
    'idempotent_variant': idempotent_variant,
}


@pytest.fixture
def rng():
    return random.Random(20240521)


@pytest.fixture(scope='session')
def families():
    """Standard-basis factories by family name."""
    return FAMILIES


@pytest.fixture
def mixed_standard_basis():
    """Factory drawing from every family of generated standard bases."""
    def build(rng, field='Q'):
        return rng.choice(list(FAMILIES.values()))(rng, field)
    return build


@pytest.fixture
def random_series_text():
    """Factory for random exact series text of order >= low."""
    def build(rng, names, low=0, high=4, count=4):
        return f'0 {_random_terms(rng, names, low, high, rng.randint(1, count))}'
    return build
