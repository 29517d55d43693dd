"""Exact coefficient fields: the rationals and prime fields."""
from fractions import Fraction
from typing import Union

from sympy import isprime
from sympy.polys.domains import GF, QQ

from fpsrewrite.core.errors import ConfigError, FieldMismatch, ParseError

Scalar = Union[int, Fraction, str]


class CoefficientField:
    """Immutable wrapper around a sympy field domain (QQ or GF(p))."""

    def __init__(self, spec: str = 'Q'):
        self._spec, self._characteristic = self._parse_spec(spec)
        if self._characteristic == 0:
            self._domain = QQ
        else:
            self._domain = GF(self._characteristic)

    @staticmethod
    def _parse_spec(spec: str):
        cleaned = str(spec).strip()
        if cleaned in ('Q', 'QQ'):
            return 'Q', 0
        if cleaned.startswith('Fp:') or cleaned.startswith('GF:'):
            try:
                p = int(cleaned.split(':', 1)[1])
            except ValueError:
                raise ConfigError(f'Invalid field specification: {spec!r}')
            if not isprime(p):
                raise ConfigError(f'Field characteristic must be prime, got {p}')
            return f'Fp:{p}', p
        raise ConfigError(f'Unknown coefficient field {spec!r} (expected "Q" or "Fp:<p>")')

    @property
    def spec(self) -> str:
        return self._spec

    @property
    def characteristic(self) -> int:
        return self._characteristic

    @property
    def domain(self):
        return self._domain

    @property
    def zero(self):
        return self._domain.zero

    @property
    def one(self):
        return self._domain.one

    def __eq__(self, other) -> bool:
        return isinstance(other, CoefficientField) and other._spec == self._spec

    def __hash__(self) -> int:
        return hash(self._spec)

    def __repr__(self) -> str:
        return f'CoefficientField({self._spec!r})'

    def __str__(self) -> str:
        return 'QQ' if self._characteristic == 0 else f'GF({self._characteristic})'

    def ensure_same(self, other: 'CoefficientField') -> None:
        if self != other:
            raise FieldMismatch(f'Cannot combine coefficients over {self} and {other}')

    def is_zero(self, value) -> bool:
        return value == self._domain.zero

    def from_fraction(self, numerator: int, denominator: int = 1):
        """Build the field element numerator/denominator."""
        if denominator == 0:
            raise ParseError('Zero denominator')
        if self._characteristic == 0:
            return self._domain(int(numerator), int(denominator))
        if denominator % self._characteristic == 0:
            raise ParseError(f'Denominator {denominator} is not invertible in {self}')
        return self._domain(int(numerator)) / self._domain(int(denominator))

    def convert(self, value):
        """Convert an int, Fraction, 'a/b' string or field element."""
        if isinstance(value, bool):
            raise TypeError('Booleans are not coefficients')
        if isinstance(value, int):
            return self.from_fraction(value)
        if isinstance(value, Fraction):
            return self.from_fraction(value.numerator, value.denominator)
        if isinstance(value, str):
            try:
                parsed = Fraction(value.strip())
            except (ValueError, ZeroDivisionError):
                raise ParseError(f'Invalid coefficient {value!r}')
            return self.from_fraction(parsed.numerator, parsed.denominator)
        return self._domain.convert(value)

    def to_fraction(self, value) -> Fraction:
        """Canonical rational (or canonical residue in [0, p)) of an element."""
        if self._characteristic == 0:
            return Fraction(int(self._domain.numer(value)), int(self._domain.denom(value)))
        return Fraction(int(value) % self._characteristic)

    def format(self, value) -> str:
        """Format an element for display and JSON."""
        fraction = self.to_fraction(value)
        if fraction.denominator == 1:
            return str(fraction.numerator)
        return f'{fraction.numerator}/{fraction.denominator}'

    def parse(self, text: str):
        """Parse a coefficient from its formatted text."""
        return self.convert(text)


RATIONALS = CoefficientField('Q')


def parse_field(spec: str) -> CoefficientField:
    """Parse a field specification such as 'Q' or 'Fp:7'."""
    if not spec:
        return RATIONALS
    return CoefficientField(spec)
