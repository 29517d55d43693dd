"""Series text grammar, rendering and JSON serialization."""
import re
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence

from fpsrewrite.core.coefficients import CoefficientField
from fpsrewrite.core.errors import ParseError, UnknownVariable
from .models import (
    EXACT,
    AdicDistance,
    DistanceKind,
    Monomial,
    MonomialOrder,
    Series,
    format_precision,
)

_TOKEN_PATTERNS = [
    ('number', r'\d+(?:/\d+)?'),
    ('name', r'[A-Za-z_][A-Za-z0-9_]*'),
    ('pow', r'\*\*|\^'),
    ('op', r'[+\-*]'),
]
_TOKEN_RE = re.compile('|'.join(f'(?P<{name}>{pattern})' for name, pattern in _TOKEN_PATTERNS))


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    position = 0
    while position < len(text):
        if text[position].isspace():
            position += 1
            continue
        match = _TOKEN_RE.match(text, position)
        if not match:
            raise ParseError(f'Unexpected character {text[position]!r}', position)
        tokens.append(Token(match.lastgroup, match.group(), position))
        position = match.end()
    tokens.append(Token('end', '', len(text)))
    return tokens


class SeriesParser:
    """Recursive-descent parser for signed sums of [rational][*]monomial terms."""

    def __init__(self, names: Sequence[str], field: CoefficientField):
        self.names = tuple(names)
        self.index = {name: i for i, name in enumerate(self.names)}
        self.field = field

    def parse(self, text: str) -> Series:
        self._tokens = tokenize(text)
        self._pos = 0
        coeffs: Dict[Monomial, object] = {}
        sign = 1
        token = self._peek()
        if token.kind == 'end':
            raise ParseError('Empty expression', token.position)
        if token.kind == 'op' and token.text in '+-':
            sign = -1 if token.text == '-' else 1
            self._advance()
        while True:
            scalar, exponents = self._term()
            monomial = Monomial(tuple(exponents))
            value = self.field.from_fraction(sign * scalar.numerator, scalar.denominator)
            coeffs[monomial] = coeffs.get(monomial, self.field.zero) + value
            token = self._peek()
            if token.kind == 'end':
                break
            if token.kind == 'op' and token.text in '+-':
                sign = -1 if token.text == '-' else 1
                self._advance()
                continue
            raise ParseError(f'Expected "+" or "-", got {token.text!r}', token.position)
        return Series(coeffs, len(self.names), self.field, EXACT)

    def _peek(self) -> Token:
        return self._tokens[self._pos]

    def _advance(self) -> Token:
        token = self._tokens[self._pos]
        self._pos += 1
        return token

    def _term(self):
        scalar = Fraction(1)
        exponents = [0] * len(self.names)
        previous = self._factor(exponents)
        if previous is not None:
            scalar *= previous
        while True:
            token = self._peek()
            if token.kind == 'op' and token.text == '*':
                self._advance()
            elif not (token.kind == 'name' and previous is not None):
                # only "2x"-style implicit products are accepted
                break
            factor = self._factor(exponents)
            previous = factor
            if factor is not None:
                scalar *= factor
        return scalar, exponents

    def _factor(self, exponents: List[int]) -> Optional[Fraction]:
        token = self._advance()
        if token.kind == 'number':
            try:
                return Fraction(token.text)
            except ZeroDivisionError:
                raise ParseError('Zero denominator', token.position)
        if token.kind == 'name':
            if token.text not in self.index:
                raise UnknownVariable(f'Unknown variable {token.text!r}', token.position)
            power = 1
            if self._peek().kind == 'pow':
                self._advance()
                exponent = self._advance()
                if exponent.kind != 'number' or '/' in exponent.text:
                    raise ParseError('Expected a non-negative integer exponent', exponent.position)
                power = int(exponent.text)
            exponents[self.index[token.text]] += power
            return None
        raise ParseError(f'Expected a term, got {token.text or "end of input"!r}', token.position)


def parse_series(text: str, names: Sequence[str], field: CoefficientField) -> Series:
    """Parse series text into an exact Series."""
    return SeriesParser(names, field).parse(text)


def render_series(f: Series, names: Sequence[str], order: Optional[MonomialOrder] = None,
                  with_precision: bool = False) -> str:
    """Render terms in leading order (<-ascending); inverse of parse_series for exact input."""
    monomials = list(f.support)
    if order is not None:
        monomials = order.op_descending(monomials)
    else:
        monomials.sort(key=lambda m: (m.degree, tuple(-e for e in m.exponents)))
    pieces = []
    for monomial in monomials:
        value = f.field.to_fraction(f.coeff(monomial))
        negative = value < 0
        magnitude = -value if negative else value
        body = monomial.format(tuple(names))
        if monomial.is_one():
            text = _format_fraction(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f'{_format_fraction(magnitude)}*{body}'
        if not pieces:
            pieces.append(f'-{text}' if negative else text)
        else:
            pieces.append(f'- {text}' if negative else f'+ {text}')
    rendered = ' '.join(pieces) if pieces else '0'
    if with_precision and not f.is_exact:
        rendered += f' (mod (X)^{f.prec})'
    return rendered


def _format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def parse_monomial(text: str, names: Sequence[str]) -> Monomial:
    """Parse a bare monomial such as 'x^2*y' or '1'."""
    series = parse_series(text, names, CoefficientField('Q'))
    if len(series) != 1:
        raise ParseError(f'Expected a single monomial, got {text!r}')
    (monomial, value), = series.terms()
    if value != series.field.one:
        raise ParseError(f'Expected a monic monomial, got {text!r}')
    return monomial


class SeriesSchema:
    """Series serialization schema."""

    @staticmethod
    def serialize(f: Series, names: Sequence[str], order: Optional[MonomialOrder] = None) -> Dict:
        return {
            'text': render_series(f, names, order),
            'precision': None if f.is_exact else int(f.prec),
        }

    @staticmethod
    def deserialize(data: Dict, names: Sequence[str], field: CoefficientField) -> Series:
        series = parse_series(data['text'], names, field)
        precision = data.get('precision')
        return series if precision is None else series.truncate(int(precision))


class DistanceSchema:
    """Adic distance serialization schema."""

    @staticmethod
    def serialize(distance: AdicDistance) -> Dict:
        return {
            'kind': distance.kind.value,
            'exponent': distance.exponent,
            'value': distance.magnitude_text(),
            'text': str(distance),
        }

    @staticmethod
    def deserialize(data: Dict) -> AdicDistance:
        return AdicDistance(DistanceKind(data['kind']), data.get('exponent'))


__all__ = [
    'SeriesParser', 'parse_series', 'render_series', 'parse_monomial',
    'SeriesSchema', 'DistanceSchema', 'tokenize', 'format_precision',
]
