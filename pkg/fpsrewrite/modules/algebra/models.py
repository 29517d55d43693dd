"""Monomials, monomial orders and truncated formal power series."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from sympy.polys.monomials import monomial_div, monomial_lcm, monomial_mul
from sympy.polys.orderings import grevlex, grlex, lex

from fpsrewrite.core.coefficients import RATIONALS, CoefficientField
from fpsrewrite.core.errors import DimensionMismatch, NonCompatibleOrder

# Adic precision; EXACT marks polynomial data known in every degree.
EXACT = math.inf
Precision = Union[int, float]


def format_precision(prec: Precision) -> str:
    return 'inf' if prec == EXACT else str(int(prec))


@dataclass(frozen=True)
class Monomial:
    """Exponent vector over a fixed number of variables."""
    exponents: Tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError(f'Negative exponent in {self.exponents}')

    @classmethod
    def one(cls, nvars: int) -> Monomial:
        return cls((0,) * nvars)

    @classmethod
    def variable(cls, index: int, nvars: int, power: int = 1) -> Monomial:
        exponents = [0] * nvars
        exponents[index] = power
        return cls(tuple(exponents))

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def is_one(self) -> bool:
        return not any(self.exponents)

    def _check(self, other: Monomial) -> None:
        if len(other.exponents) != len(self.exponents):
            raise DimensionMismatch(
                f'Monomials over {len(self.exponents)} and {len(other.exponents)} variables'
            )

    def __mul__(self, other: Monomial) -> Monomial:
        if not isinstance(other, Monomial):
            return NotImplemented
        self._check(other)
        return Monomial(monomial_mul(self.exponents, other.exponents))

    def divides(self, other: Monomial) -> Optional[Monomial]:
        """Quotient q with self * q == other, or None."""
        self._check(other)
        quotient = monomial_div(other.exponents, self.exponents)
        return None if quotient is None else Monomial(tuple(quotient))

    def lcm(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(monomial_lcm(self.exponents, other.exponents))

    def __str__(self) -> str:
        return self.format()

    def format(self, names: Optional[Tuple[str, ...]] = None) -> str:
        if self.is_one():
            return '1'
        names = names or default_names(self.nvars)
        factors = []
        for name, exp in zip(names, self.exponents):
            if exp == 1:
                factors.append(name)
            elif exp > 1:
                factors.append(f'{name}^{exp}')
        return '*'.join(factors)


def default_names(nvars: int) -> Tuple[str, ...]:
    if nvars <= 3:
        return ('x', 'y', 'z')[:nvars]
    return tuple(f'x{i + 1}' for i in range(nvars))


def monomial_count(nvars: int, precision: int) -> int:
    """Number of monomials of degree < precision in nvars variables."""
    if precision <= 0:
        return 0
    return comb(nvars + precision - 1, nvars)


def monomials_below(nvars: int, precision: int) -> Iterator[Monomial]:
    """All monomials of degree < precision, by increasing degree."""
    for degree in range(precision):
        for combo in combinations_with_replacement(range(nvars), degree):
            exponents = [0] * nvars
            for index in combo:
                exponents[index] += 1
            yield Monomial(tuple(exponents))


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class OrderKind(str, enum.Enum):
    DEGLEX = 'deglex'
    DEGREVLEX = 'degrevlex'
    LEX = 'lex'


_SYMPY_ORDERS = {
    OrderKind.DEGLEX: grlex,
    OrderKind.DEGREVLEX: grevlex,
    OrderKind.LEX: lex,
}


@dataclass(frozen=True)
class MonomialOrder:
    """Named global monomial order with a variable priority.

    ``priority`` lists variable indices from highest to lowest; the
    leading monomial of a series is the <-minimum of its support.
    """
    kind: OrderKind
    priority: Tuple[int, ...]

    @classmethod
    def create(cls, kind: Union[str, OrderKind], nvars: int,
               priority: Optional[Iterable[int]] = None) -> MonomialOrder:
        try:
            kind = OrderKind(kind)
        except ValueError:
            raise NonCompatibleOrder(f'Unknown monomial order {kind!r}')
        priority = tuple(range(nvars)) if priority is None else tuple(priority)
        if sorted(priority) != list(range(nvars)):
            raise DimensionMismatch(f'Priority {priority} is not a permutation of {nvars} variables')
        return cls(kind, priority)

    @property
    def degree_compatible(self) -> bool:
        return self.kind is not OrderKind.LEX

    @property
    def nvars(self) -> int:
        return len(self.priority)

    def require_degree_compatible(self) -> None:
        if not self.degree_compatible:
            raise NonCompatibleOrder(f'{self.kind.value} is not compatible with the degree')

    def key(self, monomial: Monomial):
        """Sort key increasing along <."""
        if monomial.nvars != self.nvars:
            raise DimensionMismatch(f'Order over {self.nvars} variables, monomial over {monomial.nvars}')
        permuted = tuple(monomial.exponents[i] for i in self.priority)
        return _SYMPY_ORDERS[self.kind](permuted)

    def compare(self, a: Monomial, b: Monomial) -> Ordering:
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return Ordering.LESS
        if ka > kb:
            return Ordering.GREATER
        return Ordering.EQUAL

    def op_max(self, monomials: Iterable[Monomial]) -> Monomial:
        """Greatest monomial for the opposite order."""
        return min(monomials, key=self.key)

    def op_descending(self, monomials: Iterable[Monomial]):
        """Monomials sorted from <_op-greatest to <_op-smallest."""
        return sorted(monomials, key=self.key)


@dataclass(frozen=True)
class Valuation:
    """Resolved valuation, +inf for the exact zero series, or a lower bound."""
    value: Optional[int] = None
    at_least: Optional[int] = None

    @classmethod
    def infinite(cls) -> Valuation:
        return cls(None, None)

    @property
    def is_resolved(self) -> bool:
        return self.value is not None

    @property
    def is_infinite(self) -> bool:
        return self.value is None and self.at_least is None

    @property
    def floor(self) -> Precision:
        """Largest number known to be <= the valuation."""
        if self.value is not None:
            return self.value
        if self.at_least is not None:
            return self.at_least
        return EXACT

    def __str__(self) -> str:
        if self.value is not None:
            return str(self.value)
        if self.at_least is not None:
            return f'>={self.at_least}'
        return 'inf'


class DistanceKind(str, enum.Enum):
    EXACT = 'exact'
    ZERO = 'zero'
    AT_MOST = 'at_most'


# Distances 2^-v with v above this render as '2^-v' instead of a decimal fraction.
FRACTION_TEXT_MAX_EXPONENT = 64


@dataclass(frozen=True)
class AdicDistance:
    """Value of the adic metric 2^-val(f-g), possibly only bounded."""
    kind: DistanceKind
    exponent: Optional[int] = None

    @property
    def value(self) -> Fraction:
        if self.kind is DistanceKind.ZERO:
            return Fraction(0)
        return Fraction(1, 2 ** self.exponent)

    @property
    def _rank(self) -> Precision:
        # Larger exponent, smaller distance
        return EXACT if self.kind is DistanceKind.ZERO else self.exponent

    def __lt__(self, other: AdicDistance) -> bool:
        return self._rank > other._rank

    def __le__(self, other: AdicDistance) -> bool:
        return self._rank >= other._rank

    def magnitude_text(self) -> str:
        """'1/2^v' as a fraction for small v, '2^-v' beyond."""
        if self.kind is DistanceKind.ZERO:
            return '0'
        if self.exponent <= FRACTION_TEXT_MAX_EXPONENT:
            return str(self.value)
        return f'2^-{self.exponent}'

    def __str__(self) -> str:
        text = self.magnitude_text()
        return f'<= {text}' if self.kind is DistanceKind.AT_MOST else text


class Series:
    """Formal power series known modulo (X)^prec.

    Stored coefficients are non-zero and every stored monomial has degree
    below ``prec``. Instances are treated as immutable.
    """

    __slots__ = ('_field', '_nvars', '_coeffs', '_prec', '_hash')

    def __init__(self, coeffs: Mapping[Monomial, object], nvars: int,
                 field: CoefficientField = RATIONALS, prec: Precision = EXACT):
        if prec != EXACT and (int(prec) != prec or prec < 0):
            raise ValueError(f'Precision must be a natural number or EXACT, got {prec}')
        self._field = field
        self._nvars = nvars
        self._prec = prec if prec == EXACT else int(prec)
        cleaned: Dict[Monomial, object] = {}
        for monomial, value in coeffs.items():
            if monomial.nvars != nvars:
                raise DimensionMismatch(f'Monomial {monomial.exponents} in a series over {nvars} variables')
            if monomial.degree >= self._prec or field.is_zero(value):
                continue
            cleaned[monomial] = value
        self._coeffs = cleaned
        self._hash = None

    # Constructors

    @classmethod
    def zero(cls, nvars: int, field: CoefficientField = RATIONALS, prec: Precision = EXACT) -> Series:
        return cls({}, nvars, field, prec)

    @classmethod
    def monomial(cls, monomial: Monomial, coeff=None, field: CoefficientField = RATIONALS,
                 prec: Precision = EXACT) -> Series:
        value = field.one if coeff is None else field.convert(coeff)
        return cls({monomial: value}, monomial.nvars, field, prec)

    @classmethod
    def constant(cls, value, nvars: int, field: CoefficientField = RATIONALS) -> Series:
        return cls.monomial(Monomial.one(nvars), value, field)

    @classmethod
    def one(cls, nvars: int, field: CoefficientField = RATIONALS) -> Series:
        return cls.constant(field.one, nvars, field)

    # Accessors

    @property
    def field(self) -> CoefficientField:
        return self._field

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def prec(self) -> Precision:
        return self._prec

    @property
    def is_exact(self) -> bool:
        return self._prec == EXACT

    @property
    def support(self) -> frozenset:
        return frozenset(self._coeffs)

    def terms(self):
        return self._coeffs.items()

    def coeff(self, monomial: Monomial):
        return self._coeffs.get(monomial, self._field.zero)

    def __contains__(self, monomial: Monomial) -> bool:
        return monomial in self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def is_zero(self) -> bool:
        """True when no term below the precision survives."""
        return not self._coeffs

    def valuation(self) -> Valuation:
        if self._coeffs:
            return Valuation(value=min(m.degree for m in self._coeffs))
        if self._prec == EXACT:
            return Valuation.infinite()
        return Valuation(at_least=self._prec)

    # Arithmetic

    def _check(self, other: Series) -> None:
        if other._nvars != self._nvars:
            raise DimensionMismatch(f'Series over {self._nvars} and {other._nvars} variables')
        self._field.ensure_same(other._field)

    def with_prec(self, prec: Precision) -> Series:
        return Series(self._coeffs, self._nvars, self._field, prec)

    def truncate(self, prec: Precision) -> Series:
        """Reduce modulo (X)^prec; never raises the precision."""
        return self.with_prec(min(self._prec, prec))

    def add(self, other: Series) -> Series:
        self._check(other)
        coeffs = dict(self._coeffs)
        for monomial, value in other._coeffs.items():
            coeffs[monomial] = coeffs.get(monomial, self._field.zero) + value
        return Series(coeffs, self._nvars, self._field, min(self._prec, other._prec))

    def scale(self, factor) -> Series:
        factor = self._field.convert(factor)
        if self._field.is_zero(factor):
            return Series.zero(self._nvars, self._field)
        coeffs = {m: factor * c for m, c in self._coeffs.items()}
        return Series(coeffs, self._nvars, self._field, self._prec)

    def neg(self) -> Series:
        return self.scale(-self._field.one)

    def sub(self, other: Series) -> Series:
        return self.add(other.neg())

    def monomial_mul(self, monomial: Monomial, factor=None) -> Series:
        """Multiply by factor*monomial; the precision shifts by deg(monomial)."""
        if monomial.nvars != self._nvars:
            raise DimensionMismatch(f'Monomial over {monomial.nvars} variables')
        if factor is not None:
            factor = self._field.convert(factor)
            if self._field.is_zero(factor):
                return Series.zero(self._nvars, self._field)
        coeffs = {}
        for m, c in self._coeffs.items():
            coeffs[m * monomial] = c if factor is None else factor * c
        return Series(coeffs, self._nvars, self._field, self._prec + monomial.degree)

    def mul(self, other: Series) -> Series:
        self._check(other)
        prec = min(self._prec + other.valuation().floor, other._prec + self.valuation().floor)
        zero = self._field.zero
        coeffs: Dict[Monomial, object] = {}
        for ma, ca in self._coeffs.items():
            for mb, cb in other._coeffs.items():
                product = ma * mb
                if product.degree >= prec:
                    continue
                coeffs[product] = coeffs.get(product, zero) + ca * cb
        return Series(coeffs, self._nvars, self._field, prec)

    __add__ = add
    __sub__ = sub
    __mul__ = mul
    __neg__ = neg

    # Comparison

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return (self._nvars == other._nvars and self._field == other._field
                and self._prec == other._prec and self._coeffs == other._coeffs)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._nvars, self._field, self._prec, frozenset(self._coeffs.items())))
        return self._hash

    def agrees_with(self, other: Series, prec: Precision) -> bool:
        """Coefficientwise equality for all degrees below prec."""
        return self.truncate(prec).with_prec(EXACT) == other.truncate(prec).with_prec(EXACT)

    def __repr__(self) -> str:
        terms = ', '.join(f'{m.exponents}: {self._field.format(c)}' for m, c in self._coeffs.items())
        return f'Series({{{terms}}}, prec={format_precision(self._prec)}, field={self._field.spec})'
