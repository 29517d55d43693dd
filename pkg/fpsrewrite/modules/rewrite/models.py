"""Rewriting systems induced by a generating set and a monomial order."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from fpsrewrite.core.coefficients import CoefficientField
from fpsrewrite.core.errors import DimensionMismatch, PrecisionLoss, ZeroSeries
from fpsrewrite.modules.algebra.models import (
    Monomial,
    MonomialOrder,
    Precision,
    Series,
    default_names,
    format_precision,
)
from fpsrewrite.modules.algebra.service import AlgebraService


class TieBreak(str, enum.Enum):
    """Which generator rewrites a monomial several leading monomials divide."""
    SMALLEST = 'smallest'
    LARGEST = 'largest'


@dataclass(frozen=True)
class Generator:
    """A generator with its cached leading data."""
    series: Series
    lm: Monomial
    lc: object
    rem: Series

    @property
    def normalized_rem(self) -> Series:
        """rem(s)/lc(s): what one unit of lm(s) rewrites into."""
        return self.rem.scale(self.series.field.one / self.lc)


class RewriteSystem:
    """Ordered generators s_1..s_l with a degree-compatible monomial order."""

    def __init__(self, generators: Sequence[Series], order: MonomialOrder,
                 field: Optional[CoefficientField] = None,
                 names: Optional[Sequence[str]] = None,
                 precision: Optional[int] = None):
        order.require_degree_compatible()
        if field is None:
            field = generators[0].field if generators else CoefficientField('Q')
        self._order = order
        self._field = field
        self._names = tuple(names) if names is not None else default_names(order.nvars)
        if len(self._names) != order.nvars:
            raise DimensionMismatch(f'{len(self._names)} names for {order.nvars} variables')
        leads: List[Generator] = []
        for index, series in enumerate(generators):
            if series.nvars != order.nvars:
                raise DimensionMismatch(
                    f'Generator {index + 1} lives over {series.nvars} variables, order over {order.nvars}'
                )
            field.ensure_same(series.field)
            if series.is_zero():
                raise ZeroSeries(f'Generator {index + 1} has empty support')
            if precision is not None and series.prec < precision:
                raise PrecisionLoss(
                    f'Generator {index + 1} known modulo (X)^{format_precision(series.prec)}, '
                    f'system requires {precision}'
                )
            lm, lc, rem = AlgebraService.leading_data(series, order)
            leads.append(Generator(series, lm, lc, rem))
        self._generators: Tuple[Generator, ...] = tuple(leads)
        self._precision = precision

    @property
    def order(self) -> MonomialOrder:
        return self._order

    @property
    def field(self) -> CoefficientField:
        return self._field

    @property
    def names(self) -> Tuple[str, ...]:
        return self._names

    @property
    def nvars(self) -> int:
        return self._order.nvars

    @property
    def precision(self) -> Optional[int]:
        return self._precision

    @property
    def generators(self) -> Tuple[Series, ...]:
        return tuple(g.series for g in self._generators)

    def __len__(self) -> int:
        return len(self._generators)

    def lead(self, index: int) -> Generator:
        return self._generators[index]

    def divisor(self, monomial: Monomial,
                tie_break: TieBreak = TieBreak.SMALLEST) -> Optional[Tuple[int, Monomial]]:
        """Generator index and quotient for a monomial, per the tie-break rule."""
        indices = range(len(self._generators))
        if TieBreak(tie_break) is TieBreak.LARGEST:
            indices = reversed(indices)
        for index in indices:
            quotient = self._generators[index].lm.divides(monomial)
            if quotient is not None:
                return index, quotient
        return None

    def require_precision(self, precision: int, *inputs: Series) -> None:
        """Raise PrecisionLoss unless inputs and generators are known modulo (X)^precision."""
        if precision < 0:
            raise PrecisionLoss(f'Negative precision {precision}')
        for series in inputs:
            if series.prec < precision:
                raise PrecisionLoss(
                    f'Input known modulo (X)^{format_precision(series.prec)}, requested {precision}'
                )
        for index, generator in enumerate(self._generators):
            if generator.series.prec < precision:
                raise PrecisionLoss(
                    f'Generator {index + 1} known modulo (X)^{format_precision(generator.series.prec)}, '
                    f'requested {precision}'
                )

    def zero(self, prec: Precision = None) -> Series:
        if prec is None:
            return Series.zero(self.nvars, self._field)
        return Series.zero(self.nvars, self._field, prec)

    def __repr__(self) -> str:
        return (f'RewriteSystem({len(self._generators)} generators, order={self._order.kind.value}, '
                f'field={self._field.spec})')


@dataclass(frozen=True)
class RewriteStep:
    """lambda*M + S -> (lambda/lc(s_i))*m*rem(s_i) + S with M = m*lm(s_i)."""
    monomial: Monomial
    generator: int
    quotient: Monomial
    coeff: object


@dataclass(frozen=True)
class ReductionResult:
    """Normal form modulo (X)^precision, step list and cofactors."""
    source: Series
    normal_form: Series
    steps: Tuple[RewriteStep, ...]
    cofactors: Tuple[Series, ...]
    precision: int

    @property
    def eliminated(self) -> Tuple[Monomial, ...]:
        return tuple(step.monomial for step in self.steps)
