"""Core algebra service layer."""
import logging
from typing import NamedTuple, Optional

from fpsrewrite.core.errors import DimensionMismatch, NonCompatibleOrder, ZeroSeries
from .models import (
    AdicDistance,
    DistanceKind,
    Monomial,
    MonomialOrder,
    Ordering,
    Series,
    Valuation,
)

logger = logging.getLogger(__name__)


class LeadingData(NamedTuple):
    """Leading monomial, leading coefficient and remainder lc*lm - f."""
    lm: Monomial
    lc: object
    rem: Series


class AlgebraService:
    """Monomial and series operations under a local (lowest-term-leads) convention."""

    @staticmethod
    def compare(a: Monomial, b: Monomial, order: MonomialOrder) -> Ordering:
        """Compare two monomials for <."""
        if a.nvars != b.nvars:
            raise DimensionMismatch(f'Cannot compare monomials over {a.nvars} and {b.nvars} variables')
        return order.compare(a, b)

    @staticmethod
    def divides(a: Monomial, b: Monomial) -> Optional[Monomial]:
        """Return q with a*q == b when a divides b."""
        return a.divides(b)

    @staticmethod
    def series_add(f: Series, g: Series) -> Series:
        return f.add(g)

    @staticmethod
    def series_scale(f: Series, factor) -> Series:
        return f.scale(factor)

    @staticmethod
    def series_mul(f: Series, g: Series) -> Series:
        return f.mul(g)

    @staticmethod
    def valuation(f: Series) -> Valuation:
        return f.valuation()

    @staticmethod
    def delta(f: Series, g: Series) -> AdicDistance:
        """Adic distance 2^-val(f-g), bounded by the joint precision when unresolved."""
        difference = f.sub(g)
        valuation = difference.valuation()
        if valuation.is_resolved:
            return AdicDistance(DistanceKind.EXACT, valuation.value)
        if valuation.is_infinite:
            return AdicDistance(DistanceKind.ZERO)
        return AdicDistance(DistanceKind.AT_MOST, valuation.at_least)

    @staticmethod
    def leading_data(f: Series, order: MonomialOrder) -> LeadingData:
        """Leading monomial (<_op-maximum of the support), coefficient and remainder."""
        if f.is_zero():
            raise ZeroSeries('Series has empty support; branch on its valuation first')
        if not order.degree_compatible and not f.is_exact:
            raise NonCompatibleOrder(
                f'Leading monomial of a truncated series needs a degree-compatible order, got {order.kind.value}'
            )
        lm = order.op_max(f.support)
        lc = f.coeff(lm)
        rem = Series.monomial(lm, lc, f.field, f.prec).sub(f)
        return LeadingData(lm, lc, rem)

    @staticmethod
    def leading_monomial(f: Series, order: MonomialOrder) -> Monomial:
        return AlgebraService.leading_data(f, order).lm
