"""Core algebra: monomials, orders, truncated series and the adic metric."""
from .models import (
    EXACT,
    AdicDistance,
    DistanceKind,
    Monomial,
    MonomialOrder,
    Ordering,
    OrderKind,
    Series,
    Valuation,
    monomial_count,
    monomials_below,
)
from .service import AlgebraService, LeadingData
from .schemas import parse_monomial, parse_series, render_series
