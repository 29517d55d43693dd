"""Rewriting relation induced by a generating set and a monomial order."""
from .models import ReductionResult, RewriteStep, RewriteSystem, TieBreak
from .schemas import SystemConfig
from .service import RewriteService
