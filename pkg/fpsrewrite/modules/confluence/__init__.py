"""Joinability and the truncated standard-basis check."""
from .models import Diverged, Joined, JoinResult, PairReport, SBReport
from .schemas import JoinResultSchema, SBReportSchema
from .service import ConfluenceService
