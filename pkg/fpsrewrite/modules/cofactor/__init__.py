"""Cofactor extraction and ideal membership modulo (X)^D."""
from .models import CofactorTrace, EliminationRecord, InIdealModD, MembershipVerdict, NotInIdealModD
from .schemas import CofactorTraceSchema, MembershipVerdictSchema
from .service import CofactorService
