"""Linear-algebra membership oracle."""
from .models import (
    CrossValidationReport,
    Disagreement,
    DisagreementKind,
    OracleSolution,
    TruncationBasisMatrix,
)
from .schemas import CrossValidationReportSchema, OracleSolutionSchema
from .service import OracleService
