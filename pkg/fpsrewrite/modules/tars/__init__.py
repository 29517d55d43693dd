"""Abstract topological rewriting systems."""
from .models import (
    CYCLIC,
    INF,
    NBAR,
    SYSTEMS,
    AbstractSystem,
    CyclicState,
    NbarState,
    RefutationVerdict,
    VerdictStatus,
    parse_epsilon,
)
from .schemas import RefutationVerdictSchema
from .service import TarsService
