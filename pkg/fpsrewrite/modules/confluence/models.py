"""Join traces and truncated standard-basis reports."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from fpsrewrite.modules.algebra.models import AdicDistance, Monomial, Series
from fpsrewrite.modules.rewrite.models import RewriteStep

SEMI_CHECK_NOTE = (
    'Semi-check: a pass at precision D shows every S-series reduces to 0 modulo (X)^D; '
    'it does not certify the standard-basis property at infinite precision.'
)


@dataclass(frozen=True)
class Joined:
    """Both sides reach `common` modulo (X)^D by the recorded steps."""
    common: Series
    g_steps: Tuple[RewriteStep, ...]
    h_steps: Tuple[RewriteStep, ...]
    eliminated: Tuple[Monomial, ...]
    distances: Tuple[AdicDistance, ...]
    certificate: Tuple[Series, ...]
    precision: int

    @property
    def joined(self) -> bool:
        return True


@dataclass(frozen=True)
class Diverged:
    """lm(g_k - h_k) is irreducible, so g and h cannot be joined modulo (X)^D."""
    irreducible: Monomial
    g_reduct: Series
    h_reduct: Series
    g_steps: Tuple[RewriteStep, ...]
    h_steps: Tuple[RewriteStep, ...]
    eliminated: Tuple[Monomial, ...]
    distances: Tuple[AdicDistance, ...]
    certificate: Tuple[Series, ...]
    precision: int

    @property
    def joined(self) -> bool:
        return False


JoinResult = Union[Joined, Diverged]


@dataclass(frozen=True)
class PairReport:
    """S-series of one generator pair and its normal form modulo (X)^D."""
    i: int
    j: int
    s_series: Series
    normal_form: Series
    irreducible: Optional[Monomial] = None

    @property
    def passed(self) -> bool:
        return self.normal_form.is_zero()


@dataclass(frozen=True)
class SBReport:
    precision: int
    pairs: Tuple[PairReport, ...]
    note: str = SEMI_CHECK_NOTE

    @property
    def passed(self) -> bool:
        return all(pair.passed for pair in self.pairs)

    @property
    def failures(self) -> Tuple[PairReport, ...]:
        return tuple(pair for pair in self.pairs if not pair.passed)
