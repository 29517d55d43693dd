"""Truncation-basis matrices, oracle solutions and cross-validation reports."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, Tuple

from fpsrewrite.modules.algebra.models import Monomial, Series


@dataclass(frozen=True)
class TruncationBasisMatrix:
    """Rows m*s_j mod (X)^D for deg(m) + deg(lm(s_j)) < D, columns the monomials of degree < D.

    `transform` is the invertible E with E * A^T in reduced row echelon form; `pivots`
    are the pivot columns of that form (indices into `rows`).
    """
    precision: int
    rows: Tuple[Tuple[Monomial, int], ...]
    columns: Tuple[Monomial, ...]
    transform: Tuple[tuple, ...]
    pivots: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.columns)

    @property
    def column_index(self) -> Dict[Monomial, int]:
        return {monomial: index for index, monomial in enumerate(self.columns)}


@dataclass(frozen=True)
class OracleSolution:
    """f = sum cofactors[j] * s_j mod (X)^precision."""
    cofactors: Tuple[Series, ...]
    precision: int


class InputSource(str, enum.Enum):
    RANDOM = 'random'
    COMBINATION = 'combination'
    SUPPLIED = 'supplied'


class DisagreementKind(str, enum.Enum):
    EXPECTED = 'expected'
    BUG = 'bug'


@dataclass(frozen=True)
class Disagreement:
    series: Series
    source: InputSource
    reduction_member: bool
    oracle_member: bool
    kind: DisagreementKind


@dataclass(frozen=True)
class CrossValidationReport:
    precision: int
    trials: int
    seed: int
    checked: int
    standard_basis: bool
    disagreements: Tuple[Disagreement, ...]

    @property
    def bugs(self) -> Tuple[Disagreement, ...]:
        return tuple(d for d in self.disagreements if d.kind is DisagreementKind.BUG)

    @property
    def expected(self) -> Tuple[Disagreement, ...]:
        return tuple(d for d in self.disagreements if d.kind is DisagreementKind.EXPECTED)
