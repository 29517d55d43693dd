"""Brute-force membership in I + (X)^D by exact Gaussian elimination."""
import logging
import random
from fractions import Fraction
from typing import List, Optional, Sequence

from sympy.polys.matrices import DomainMatrix

from fpsrewrite.modules.algebra.models import Series, monomials_below
from fpsrewrite.modules.cofactor.service import CofactorService
from fpsrewrite.modules.confluence.service import ConfluenceService
from fpsrewrite.modules.rewrite.models import RewriteSystem
from fpsrewrite.modules.rewrite.service import RewriteService
from .models import (
    CrossValidationReport,
    Disagreement,
    DisagreementKind,
    InputSource,
    OracleSolution,
    TruncationBasisMatrix,
)

logger = logging.getLogger(__name__)

RANDOM_COEFFICIENTS = (-2, -1, 1, 2, Fraction(1, 2))


class OracleService:
    """Linear-algebra ground truth for the reduction-based membership test."""

    @staticmethod
    def prepare(system: RewriteSystem, precision: int) -> TruncationBasisMatrix:
        """Build the truncation-basis matrix A and row-reduce [A^T | I] once."""
        system.require_precision(precision)
        domain = system.field.domain
        columns = tuple(monomials_below(system.nvars, precision))
        column_index = {monomial: index for index, monomial in enumerate(columns)}
        rows = []
        entries = []
        for j, generator in enumerate(system.generators):
            bound = precision - system.lead(j).lm.degree
            for monomial in monomials_below(system.nvars, bound):
                product = generator.monomial_mul(monomial).truncate(precision)
                vector = [domain.zero] * len(columns)
                for term, value in product.terms():
                    vector[column_index[term]] = value
                rows.append((monomial, j))
                entries.append(vector)

        nrows, ncols = len(rows), len(columns)
        augmented = [
            [entries[r][c] for r in range(nrows)]
            + [domain.one if c == k else domain.zero for k in range(ncols)]
            for c in range(ncols)
        ]
        reduced, pivots = DomainMatrix(augmented, (ncols, nrows + ncols), domain).rref()
        dense = reduced.to_Matrix()
        transform = tuple(
            tuple(domain.from_sympy(dense[r, nrows + c]) for c in range(ncols))
            for r in range(ncols)
        )
        pivots = tuple(p for p in pivots if p < nrows)
        logger.debug(f'Truncation basis matrix {nrows}x{ncols} at precision {precision}, rank {len(pivots)}')
        return TruncationBasisMatrix(precision, tuple(rows), columns, transform, pivots)

    @staticmethod
    def membership_oracle(f: Series, system: RewriteSystem, precision: int,
                          matrix: Optional[TruncationBasisMatrix] = None) -> Optional[OracleSolution]:
        """One exact solution of f = sum x_(m,j) m*s_j mod (X)^precision, or None."""
        system.require_precision(precision, f)
        if matrix is None or matrix.precision != precision:
            matrix = OracleService.prepare(system, precision)
        domain = system.field.domain
        column_index = matrix.column_index
        vector = [domain.zero] * len(matrix.columns)
        for term, value in f.truncate(precision).terms():
            vector[column_index[term]] = value

        y = [sum((e * v for e, v in zip(row, vector)), domain.zero) for row in matrix.transform]
        if any(value != domain.zero for value in y[matrix.rank:]):
            return None
        cofactors = [system.zero() for _ in range(len(system))]
        for r, pivot in enumerate(matrix.pivots):
            if y[r] == domain.zero:
                continue
            monomial, j = matrix.rows[pivot]
            cofactors[j] = cofactors[j].add(Series.monomial(monomial, y[r], system.field))
        return OracleSolution(tuple(cofactors), precision)

    @staticmethod
    def verify_solution(f: Series, solution: OracleSolution, system: RewriteSystem) -> bool:
        combination = RewriteService.combine(solution.cofactors, system, solution.precision)
        return combination.agrees_with(f, solution.precision)

    @staticmethod
    def random_series(rng: random.Random, system: RewriteSystem, precision: int,
                      max_terms: int = 4) -> Series:
        """Sum of 1..max_terms random terms of degree < precision."""
        field = system.field
        monomials = list(monomials_below(system.nvars, precision))
        coefficients = [c for c in RANDOM_COEFFICIENTS if OracleService._usable(c, field.characteristic)]
        total = system.zero()
        for _ in range(rng.randint(1, max_terms)):
            value = rng.choice(coefficients)
            total = total.add(Series.monomial(rng.choice(monomials), value, field))
        return total

    @staticmethod
    def random_member(rng: random.Random, system: RewriteSystem, precision: int) -> Series:
        """Random exact combination sum u_j s_j."""
        total = system.zero()
        for generator in system.generators:
            if rng.random() < 0.25:
                continue
            u = OracleService.random_series(rng, system, precision, max_terms=2)
            total = total.add(u.mul(generator))
        return total

    @staticmethod
    def _usable(value, characteristic: int) -> bool:
        if characteristic == 0:
            return True
        value = Fraction(value)
        return value.numerator % characteristic != 0 and value.denominator % characteristic != 0

    @staticmethod
    def cross_validate(system: RewriteSystem, precision: int, trials: int, seed: int,
                       inputs: Sequence[Series] = ()) -> CrossValidationReport:
        """Compare reduction membership with the oracle on random and supplied inputs."""
        rng = random.Random(seed)
        matrix = OracleService.prepare(system, precision)
        standard_basis = ConfluenceService.check_standard_basis(system, precision).passed
        candidates = []
        for _ in range(trials):
            candidates.append((OracleService.random_series(rng, system, precision), InputSource.RANDOM))
            candidates.append((OracleService.random_member(rng, system, precision), InputSource.COMBINATION))
        candidates.extend((f, InputSource.SUPPLIED) for f in inputs)

        disagreements: List[Disagreement] = []
        for f, source in candidates:
            verdict = CofactorService.limit_coefficients(f, system, precision)
            solution = OracleService.membership_oracle(f, system, precision, matrix)
            oracle_member = solution is not None
            sound = True
            if verdict.member:
                sound = CofactorService.verify_cofactor_identity(f, verdict, system, precision)
            if oracle_member:
                sound = sound and OracleService.verify_solution(f, solution, system)
            if verdict.member == oracle_member and sound:
                continue
            expected = sound and oracle_member and not verdict.member and not standard_basis
            kind = DisagreementKind.EXPECTED if expected else DisagreementKind.BUG
            disagreements.append(Disagreement(f, source, verdict.member, oracle_member, kind))

        report = CrossValidationReport(precision, trials, seed, len(candidates), standard_basis,
                                       tuple(disagreements))
        if report.bugs:
            logger.error(f'Cross-validation found {len(report.bugs)} unexplained disagreements')
        else:
            logger.info(f'Cross-validation: {len(candidates)} inputs, '
                        f'{len(report.expected)} expected disagreements')
        return report
