"""Oracle solution and cross-validation report serialization."""
from typing import Dict, Optional

from fpsrewrite.modules.algebra.schemas import SeriesSchema, render_series
from fpsrewrite.modules.rewrite.models import RewriteSystem
from .models import CrossValidationReport, Disagreement, OracleSolution


class OracleSolutionSchema:

    @staticmethod
    def serialize(solution: Optional[OracleSolution], system: RewriteSystem, precision: int) -> Dict:
        if solution is None:
            return {'member': False, 'precision': precision, 'cofactors': None}
        return {
            'member': True,
            'precision': solution.precision,
            'cofactors': [SeriesSchema.serialize(c, system.names, system.order) for c in solution.cofactors],
        }

    @staticmethod
    def render(solution: Optional[OracleSolution], system: RewriteSystem, precision: int) -> str:
        if solution is None:
            return f'not a member of I + (X)^{precision}'
        lines = [f'member of I + (X)^{precision}']
        for index, cofactor in enumerate(solution.cofactors):
            lines.append(f'  u{index + 1} = {render_series(cofactor, system.names, system.order)}')
        return '\n'.join(lines)


class CrossValidationReportSchema:
    """Cross-validation report serialization schema."""

    @staticmethod
    def serialize_disagreement(item: Disagreement, system: RewriteSystem) -> Dict:
        return {
            'input': SeriesSchema.serialize(item.series, system.names, system.order),
            'source': item.source.value,
            'reduction_member': item.reduction_member,
            'oracle_member': item.oracle_member,
            'kind': item.kind.value,
        }

    @staticmethod
    def serialize(report: CrossValidationReport, system: RewriteSystem) -> Dict:
        return {
            'precision': report.precision,
            'trials': report.trials,
            'seed': report.seed,
            'checked': report.checked,
            'standard_basis': report.standard_basis,
            'disagreements': [
                CrossValidationReportSchema.serialize_disagreement(d, system) for d in report.disagreements
            ],
            'bugs': len(report.bugs),
            'expected': len(report.expected),
        }

    @staticmethod
    def render(report: CrossValidationReport, system: RewriteSystem) -> str:
        lines = [
            f'checked {report.checked} inputs at precision {report.precision} (seed {report.seed}): '
            f'{len(report.disagreements)} disagreements '
            f'({len(report.expected)} expected, {len(report.bugs)} bugs)'
        ]
        if not report.standard_basis:
            lines.append('  system fails the standard-basis check at this precision')
        for item in report.disagreements:
            lines.append(
                f'  [{item.kind.value}] {render_series(item.series, system.names, system.order)}: '
                f'reduction {"member" if item.reduction_member else "non-member"}, '
                f'oracle {"member" if item.oracle_member else "non-member"}'
            )
        return '\n'.join(lines)
