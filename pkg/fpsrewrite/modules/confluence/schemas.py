"""Join result and standard-basis report serialization."""
from typing import Dict

from fpsrewrite.core.errors import ParseError
from fpsrewrite.modules.algebra.schemas import (
    DistanceSchema,
    SeriesSchema,
    parse_monomial,
    render_series,
)
from fpsrewrite.modules.rewrite.models import RewriteSystem
from fpsrewrite.modules.rewrite.schemas import RewriteStepSchema
from .models import Diverged, Joined, JoinResult, PairReport, SBReport


class JoinResultSchema:
    """Join result serialization schema."""

    @staticmethod
    def serialize(result: JoinResult, system: RewriteSystem) -> Dict:
        names, order = system.names, system.order
        data = {
            'verdict': 'Joined' if result.joined else 'Diverged',
            'precision': result.precision,
            'g_steps': RewriteStepSchema.serialize_list(result.g_steps, system),
            'h_steps': RewriteStepSchema.serialize_list(result.h_steps, system),
            'eliminated': [m.format(names) for m in result.eliminated],
            'distances': [DistanceSchema.serialize(d) for d in result.distances],
            'certificate': [SeriesSchema.serialize(c, names, order) for c in result.certificate],
        }
        if result.joined:
            data['common'] = SeriesSchema.serialize(result.common, names, order)
        else:
            data['irreducible'] = result.irreducible.format(names)
            data['g_reduct'] = SeriesSchema.serialize(result.g_reduct, names, order)
            data['h_reduct'] = SeriesSchema.serialize(result.h_reduct, names, order)
        return data

    @staticmethod
    def deserialize(data: Dict, system: RewriteSystem) -> JoinResult:
        names, field = system.names, system.field
        shared = dict(
            g_steps=RewriteStepSchema.deserialize_list(data['g_steps'], system),
            h_steps=RewriteStepSchema.deserialize_list(data['h_steps'], system),
            eliminated=tuple(parse_monomial(m, names) for m in data['eliminated']),
            distances=tuple(DistanceSchema.deserialize(d) for d in data['distances']),
            certificate=tuple(SeriesSchema.deserialize(c, names, field) for c in data['certificate']),
            precision=int(data['precision']),
        )
        if data['verdict'] == 'Joined':
            return Joined(common=SeriesSchema.deserialize(data['common'], names, field), **shared)
        if data['verdict'] == 'Diverged':
            return Diverged(
                irreducible=parse_monomial(data['irreducible'], names),
                g_reduct=SeriesSchema.deserialize(data['g_reduct'], names, field),
                h_reduct=SeriesSchema.deserialize(data['h_reduct'], names, field),
                **shared,
            )
        raise ParseError(f'Unknown verdict {data["verdict"]!r}')

    @staticmethod
    def render(result: JoinResult, system: RewriteSystem) -> str:
        names, order = system.names, system.order
        eliminated = ', '.join(m.format(names) for m in result.eliminated) or '-'
        if isinstance(result, Joined):
            lines = [f'Joined at {render_series(result.common, names, order, with_precision=True)}']
        else:
            lines = [
                f'Diverged at irreducible {result.irreducible.format(names)} '
                f'(mod (X)^{result.precision})',
                f'  g reduct: {render_series(result.g_reduct, names, order)}',
                f'  h reduct: {render_series(result.h_reduct, names, order)}',
            ]
        lines.append(f'  eliminated: {eliminated}')
        lines.append(f'  g steps: {len(result.g_steps)}, h steps: {len(result.h_steps)}')
        lines.append(f'  distances: {", ".join(str(d) for d in result.distances)}')
        return '\n'.join(lines)


class PairReportSchema:

    @staticmethod
    def serialize(pair: PairReport, system: RewriteSystem) -> Dict:
        names, order = system.names, system.order
        return {
            'pair': [pair.i + 1, pair.j + 1],
            's_series': SeriesSchema.serialize(pair.s_series, names, order),
            'normal_form': SeriesSchema.serialize(pair.normal_form, names, order),
            'passed': pair.passed,
            'irreducible': pair.irreducible.format(names) if pair.irreducible is not None else None,
        }


class SBReportSchema:
    """Standard-basis report serialization schema."""

    @staticmethod
    def serialize(report: SBReport, system: RewriteSystem) -> Dict:
        return {
            'precision': report.precision,
            'passed': report.passed,
            'pairs': [PairReportSchema.serialize(pair, system) for pair in report.pairs],
            'note': report.note,
        }

    @staticmethod
    def render(report: SBReport, system: RewriteSystem) -> str:
        names, order = system.names, system.order
        total = len(report.pairs)
        if report.passed:
            return f'PASS ({total} pairs)'
        lines = [f'FAIL ({len(report.failures)} of {total} pairs)']
        for pair in report.failures:
            lines.append(
                f'  (s{pair.i + 1}, s{pair.j + 1}): S = {render_series(pair.s_series, names, order)}; '
                f'normal form {render_series(pair.normal_form, names, order, with_precision=True)}; '
                f'irreducible {pair.irreducible.format(names)}'
            )
        lines.append(f'  {report.note}')
        return '\n'.join(lines)
