"""Cofactor trace and membership verdict serialization."""
from typing import Dict

from fpsrewrite.core.errors import ParseError
from fpsrewrite.modules.algebra.schemas import SeriesSchema, parse_monomial, render_series
from fpsrewrite.modules.rewrite.models import RewriteSystem
from .models import CofactorTrace, EliminationRecord, InIdealModD, MembershipVerdict, NotInIdealModD


class EliminationRecordSchema:
    """Elimination record serialization schema (generator indices are 1-based)."""

    @staticmethod
    def serialize(record: EliminationRecord, system: RewriteSystem) -> Dict:
        return {
            'k': record.k,
            'monomial': record.monomial.format(system.names),
            'generator': record.generator + 1,
            'quotient': record.quotient.format(system.names),
            'lc': system.field.format(record.lc),
            'added': system.field.format(record.added),
        }

    @staticmethod
    def deserialize(data: Dict, system: RewriteSystem) -> EliminationRecord:
        try:
            return EliminationRecord(
                k=int(data['k']),
                monomial=parse_monomial(data['monomial'], system.names),
                generator=int(data['generator']) - 1,
                quotient=parse_monomial(data['quotient'], system.names),
                lc=system.field.parse(data['lc']),
                added=system.field.parse(data['added']),
            )
        except KeyError as e:
            raise ParseError(f'Missing elimination field {e}')


class CofactorTraceSchema:
    """Cofactor trace serialization schema."""

    @staticmethod
    def serialize(trace: CofactorTrace, system: RewriteSystem) -> Dict:
        names, order = system.names, system.order
        return {
            'precision': trace.precision,
            'records': [EliminationRecordSchema.serialize(r, system) for r in trace.records],
            'cofactors': [SeriesSchema.serialize(c, names, order) for c in trace.cofactors],
            'quotients': [[q.format(names) for q in qs] for qs in trace.quotients],
            'residual': SeriesSchema.serialize(trace.residual, names, order),
            'certified': list(trace.certified),
        }

    @staticmethod
    def deserialize(data: Dict, system: RewriteSystem) -> CofactorTrace:
        names, field = system.names, system.field
        return CofactorTrace(
            precision=int(data['precision']),
            records=tuple(EliminationRecordSchema.deserialize(r, system) for r in data['records']),
            cofactors=tuple(SeriesSchema.deserialize(c, names, field) for c in data['cofactors']),
            quotients=tuple(tuple(parse_monomial(q, names) for q in qs) for qs in data['quotients']),
            residual=SeriesSchema.deserialize(data['residual'], names, field),
            certified=tuple(int(b) for b in data['certified']),
        )


class MembershipVerdictSchema:
    """Membership verdict serialization schema."""

    @staticmethod
    def serialize(verdict: MembershipVerdict, system: RewriteSystem) -> Dict:
        names, order = system.names, system.order
        data = {
            'verdict': 'InIdealModD' if verdict.member else 'NotInIdealModD',
            'member': verdict.member,
            'trace': CofactorTraceSchema.serialize(verdict.trace, system),
        }
        if verdict.member:
            data['cofactors'] = [SeriesSchema.serialize(c, names, order) for c in verdict.cofactors]
        else:
            data['residual'] = SeriesSchema.serialize(verdict.residual, names, order)
            data['irreducible'] = verdict.irreducible.format(names)
        return data

    @staticmethod
    def deserialize(data: Dict, system: RewriteSystem) -> MembershipVerdict:
        names, field = system.names, system.field
        trace = CofactorTraceSchema.deserialize(data['trace'], system)
        if data['verdict'] == 'InIdealModD':
            cofactors = tuple(SeriesSchema.deserialize(c, names, field) for c in data['cofactors'])
            return InIdealModD(cofactors, trace)
        if data['verdict'] == 'NotInIdealModD':
            return NotInIdealModD(
                SeriesSchema.deserialize(data['residual'], names, field),
                parse_monomial(data['irreducible'], names),
                trace,
            )
        raise ParseError(f'Unknown verdict {data["verdict"]!r}')

    @staticmethod
    def render(verdict: MembershipVerdict, system: RewriteSystem, with_trace: bool = False) -> str:
        names, order = system.names, system.order
        trace = verdict.trace
        if verdict.member:
            lines = [f'InIdealModD (mod (X)^{trace.precision}, {trace.steps} eliminations)']
            for index, cofactor in enumerate(verdict.cofactors):
                lines.append(f'  f{index + 1} = {render_series(cofactor, names, order)}'
                             f'  [certified mod (X)^{trace.certified[index]}]')
        else:
            lines = [
                f'NotInIdealModD (mod (X)^{trace.precision})',
                f'  residual: {render_series(verdict.residual, names, order, with_precision=True)}',
                f'  irreducible leading monomial: {verdict.irreducible.format(names)}',
            ]
        if with_trace:
            for record in trace.records:
                lines.append(
                    f'  k={record.k}: m={record.monomial.format(names)} i={record.generator + 1} '
                    f'q={record.quotient.format(names)} lc={system.field.format(record.lc)}'
                )
        return '\n'.join(lines)
