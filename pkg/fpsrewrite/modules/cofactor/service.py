"""Constructive closure: cofactor extraction with full bookkeeping."""
import logging
from typing import List, Tuple

from fpsrewrite.core.errors import IrreducibleLeadingMonomial, PrecisionLoss, ZeroSeries
from fpsrewrite.modules.algebra.models import AdicDistance, DistanceKind, Series, monomial_count
from fpsrewrite.modules.algebra.service import AlgebraService
from fpsrewrite.modules.rewrite.models import RewriteSystem
from fpsrewrite.modules.rewrite.service import RewriteService
from .models import CofactorTrace, EliminationRecord, InIdealModD, MembershipVerdict, NotInIdealModD

logger = logging.getLogger(__name__)


class CofactorService:
    """Elimination of leading monomials against a standard basis."""

    @staticmethod
    def eliminate_once(F: Series, system: RewriteSystem,
                       trace: CofactorTrace) -> Tuple[Series, CofactorTrace]:
        """F' = F - (lc(F)/lc(s_i)) q s_i for the smallest i with lm(s_i) | lm(F)."""
        if F.is_zero():
            raise ZeroSeries(f'Nothing to eliminate modulo (X)^{trace.precision}')
        lm, lc, _ = AlgebraService.leading_data(F, system.order)
        found = system.divisor(lm)
        if found is None:
            raise IrreducibleLeadingMonomial(lm)
        index, quotient = found
        generator = system.lead(index)
        added = lc / generator.lc
        multiple = generator.series.monomial_mul(quotient, added)
        residual = F.sub(multiple).truncate(trace.precision)
        cofactor = trace.cofactors[index].add(Series.monomial(quotient, added, system.field))
        record = EliminationRecord(trace.steps, lm, index, quotient, lc, added)
        logger.debug(f'k={record.k}: eliminated {lm} with s{index + 1}, q={quotient}')
        return residual, trace.extend(record, cofactor, residual)

    @staticmethod
    def limit_coefficients(f: Series, system: RewriteSystem, precision: int) -> MembershipVerdict:
        """Iterate eliminate_once until F_k vanishes modulo (X)^precision."""
        system.order.require_degree_compatible()
        system.require_precision(precision, f)
        trace = CofactorTrace.start(f, system, precision)
        F = trace.residual
        bound = monomial_count(system.nvars, precision)
        while not F.is_zero():
            try:
                F, trace = CofactorService.eliminate_once(F, system, trace)
            except IrreducibleLeadingMonomial as e:
                logger.info(f'Not in I + (X)^{precision}: irreducible leading monomial {e.monomial}')
                return NotInIdealModD(F, e.monomial, trace)
            if trace.steps > bound:
                raise RuntimeError(f'Elimination exceeded {bound} steps at precision {precision}')
        logger.info(f'In I + (X)^{precision} after {trace.steps} eliminations')
        return InIdealModD(trace.cofactors, trace)

    @staticmethod
    def verify_cofactor_identity(f: Series, verdict: MembershipVerdict, system: RewriteSystem,
                                 precision: int) -> bool:
        """Recompute sum f_i s_i exactly and compare with f in every degree < precision."""
        if not isinstance(verdict, InIdealModD):
            return False
        try:
            system.require_precision(precision, f)
        except PrecisionLoss:
            return False
        combination = RewriteService.combine(verdict.cofactors, system, precision)
        return combination.agrees_with(f, precision)

    @staticmethod
    def certified_cofactors(trace: CofactorTrace) -> Tuple[Series, ...]:
        """Each cofactor modulo (X)^(D - deg lm(s_i)), the part no longer run can change."""
        return tuple(c.truncate(bound) for c, bound in zip(trace.cofactors, trace.certified))

    @staticmethod
    def trace_violations(trace: CofactorTrace, system: RewriteSystem) -> List[str]:
        """Invariants a sound elimination trace satisfies; empty when all hold."""
        order = system.order
        problems = []
        records = trace.records
        for previous, current in zip(records, records[1:]):
            if order.key(current.monomial) <= order.key(previous.monomial):
                problems.append(f'k={current.k}: {current.monomial} is not <_op below {previous.monomial}')
            if current.monomial.degree < previous.monomial.degree:
                problems.append(f'k={current.k}: degree decreased')
        for record in records:
            if system.lead(record.generator).lm * record.quotient != record.monomial:
                problems.append(f'k={record.k}: m_k != lm(s_i) q_k')

        for index, quotients in enumerate(trace.quotients):
            cofactor = trace.cofactors[index]
            if cofactor.support != frozenset(quotients):
                problems.append(f'f{index + 1}: support differs from the inserted quotients')
            for earlier, later in zip(quotients, quotients[1:]):
                if order.key(later) <= order.key(earlier):
                    problems.append(f'f{index + 1}: quotient {later} not <_op below {earlier}')
            problems.extend(CofactorService._cauchy_violations(index, trace, system))
        return problems

    @staticmethod
    def _cauchy_violations(index: int, trace: CofactorTrace, system: RewriteSystem) -> List[str]:
        """delta(f_i^(k2), f_i^(k1)) <= 2^-deg(first quotient inserted after k1)."""
        partials = [system.zero()]
        added = [r.added for r in trace.records if r.generator == index]
        quotients = trace.quotients[index]
        for quotient, value in zip(quotients, added):
            partials.append(partials[-1].add(Series.monomial(quotient, value, system.field)))
        problems = []
        for k1 in range(len(quotients)):
            bound = AdicDistance(DistanceKind.EXACT, quotients[k1].degree)
            for k2 in range(k1 + 1, len(partials)):
                if not AlgebraService.delta(partials[k2], partials[k1]) <= bound:
                    problems.append(f'f{index + 1}: partial cofactors {k1} and {k2} too far apart')
        return problems
