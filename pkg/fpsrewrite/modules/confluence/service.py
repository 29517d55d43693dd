"""Joinability of two series and the truncated standard-basis check."""
import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import List

from fpsrewrite.core.errors import PreconditionViolation
from fpsrewrite.modules.algebra.models import Series, monomial_count
from fpsrewrite.modules.algebra.service import AlgebraService
from fpsrewrite.modules.rewrite.models import RewriteStep, RewriteSystem, TieBreak
from fpsrewrite.modules.rewrite.service import RewriteService
from .models import Diverged, Joined, JoinResult, PairReport, SBReport

logger = logging.getLogger(__name__)


class ConfluenceService:
    """Simultaneous rewriting of both sides and critical-pair checks."""

    @staticmethod
    def join(g: Series, h: Series, system: RewriteSystem, precision: int,
             tie_break: TieBreak = TieBreak.SMALLEST) -> JoinResult:
        """Rewrite m_k = lm(g_k - h_k) on both sides with the same generator until they agree."""
        system.order.require_degree_compatible()
        system.require_precision(precision, g, h)
        field = system.field
        g_k, h_k = g.truncate(precision), h.truncate(precision)
        g_steps: List[RewriteStep] = []
        h_steps: List[RewriteStep] = []
        eliminated = []
        distances = []
        certificate = [system.zero() for _ in range(len(system))]
        bound = monomial_count(system.nvars, precision)

        while True:
            difference = g_k.sub(h_k)
            distances.append(AlgebraService.delta(g_k, h_k))
            if difference.is_zero():
                logger.info(f'Joined modulo (X)^{precision} after {len(eliminated)} eliminations')
                return Joined(g_k.with_prec(precision), tuple(g_steps), tuple(h_steps),
                              tuple(eliminated), tuple(distances), tuple(certificate), precision)
            m_k = AlgebraService.leading_monomial(difference, system.order)
            found = system.divisor(m_k, tie_break)
            if found is None:
                logger.info(f'Diverged modulo (X)^{precision} at irreducible {m_k}')
                return Diverged(m_k, g_k, h_k, tuple(g_steps), tuple(h_steps), tuple(eliminated),
                                tuple(distances), tuple(certificate), precision)
            index, quotient = found
            generator = system.lead(index)
            if m_k in g_k:
                step = RewriteStep(m_k, index, quotient, g_k.coeff(m_k))
                g_k = RewriteService.rewrite_step(g_k, step, system).truncate(precision)
                g_steps.append(step)
            if m_k in h_k:
                step = RewriteStep(m_k, index, quotient, h_k.coeff(m_k))
                h_k = RewriteService.rewrite_step(h_k, step, system).truncate(precision)
                h_steps.append(step)
            # g - h = (g_k - h_k) + sum certificate_i * s_i
            certificate[index] = certificate[index].add(
                Series.monomial(quotient, difference.coeff(m_k) / generator.lc, field)
            )
            eliminated.append(m_k)
            logger.debug(f'join step {len(eliminated)}: eliminated {m_k} with s{index + 1}')
            if len(eliminated) > bound:
                raise RuntimeError(f'Join exceeded {bound} eliminations at precision {precision}')

    @staticmethod
    def s_series(i: int, j: int, system: RewriteSystem) -> Series:
        """(L/lm(s_i))/lc(s_i) * s_i - (L/lm(s_j))/lc(s_j) * s_j with L = lcm of the leading monomials."""
        if i == j:
            raise PreconditionViolation(f'S-series needs two distinct generators, got {i + 1} twice')
        a, b = system.lead(i), system.lead(j)
        lcm = a.lm.lcm(b.lm)
        left = a.series.monomial_mul(a.lm.divides(lcm), system.field.one / a.lc)
        right = b.series.monomial_mul(b.lm.divides(lcm), system.field.one / b.lc)
        return left.sub(right)

    @staticmethod
    def check_pair(i: int, j: int, system: RewriteSystem, precision: int) -> PairReport:
        s = ConfluenceService.s_series(i, j, system)
        normal_form = RewriteService.reduce_to_precision(s, system, precision).normal_form
        irreducible = None
        if not normal_form.is_zero():
            irreducible = AlgebraService.leading_monomial(normal_form, system.order)
        return PairReport(i, j, s, normal_form, irreducible)

    @staticmethod
    def check_standard_basis(system: RewriteSystem, precision: int,
                             max_workers: int = 1) -> SBReport:
        """Reduce every S-series to precision; pass iff all normal forms vanish."""
        system.order.require_degree_compatible()
        system.require_precision(precision)
        pairs = list(combinations(range(len(system)), 2))
        if max_workers > 1 and len(pairs) > 1:
            with ThreadPoolExecutor(max_workers=max_workers) as executor:
                futures = [executor.submit(ConfluenceService.check_pair, i, j, system, precision)
                           for i, j in pairs]
                reports = [future.result() for future in futures]
        else:
            reports = [ConfluenceService.check_pair(i, j, system, precision) for i, j in pairs]
        report = SBReport(precision, tuple(reports))
        if report.passed:
            logger.info(f'Standard-basis check passed modulo (X)^{precision} ({len(pairs)} pairs)')
        else:
            logger.warning(
                f'Standard-basis check failed modulo (X)^{precision}: '
                f'{len(report.failures)} of {len(pairs)} pairs'
            )
        return report
