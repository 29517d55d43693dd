"""Rewriting relation service layer."""
import logging
from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple

from fpsrewrite.core.errors import InvalidStep, PreconditionViolation
from fpsrewrite.modules.algebra.models import EXACT, Monomial, Series, monomial_count
from .models import ReductionResult, RewriteStep, RewriteSystem, TieBreak

logger = logging.getLogger(__name__)


class RewriteService:
    """Single steps, reducibility and reduction to a requested adic precision."""

    @staticmethod
    def reducible_monomials(f: Series, system: RewriteSystem, precision: int,
                            tie_break: TieBreak = TieBreak.SMALLEST) -> List[Tuple[Monomial, int]]:
        """Reducible monomials of degree < precision, <_op-descending, with their generator."""
        system.require_precision(precision, f)
        result = []
        for monomial in system.order.op_descending(f.support):
            if monomial.degree >= precision:
                continue
            found = system.divisor(monomial, tie_break)
            if found is not None:
                result.append((monomial, found[0]))
        return result

    @staticmethod
    def rewrite_step(f: Series, step: RewriteStep, system: RewriteSystem) -> Series:
        """Apply one step: f - lambda*M + (lambda/lc(s))*m*rem(s)."""
        if not 0 <= step.generator < len(system):
            raise InvalidStep(f'No generator {step.generator + 1} in a system of {len(system)}')
        if step.monomial not in f:
            raise InvalidStep(f'Monomial {step.monomial} is not in the support')
        generator = system.lead(step.generator)
        quotient = generator.lm.divides(step.monomial)
        if quotient is None or quotient != step.quotient:
            raise InvalidStep(
                f'lm(s{step.generator + 1}) = {generator.lm} does not divide {step.monomial} '
                f'with quotient {step.quotient}'
            )
        if f.coeff(step.monomial) != step.coeff:
            raise InvalidStep(f'Coefficient of {step.monomial} does not match the step')
        eliminated = Series.monomial(step.monomial, step.coeff, f.field)
        replacement = generator.rem.monomial_mul(step.quotient, step.coeff / generator.lc)
        return f.sub(eliminated).add(replacement)

    @staticmethod
    def step_multiple(step: RewriteStep, system: RewriteSystem) -> Series:
        """The ideal element (lambda/lc(s))*m*s equal to f - rewrite_step(f)."""
        generator = system.lead(step.generator)
        return generator.series.monomial_mul(step.quotient, step.coeff / generator.lc)

    @staticmethod
    def reduce_to_precision(f: Series, system: RewriteSystem, precision: int,
                            tie_break: TieBreak = TieBreak.SMALLEST) -> ReductionResult:
        """Eliminate the <_op-greatest reducible monomial until none is left below the precision."""
        system.order.require_degree_compatible()
        system.require_precision(precision, f)
        field = system.field
        current = f.truncate(precision)
        cofactors = [system.zero() for _ in range(len(system))]
        steps: List[RewriteStep] = []
        bound = monomial_count(system.nvars, precision)

        while True:
            reducible = RewriteService.reducible_monomials(current, system, precision, tie_break)
            if not reducible:
                break
            monomial, index = reducible[0]
            generator = system.lead(index)
            quotient = generator.lm.divides(monomial)
            step = RewriteStep(monomial, index, quotient, current.coeff(monomial))
            current = RewriteService.rewrite_step(current, step, system).truncate(precision)
            cofactors[index] = cofactors[index].add(
                Series.monomial(quotient, step.coeff / generator.lc, field)
            )
            steps.append(step)
            logger.debug(f'step {len(steps)}: rewrote {monomial} with s{index + 1} (quotient {quotient})')
            if len(steps) > bound:
                raise RuntimeError(
                    f'Reduction exceeded {bound} steps at precision {precision}; elimination is not monotone'
                )

        logger.info(f'Reduced to precision {precision} in {len(steps)} steps')
        return ReductionResult(f, current.with_prec(precision), tuple(steps), tuple(cofactors), precision)

    @staticmethod
    def is_normal_form(f: Series, system: RewriteSystem, precision: int,
                       tie_break: TieBreak = TieBreak.SMALLEST) -> bool:
        """No reducible monomial of degree < precision."""
        return not RewriteService.reducible_monomials(f, system, precision, tie_break)

    @staticmethod
    def combine(cofactors: Sequence[Series], system: RewriteSystem, precision=EXACT) -> Series:
        """Sum of cofactors[i] * s_i, truncated to precision."""
        total = system.zero()
        for cofactor, generator in zip(cofactors, system.generators):
            total = total.add(cofactor.truncate(precision).mul(generator.truncate(precision)))
        return total.truncate(precision)

    @staticmethod
    def replay(f: Series, steps: Sequence[RewriteStep], system: RewriteSystem,
               precision=EXACT) -> Series:
        """Re-apply a recorded step list through rewrite_step."""
        current = f.truncate(precision)
        for step in steps:
            current = RewriteService.rewrite_step(current, step, system).truncate(precision)
        return current

    @staticmethod
    def applicable_steps(f: Series, system: RewriteSystem) -> List[RewriteStep]:
        """Every step applicable to f: any occurrence, any generator."""
        steps = []
        for monomial in system.order.op_descending(f.support):
            for index in range(len(system)):
                quotient = system.lead(index).lm.divides(monomial)
                if quotient is not None:
                    steps.append(RewriteStep(monomial, index, quotient, f.coeff(monomial)))
        return steps

    @staticmethod
    def finite_reducts(f: Series, system: RewriteSystem, depth: int,
                       max_states: int = 10000) -> Dict[Series, int]:
        """Exact series reachable from f in at most depth steps, with their distance."""
        if not f.is_exact or any(not s.is_exact for s in system.generators):
            raise PreconditionViolation('Finite reducts are only meaningful for exact series')
        reached = {f: 0}
        queue = deque([f])
        while queue:
            current = queue.popleft()
            distance = reached[current]
            if distance >= depth:
                continue
            for step in RewriteService.applicable_steps(current, system):
                successor = RewriteService.rewrite_step(current, step, system)
                if successor in reached:
                    continue
                reached[successor] = distance + 1
                if len(reached) >= max_states:
                    logger.warning(f'Finite reduct exploration stopped at {max_states} states')
                    return reached
                queue.append(successor)
        return reached

    @staticmethod
    def common_finite_reduct(g: Series, h: Series, system: RewriteSystem,
                             depth: int) -> Optional[Series]:
        """A series both g and h reach by finite rewriting within depth steps, if any."""
        from_g = RewriteService.finite_reducts(g, system, depth)
        from_h = RewriteService.finite_reducts(h, system, depth)
        common = [s for s in from_g if s in from_h]
        if not common:
            return None
        return min(common, key=lambda s: (from_g[s] + from_h[s], len(s), repr(s)))
