"""Elimination traces and membership verdicts."""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Tuple, Union

from fpsrewrite.modules.algebra.models import Monomial, Series
from fpsrewrite.modules.rewrite.models import RewriteSystem


@dataclass(frozen=True)
class EliminationRecord:
    """One elimination: m_k = lm(s_{i_k}) * q_k, cofactor i_k gains lc(F_k)/lc(s_{i_k}) * q_k."""
    k: int
    monomial: Monomial
    generator: int
    quotient: Monomial
    lc: object
    added: object


@dataclass(frozen=True)
class CofactorTrace:
    """Value record of an elimination run at precision D."""
    precision: int
    records: Tuple[EliminationRecord, ...]
    cofactors: Tuple[Series, ...]
    quotients: Tuple[Tuple[Monomial, ...], ...]
    residual: Series
    certified: Tuple[int, ...]

    @classmethod
    def start(cls, f: Series, system: RewriteSystem, precision: int) -> CofactorTrace:
        """Base case: every partial cofactor is 0 and F_0 = f."""
        count = len(system)
        return cls(
            precision=precision,
            records=(),
            cofactors=tuple(system.zero() for _ in range(count)),
            quotients=tuple(() for _ in range(count)),
            residual=f.truncate(precision),
            certified=tuple(max(precision - system.lead(i).lm.degree, 0) for i in range(count)),
        )

    def extend(self, record: EliminationRecord, cofactor: Series, residual: Series) -> CofactorTrace:
        index = record.generator
        cofactors = self.cofactors[:index] + (cofactor,) + self.cofactors[index + 1:]
        quotients = (self.quotients[:index] + (self.quotients[index] + (record.quotient,),)
                     + self.quotients[index + 1:])
        return replace(self, records=self.records + (record,), cofactors=cofactors,
                       quotients=quotients, residual=residual)

    @property
    def steps(self) -> int:
        return len(self.records)

    @property
    def eliminated(self) -> Tuple[Monomial, ...]:
        return tuple(r.monomial for r in self.records)


@dataclass(frozen=True)
class InIdealModD:
    """f lies in I + (X)^D; cofactors satisfy f = sum f_i s_i mod (X)^D."""
    cofactors: Tuple[Series, ...]
    trace: CofactorTrace

    @property
    def member(self) -> bool:
        return True


@dataclass(frozen=True)
class NotInIdealModD:
    """Elimination stopped on an irreducible leading monomial."""
    residual: Series
    irreducible: Monomial
    trace: CofactorTrace

    @property
    def member(self) -> bool:
        return False


MembershipVerdict = Union[InIdealModD, NotInIdealModD]
