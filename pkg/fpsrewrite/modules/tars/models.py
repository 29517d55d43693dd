"""Abstract topological rewriting systems and their two counterexamples."""
from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Hashable, List, NamedTuple, Optional, Tuple, Union

from fpsrewrite.core.errors import DomainViolation, ParseError

State = Hashable
Component = Union[int, float]


@dataclass(frozen=True)
class AbstractSystem:
    """States, a finite successor function and a metric inducing the topology."""
    name: str
    description: str
    successors: Callable[[State], List[State]]
    metric: Callable[[State, State], Fraction]
    parse_state: Callable[[str], State]
    format_state: Callable[[State], str]
    start: State
    normal_forms: Tuple[State, State]


# Cyclic system on the dyadic points of [0, 2]

@dataclass(frozen=True)
class CyclicState:
    """numerator / 2^log_denominator in canonical (reduced) form."""
    numerator: int
    log_denominator: int = 0

    def __post_init__(self):
        if self.numerator < 0 or self.log_denominator < 0:
            raise DomainViolation(f'{self.numerator}/2^{self.log_denominator} is negative')
        if self.log_denominator > 0 and self.numerator % 2 == 0:
            raise DomainViolation('CyclicState must be in reduced form')
        if self.value > 2:
            raise DomainViolation(f'{self.value} is outside [0, 2]')

    @classmethod
    def from_fraction(cls, value: Fraction) -> CyclicState:
        value = Fraction(value)
        denominator = value.denominator
        log = denominator.bit_length() - 1
        if denominator != 1 << log:
            raise DomainViolation(f'{value} is not a dyadic rational')
        return cls(value.numerator, log)

    @classmethod
    def left(cls, k: int) -> CyclicState:
        """1/2^k"""
        return cls(1, k)

    @classmethod
    def right(cls, k: int) -> CyclicState:
        """2 - 1/2^k"""
        return cls((1 << (k + 1)) - 1, k)

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.log_denominator)

    def __str__(self) -> str:
        return str(self.value)


def cyclic_successors(state: CyclicState) -> List[CyclicState]:
    k = state.log_denominator
    if state.value in (0, 2):
        return []
    if state.value == 1:
        return [CyclicState.left(1), CyclicState.right(1)]
    if state.numerator == 1:
        return [CyclicState.left(k - 1), CyclicState.left(k + 1)]
    if state == CyclicState.right(k):
        return [CyclicState.right(k - 1), CyclicState.right(k + 1)]
    raise DomainViolation(f'{state} is not reachable by the cyclic rules')


def cyclic_metric(a: CyclicState, b: CyclicState) -> Fraction:
    return abs(a.value - b.value)


def parse_cyclic(text: str) -> CyclicState:
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f'Expected a rational such as 3/2, got {text!r}')
    return CyclicState.from_fraction(value)


# N-bar x N-bar with the product order topology

INF = math.inf


class NbarState(NamedTuple):
    a: Component
    b: Component

    @property
    def finite(self) -> bool:
        return self.a != INF and self.b != INF

    def __str__(self) -> str:
        return f'({_format_component(self.a)},{_format_component(self.b)})'


def _format_component(value: Component) -> str:
    return 'inf' if value == INF else str(value)


def _weight(value: Component) -> Fraction:
    return Fraction(0) if value == INF else Fraction(1, 2 ** value)


def nbar_successors(state: NbarState) -> List[NbarState]:
    if not state.finite:
        return []
    return [NbarState(state.a + 1, state.b), NbarState(state.a, state.b + 1)]


def nbar_metric(p: NbarState, q: NbarState) -> Fraction:
    """|2^-a - 2^-c| + |2^-b - 2^-d| with 2^-inf = 0."""
    return abs(_weight(p.a) - _weight(q.a)) + abs(_weight(p.b) - _weight(q.b))


_NBAR_RE = re.compile(r'^\(\s*(\d+|inf)\s*,\s*(\d+|inf)\s*\)$')


def parse_nbar(text: str) -> NbarState:
    match = _NBAR_RE.match(text.strip())
    if not match:
        raise ParseError(f'Expected a state such as (2,inf), got {text!r}')
    a, b = (INF if g == 'inf' else int(g) for g in match.groups())
    return NbarState(a, b)


CYCLIC = AbstractSystem(
    name='cyclic',
    description='x/2 <-> x and 2 - x <-> 2 - x/2 on the dyadic points of [0, 2]',
    successors=cyclic_successors,
    metric=cyclic_metric,
    parse_state=parse_cyclic,
    format_state=str,
    start=CyclicState(1),
    normal_forms=(CyclicState(0), CyclicState(2)),
)

NBAR = AbstractSystem(
    name='nbar',
    description='(n,m) -> (n+1,m) and (n,m) -> (n,m+1) on (N u {inf})^2',
    successors=nbar_successors,
    metric=nbar_metric,
    parse_state=parse_nbar,
    format_state=str,
    start=NbarState(0, 0),
    normal_forms=(NbarState(INF, 0), NbarState(0, INF)),
)

SYSTEMS: Dict[str, AbstractSystem] = {system.name: system for system in (CYCLIC, NBAR)}


_POWER_RE = re.compile(r'^2\s*\^\s*-\s*(\d+)$')


def parse_epsilon(text: str) -> Fraction:
    """Accept 2^-k or a positive rational."""
    text = str(text).strip()
    match = _POWER_RE.match(text)
    if match:
        return Fraction(1, 2 ** int(match.group(1)))
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f'Expected epsilon as 2^-k or a rational, got {text!r}')
    if value <= 0:
        raise DomainViolation(f'epsilon must be positive, got {text}')
    return value


class VerdictStatus(str, enum.Enum):
    REFUTED = 'refuted'
    UNKNOWN = 'unknown'


@dataclass(frozen=True)
class RefutationVerdict:
    """Two distinct normal forms both topologically reachable from one state."""
    status: VerdictStatus
    start: State
    normal_forms: Tuple[State, State]
    epsilon: Fraction
    paths: Tuple[Optional[Tuple[State, ...]], Optional[Tuple[State, ...]]]
    successor_free: Tuple[bool, bool]

    @property
    def refuted(self) -> bool:
        return self.status is VerdictStatus.REFUTED
