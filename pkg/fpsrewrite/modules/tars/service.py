"""Bounded searches over abstract rewriting systems."""
import logging
from collections import deque
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from fpsrewrite.core.errors import DomainViolation, PreconditionViolation
from .models import SYSTEMS, AbstractSystem, RefutationVerdict, State, VerdictStatus

logger = logging.getLogger(__name__)


class TarsService:
    """Witnesses for topological reachability and the normal-form obstruction."""

    @staticmethod
    def get_system(name: str) -> AbstractSystem:
        try:
            return SYSTEMS[name]
        except KeyError:
            raise DomainViolation(f'Unknown system {name!r}; available: {", ".join(sorted(SYSTEMS))}')

    @staticmethod
    def successors(state: State, system: AbstractSystem) -> List[State]:
        return list(system.successors(state))

    @staticmethod
    def is_normal_form(state: State, system: AbstractSystem) -> bool:
        return not system.successors(state)

    @staticmethod
    def reachable(state: State, system: AbstractSystem, max_steps: int) -> Dict[State, int]:
        """States reachable in at most max_steps finite steps, with their distance."""
        distances = {state: 0}
        queue = deque([state])
        while queue:
            current = queue.popleft()
            if distances[current] >= max_steps:
                continue
            for successor in system.successors(current):
                if successor not in distances:
                    distances[successor] = distances[current] + 1
                    queue.append(successor)
        return distances

    @staticmethod
    def witness_topological_reach(start: State, target: State, epsilon: Fraction,
                                  system: AbstractSystem,
                                  max_steps: int) -> Optional[Tuple[State, ...]]:
        """Shortest finite path from start to a state within epsilon of target, or None (unknown)."""
        if epsilon <= 0:
            raise PreconditionViolation(f'epsilon must be positive, got {epsilon}')
        parents: Dict[State, Optional[State]] = {start: None}
        depth = {start: 0}
        queue = deque([start])
        while queue:
            current = queue.popleft()
            if system.metric(current, target) < epsilon:
                path = [current]
                while parents[path[-1]] is not None:
                    path.append(parents[path[-1]])
                logger.debug(f'{system.name}: reached {current} within {epsilon} of {target}')
                return tuple(reversed(path))
            if depth[current] >= max_steps:
                continue
            for successor in system.successors(current):
                if successor not in parents:
                    parents[successor] = current
                    depth[successor] = depth[current] + 1
                    queue.append(successor)
        logger.info(f'{system.name}: no witness for {target} within {max_steps} steps')
        return None

    @staticmethod
    def refute_infinitary_confluence(system: AbstractSystem, start: State, nf1: State, nf2: State,
                                     epsilon: Fraction, max_steps: int) -> RefutationVerdict:
        """Refuted when two distinct successor-free states are both reachable up to epsilon."""
        if nf1 == nf2:
            raise PreconditionViolation(f'Normal forms must differ, got {nf1} twice')
        successor_free = (TarsService.is_normal_form(nf1, system),
                          TarsService.is_normal_form(nf2, system))
        paths = (
            TarsService.witness_topological_reach(start, nf1, epsilon, system, max_steps),
            TarsService.witness_topological_reach(start, nf2, epsilon, system, max_steps),
        )
        refuted = all(successor_free) and all(path is not None for path in paths)
        status = VerdictStatus.REFUTED if refuted else VerdictStatus.UNKNOWN
        logger.info(f'{system.name}: infinitary confluence {status.value} from {start} at epsilon {epsilon}')
        return RefutationVerdict(status, start, (nf1, nf2), epsilon, paths, successor_free)

    @staticmethod
    def demo(system: AbstractSystem, epsilon: Fraction, max_steps: int) -> RefutationVerdict:
        nf1, nf2 = system.normal_forms
        return TarsService.refute_infinitary_confluence(system, system.start, nf1, nf2,
                                                        epsilon, max_steps)

    @staticmethod
    def has_rewriting_loop(state: State, system: AbstractSystem, max_steps: int) -> bool:
        """Whether state ->+ state within max_steps steps."""
        seen = set()
        queue = deque((successor, 1) for successor in system.successors(state))
        while queue:
            current, steps = queue.popleft()
            if current == state:
                return True
            if current in seen or steps >= max_steps:
                continue
            seen.add(current)
            queue.extend((successor, steps + 1) for successor in system.successors(current))
        return False

    @staticmethod
    def finite_join(b: State, c: State, system: AbstractSystem,
                    max_steps: int) -> Optional[State]:
        """Common finite reduct minimizing the summed distance, or None within the bound."""
        from_b = TarsService.reachable(b, system, max_steps)
        from_c = TarsService.reachable(c, system, max_steps)
        common = [s for s in from_b if s in from_c]
        if not common:
            return None
        return min(common, key=lambda s: (from_b[s] + from_c[s], system.format_state(s)))

    @staticmethod
    def check_local_reversibility(system: AbstractSystem,
                                  states: Iterable[State]) -> List[Tuple[State, State]]:
        """Pairs (s, t) with t a successor of s but s not a successor of t."""
        violations = []
        for state in states:
            for successor in system.successors(state):
                if state not in system.successors(successor):
                    violations.append((state, successor))
        return violations
