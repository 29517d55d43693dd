"""Refutation verdict serialization."""
from typing import Dict, Optional, Sequence

from .models import AbstractSystem, RefutationVerdict, State


def format_path(path: Optional[Sequence[State]], system: AbstractSystem) -> str:
    if path is None:
        return 'unknown'
    return ' -> '.join(system.format_state(state) for state in path)


class RefutationVerdictSchema:
    """Refutation verdict serialization schema."""

    @staticmethod
    def serialize(verdict: RefutationVerdict, system: AbstractSystem) -> Dict:
        fmt = system.format_state
        return {
            'system': system.name,
            'status': verdict.status.value,
            'start': fmt(verdict.start),
            'normal_forms': [fmt(nf) for nf in verdict.normal_forms],
            'successor_free': list(verdict.successor_free),
            'epsilon': str(verdict.epsilon),
            'paths': [
                None if path is None else {'states': [fmt(s) for s in path], 'length': len(path) - 1}
                for path in verdict.paths
            ],
        }

    @staticmethod
    def render(verdict: RefutationVerdict, system: AbstractSystem) -> str:
        fmt = system.format_state
        lines = [f'{system.name}: {system.description}']
        for nf, path in zip(verdict.normal_forms, verdict.paths):
            length = 'unknown' if path is None else f'{len(path) - 1} steps'
            lines.append(f'  {fmt(verdict.start)} ~> {fmt(nf)} within {verdict.epsilon} ({length}): '
                         f'{format_path(path, system)}')
        lines.append(f'infinitary confluence: {verdict.status.value}')
        return '\n'.join(lines)
