"""System file loading and rewrite trace serialization."""
import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from fpsrewrite.core.coefficients import CoefficientField, parse_field
from fpsrewrite.core.errors import ConfigError, ParseError, ZeroSeries
from fpsrewrite.modules.algebra.models import MonomialOrder, Series
from fpsrewrite.modules.algebra.schemas import (
    SeriesSchema,
    parse_monomial,
    parse_series,
    render_series,
)
from .models import ReductionResult, RewriteStep, RewriteSystem

_NAME_RE = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')
_BUNDLED_RE = re.compile(r'^[a-z][a-z0-9_]*$')

BUNDLED_SYSTEMS = Path(__file__).resolve().parents[2] / 'systems'


@dataclass(frozen=True)
class SystemConfig:
    """Validated contents of a system file."""
    vars: Tuple[str, ...]
    order: str
    field: str
    generators: Tuple[str, ...]
    precision: Optional[int] = None
    priority: Optional[Tuple[str, ...]] = None
    _cache: Dict = field(default_factory=dict, compare=False, repr=False)

    @staticmethod
    def validate(data: dict) -> dict:
        """Validate and clean a system file object."""
        if not isinstance(data, dict):
            raise ConfigError('System file must contain a JSON object')
        cleaned = {}
        for key in ('vars', 'generators'):
            if key not in data:
                raise ConfigError(f'Field {key} is required')
        names = data['vars']
        if not isinstance(names, list) or not names:
            raise ConfigError('vars must be a non-empty list of names')
        for name in names:
            if not isinstance(name, str) or not _NAME_RE.match(name):
                raise ConfigError(f'Invalid variable name {name!r}')
        if len(set(names)) != len(names):
            raise ConfigError('Variable names must be unique')
        cleaned['vars'] = tuple(names)

        cleaned['order'] = str(data.get('order', 'deglex'))
        if cleaned['order'] not in ('deglex', 'degrevlex', 'lex'):
            raise ConfigError(f'Unknown order {cleaned["order"]!r}')
        cleaned['field'] = str(data.get('field', 'Q'))
        parse_field(cleaned['field'])

        generators = data['generators']
        if not isinstance(generators, list) or not all(isinstance(g, str) for g in generators):
            raise ConfigError('generators must be a list of series strings')
        cleaned['generators'] = tuple(generators)

        if data.get('precision') is not None:
            try:
                precision = int(data['precision'])
            except (TypeError, ValueError):
                raise ConfigError(f'precision must be an integer, got {data["precision"]!r}')
            if precision < 1:
                raise ConfigError('precision must be at least 1')
            cleaned['precision'] = precision

        priority = data.get('priority')
        if priority is not None:
            if (not isinstance(priority, list) or not all(isinstance(p, str) for p in priority)
                    or sorted(priority) != sorted(names)):
                raise ConfigError('priority must list every variable exactly once')
            cleaned['priority'] = tuple(priority)
        return cleaned

    @classmethod
    def from_dict(cls, data: dict) -> 'SystemConfig':
        return cls(**cls.validate(data))

    @classmethod
    def load(cls, path) -> 'SystemConfig':
        try:
            with open(Path(path), encoding='utf-8') as handle:
                data = json.load(handle)
        except OSError as e:
            raise ConfigError(f'Cannot read system file {path}: {e}')
        except json.JSONDecodeError as e:
            raise ConfigError(f'System file {path} is not valid JSON: {e}')
        return cls.from_dict(data)

    @classmethod
    def bundled(cls, name: str) -> 'SystemConfig':
        """One of the system files shipped with the package, by name."""
        if not _BUNDLED_RE.match(name) or not (BUNDLED_SYSTEMS / f'{name}.json').is_file():
            raise ConfigError(f'Unknown bundled system {name!r}')
        return cls.load(BUNDLED_SYSTEMS / f'{name}.json')

    def to_dict(self) -> dict:
        data = {
            'vars': list(self.vars),
            'order': self.order,
            'field': self.field,
            'generators': list(self.generators),
        }
        if self.precision is not None:
            data['precision'] = self.precision
        if self.priority is not None:
            data['priority'] = list(self.priority)
        return data

    @property
    def coefficient_field(self) -> CoefficientField:
        return parse_field(self.field)

    @property
    def monomial_order(self) -> MonomialOrder:
        priority = None
        if self.priority is not None:
            priority = [self.vars.index(name) for name in self.priority]
        return MonomialOrder.create(self.order, len(self.vars), priority)

    def parse(self, text: str) -> Series:
        """Parse series text over this system's variables and field."""
        return parse_series(text, self.vars, self.coefficient_field)

    def build(self) -> RewriteSystem:
        """Parse the generators into a rewrite system."""
        if 'system' not in self._cache:
            field_ = self.coefficient_field
            generators = []
            for index, text in enumerate(self.generators):
                series = parse_series(text, self.vars, field_)
                if series.is_zero():
                    raise ZeroSeries(f'Generator {index + 1} ({text!r}) is zero')
                generators.append(series)
            self._cache['system'] = RewriteSystem(generators, self.monomial_order, field_, self.vars)
        return self._cache['system']


class RewriteStepSchema:
    """Rewrite step serialization schema (generator indices are 1-based in JSON)."""

    @staticmethod
    def serialize(step: RewriteStep, system: RewriteSystem, k: int = None) -> Dict:
        data = {
            'monomial': step.monomial.format(system.names),
            'generator': step.generator + 1,
            'quotient': step.quotient.format(system.names),
            'coeff': system.field.format(step.coeff),
        }
        if k is not None:
            data['k'] = k
        return data

    @staticmethod
    def deserialize(data: Dict, system: RewriteSystem) -> RewriteStep:
        try:
            return RewriteStep(
                monomial=parse_monomial(data['monomial'], system.names),
                generator=int(data['generator']) - 1,
                quotient=parse_monomial(data['quotient'], system.names),
                coeff=system.field.parse(data['coeff']),
            )
        except KeyError as e:
            raise ParseError(f'Missing step field {e}')

    @staticmethod
    def serialize_list(steps: Sequence[RewriteStep], system: RewriteSystem) -> List[Dict]:
        return [RewriteStepSchema.serialize(step, system, k) for k, step in enumerate(steps)]

    @staticmethod
    def deserialize_list(items: Sequence[Dict], system: RewriteSystem) -> Tuple[RewriteStep, ...]:
        return tuple(RewriteStepSchema.deserialize(item, system) for item in items)

    @staticmethod
    def render(step: RewriteStep, system: RewriteSystem, k: int) -> str:
        coeff = system.field.format(step.coeff)
        return (f'  k={k}: {step.monomial.format(system.names)} via s{step.generator + 1} '
                f'(quotient {step.quotient.format(system.names)}, coeff {coeff})')


class ReductionResultSchema:
    """Reduction result serialization schema."""

    @staticmethod
    def serialize(result: ReductionResult, system: RewriteSystem) -> Dict:
        order = system.order
        return {
            'input': SeriesSchema.serialize(result.source, system.names, order),
            'normal_form': SeriesSchema.serialize(result.normal_form, system.names, order),
            'precision': result.precision,
            'steps': RewriteStepSchema.serialize_list(result.steps, system),
            'cofactors': [SeriesSchema.serialize(c, system.names, order) for c in result.cofactors],
        }

    @staticmethod
    def deserialize(data: Dict, system: RewriteSystem) -> ReductionResult:
        names, field_ = system.names, system.field
        return ReductionResult(
            source=SeriesSchema.deserialize(data['input'], names, field_),
            normal_form=SeriesSchema.deserialize(data['normal_form'], names, field_),
            steps=RewriteStepSchema.deserialize_list(data['steps'], system),
            cofactors=tuple(SeriesSchema.deserialize(c, names, field_) for c in data['cofactors']),
            precision=int(data['precision']),
        )

    @staticmethod
    def render(result: ReductionResult, system: RewriteSystem) -> str:
        lines = [
            f'normal form: {render_series(result.normal_form, system.names, system.order, with_precision=True)}',
            f'steps: {len(result.steps)}',
        ]
        lines.extend(RewriteStepSchema.render(step, system, k) for k, step in enumerate(result.steps))
        for index, cofactor in enumerate(result.cofactors):
            lines.append(f'  f{index + 1} = {render_series(cofactor, system.names, system.order)}')
        return '\n'.join(lines)
