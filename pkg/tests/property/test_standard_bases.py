"""Membership, cofactors and confluence on random standard bases."""
import random
from itertools import combinations

import pytest

from fpsrewrite.modules.algebra.models import monomial_count
from fpsrewrite.modules.cofactor.service import CofactorService
from fpsrewrite.modules.confluence.service import ConfluenceService
from fpsrewrite.modules.oracle.service import OracleService
from fpsrewrite.modules.rewrite.models import TieBreak
from fpsrewrite.modules.rewrite.service import RewriteService

pytestmark = pytest.mark.property

FIELDS = ('Q', 'Fp:7')
ACCEPTANCE_SYSTEMS = 200
ACCEPTANCE_SEED = 8


def _leads(system):
    return [system.lead(index) for index in range(len(system))]


@pytest.fixture
def systems(rng, mixed_standard_basis):
    """Forty random standard bases from every family, over Q and F_7."""
    return [mixed_standard_basis(rng, FIELDS[i % 2]) for i in range(40)]


@pytest.fixture(scope='module')
def acceptance_systems(families):
    """(config, D) pairs: every family, n <= 3, at most four generators, D <= 10."""
    rng = random.Random(ACCEPTANCE_SEED)
    factories = list(families.values())
    return [(factories[i % 3](rng, FIELDS[i % 2]), rng.randint(3, 10)) for i in range(ACCEPTANCE_SYSTEMS)]


def test_families_cover_shared_and_higher_degree_leads(systems):
    leads = [[g.lm for g in _leads(config.build())] for config in systems]
    assert any(lm.degree >= 2 for lms in leads for lm in lms)
    assert any(a.lcm(b) != a * b for lms in leads for a, b in combinations(lms, 2))
    assert all(len(config.vars) <= 3 and len(config.generators) <= 4 for config in systems)


@pytest.mark.parametrize('family', ['variable', 'monomial_unit', 'idempotent_variant'])
def test_each_family_passes_the_check(family, families, rng):
    for index in range(6):
        config = families[family](rng, FIELDS[index % 2])
        precision = rng.randint(3, 7)
        assert ConfluenceService.check_standard_basis(config.build(), precision).passed, config.generators


def test_idempotent_variant_matches_the_bundled_system(families, rng):
    config = families['idempotent_variant'](rng)
    system = config.build()
    assert sorted(g.lm.degree for g in _leads(system)) == [1, 1, 1, 1]
    f = config.parse(config.priority[2])
    assert RewriteService.reduce_to_precision(f, system, 6).normal_form.is_zero()


def test_monomial_unit_leads_are_the_monomials(families, rng):
    for _ in range(10):
        system = families['monomial_unit'](rng).build()
        for generator in _leads(system):
            assert generator.lm in generator.series.support
            assert all(generator.lm.divides(m) is not None for m in generator.series.support)


def test_variable_basis_leads_are_variables(families, rng):
    for _ in range(10):
        system = families['variable'](rng).build()
        assert all(g.lm.degree == 1 for g in _leads(system))


def test_generated_systems_pass_the_check(systems, rng):
    for config in systems:
        precision = rng.randint(3, 6)
        assert ConfluenceService.check_standard_basis(config.build(), precision).passed, config.generators


def test_members_have_verified_cofactors(systems, rng):
    for config in systems:
        system = config.build()
        precision = rng.randint(3, 6)
        for _ in range(3):
            f = OracleService.random_member(rng, system, precision)
            verdict = CofactorService.limit_coefficients(f, system, precision)
            assert verdict.member, (config.generators, f)
            assert CofactorService.verify_cofactor_identity(f, verdict, system, precision)
            assert CofactorService.trace_violations(verdict.trace, system) == []


def test_normal_forms_do_not_depend_on_tie_break(systems, rng, random_series_text):
    for config in systems:
        system = config.build()
        for _ in range(3):
            f = config.parse(random_series_text(rng, config.vars))
            smallest = RewriteService.reduce_to_precision(f, system, 5, TieBreak.SMALLEST)
            largest = RewriteService.reduce_to_precision(f, system, 5, TieBreak.LARGEST)
            assert smallest.normal_form == largest.normal_form


def test_one_step_reducts_join(systems, rng, random_series_text):
    for config in systems:
        system = config.build()
        f = config.parse(random_series_text(rng, config.vars, low=1))
        reducts = [RewriteService.rewrite_step(f, step, system)
                   for step in RewriteService.applicable_steps(f, system)]
        for g in reducts[:3]:
            for h in reducts[:3]:
                result = ConfluenceService.join(g, h, system, 5)
                assert result.joined
                assert RewriteService.combine(result.certificate, system, 5).agrees_with(g.sub(h), 5)


def test_oracle_agrees_with_elimination(systems):
    for index, config in enumerate(systems[:8]):
        report = OracleService.cross_validate(config.build(), 4, trials=5, seed=index)
        assert report.standard_basis
        assert report.disagreements == ()


def test_elimination_terminates_within_the_monomial_count(systems, rng, random_series_text):
    for config in systems:
        system = config.build()
        f = config.parse(random_series_text(rng, config.vars))
        verdict = CofactorService.limit_coefficients(f, system, 5)
        assert verdict.trace.steps <= monomial_count(system.nvars, 5)


@pytest.mark.slow
def test_cofactor_identity_on_acceptance_systems(acceptance_systems):
    rng = random.Random(ACCEPTANCE_SEED)
    for config, precision in acceptance_systems:
        system = config.build()
        assert ConfluenceService.check_standard_basis(system, precision).passed, config.generators
        for _ in range(3):
            f = OracleService.random_member(rng, system, precision)
            verdict = CofactorService.limit_coefficients(f, system, precision)
            assert verdict.member, (config.generators, precision, f)
            assert CofactorService.verify_cofactor_identity(f, verdict, system, precision)
            assert CofactorService.trace_violations(verdict.trace, system) == []


@pytest.mark.slow
def test_tie_break_independence_on_acceptance_systems(acceptance_systems, random_series_text):
    rng = random.Random(ACCEPTANCE_SEED + 1)
    for config, precision in acceptance_systems:
        system = config.build()
        for _ in range(50):
            f = config.parse(random_series_text(rng, config.vars))
            smallest = RewriteService.reduce_to_precision(f, system, precision, TieBreak.SMALLEST)
            largest = RewriteService.reduce_to_precision(f, system, precision, TieBreak.LARGEST)
            assert smallest.normal_form == largest.normal_form, (config.generators, precision, f)


@pytest.mark.slow
def test_one_step_reducts_join_on_acceptance_systems(acceptance_systems, random_series_text):
    rng = random.Random(ACCEPTANCE_SEED + 2)
    for config, precision in acceptance_systems:
        system = config.build()
        f = config.parse(random_series_text(rng, config.vars, low=1))
        reducts = [RewriteService.rewrite_step(f, step, system)
                   for step in RewriteService.applicable_steps(f, system)]
        for g, h in combinations(reducts[:3], 2):
            assert ConfluenceService.join(g, h, system, precision).joined


@pytest.mark.slow
def test_idempotent_system_oracle_agreement(idempotent):
    report = OracleService.cross_validate(idempotent, 8, trials=100, seed=0)
    assert report.checked == 200
    assert report.standard_basis
    assert report.disagreements == ()


@pytest.mark.slow
@pytest.mark.parametrize('index', range(5))
def test_oracle_agreement_on_generated_systems(index, acceptance_systems):
    config, _ = acceptance_systems[index]
    report = OracleService.cross_validate(config.build(), 8, trials=100, seed=index)
    assert report.standard_basis
    assert report.disagreements == ()
