"""Linear-algebra membership oracle and cross-validation."""
import random

import pytest

from fpsrewrite.core.errors import PrecisionLoss
from fpsrewrite.modules.algebra.models import monomial_count
from fpsrewrite.modules.oracle.models import DisagreementKind, InputSource
from fpsrewrite.modules.oracle.schemas import CrossValidationReportSchema, OracleSolutionSchema
from fpsrewrite.modules.oracle.service import OracleService
from fpsrewrite.modules.rewrite.schemas import SystemConfig

pytestmark = pytest.mark.unit


class TestPrepare:

    def test_shape(self, idempotent):
        matrix = OracleService.prepare(idempotent, 3)
        # each generator has a linear leading monomial: multipliers of degree < 2
        assert matrix.shape == (4 * monomial_count(3, 2), monomial_count(3, 3))
        assert matrix.rank == monomial_count(3, 3) - 1

    def test_rows_skip_truncated_multiples(self, adversarial):
        matrix = OracleService.prepare(adversarial, 3)
        assert {j for _, j in matrix.rows} == {0, 1}
        assert len(matrix.rows) == 2


class TestMembershipOracle:

    def test_member_with_solution(self, idempotent, parse):
        f = parse('z + 2*x*y')
        solution = OracleService.membership_oracle(f, idempotent, 4)
        assert solution is not None
        assert OracleService.verify_solution(f, solution, idempotent)

    def test_constant_is_not_a_member(self, idempotent, parse):
        assert OracleService.membership_oracle(parse('1 + x'), idempotent, 3) is None

    def test_zero(self, idempotent):
        solution = OracleService.membership_oracle(idempotent.zero(), idempotent, 3)
        assert all(c.is_zero() for c in solution.cofactors)

    def test_reused_matrix(self, idempotent, parse):
        matrix = OracleService.prepare(idempotent, 4)
        for text in ('x', 'y^2 - z', 'x*y*z'):
            f = parse(text)
            assert OracleService.verify_solution(f, OracleService.membership_oracle(f, idempotent, 4, matrix), idempotent)

    def test_adversarial_y6(self, adversarial, adversarial_config):
        f = adversarial_config.parse('y^6')
        solution = OracleService.membership_oracle(f, adversarial, 8)
        assert solution is not None
        assert OracleService.verify_solution(f, solution, adversarial)

    def test_adversarial_non_member(self, adversarial, adversarial_config):
        assert OracleService.membership_oracle(adversarial_config.parse('y^5'), adversarial, 8) is None

    def test_prime_field(self):
        config = SystemConfig.from_dict({'vars': ['x', 'y'], 'field': 'Fp:5',
                                         'generators': ['x - 2*y^2', 'y^3']})
        system = config.build()
        f = config.parse('3*x*y + y^3')
        solution = OracleService.membership_oracle(f, system, 5)
        assert OracleService.verify_solution(f, solution, system)

    def test_precision_loss(self, idempotent, parse):
        with pytest.raises(PrecisionLoss):
            OracleService.membership_oracle(parse('x').truncate(2), idempotent, 4)


class TestRandomInputs:

    def test_random_series_is_reproducible(self, idempotent):
        first = OracleService.random_series(random.Random(3), idempotent, 4)
        second = OracleService.random_series(random.Random(3), idempotent, 4)
        assert first == second
        assert all(m.degree < 4 for m in first.support)

    def test_random_member_lies_in_the_ideal(self, idempotent):
        rng = random.Random(11)
        for _ in range(5):
            f = OracleService.random_member(rng, idempotent, 4)
            assert OracleService.membership_oracle(f, idempotent, 4) is not None

    def test_prime_field_coefficients(self):
        system = SystemConfig.from_dict({'vars': ['x'], 'field': 'Fp:2', 'generators': ['x']}).build()
        f = OracleService.random_series(random.Random(0), system, 3)
        assert all(system.field.format(c) == '1' for _, c in f.terms())


class TestCrossValidate:

    def test_standard_basis_agrees(self, idempotent):
        report = OracleService.cross_validate(idempotent, 5, trials=10, seed=1)
        assert report.standard_basis
        assert report.checked == 20
        assert report.disagreements == ()

    def test_adversarial_disagreement_is_expected(self, adversarial, adversarial_config):
        report = OracleService.cross_validate(adversarial, 8, trials=0, seed=0,
                                              inputs=[adversarial_config.parse('y^6')])
        assert not report.standard_basis
        (item,) = report.disagreements
        assert item.kind is DisagreementKind.EXPECTED
        assert item.source is InputSource.SUPPLIED
        assert item.oracle_member and not item.reduction_member
        assert report.bugs == ()

    def test_seed_determines_the_report(self, idempotent):
        first = OracleService.cross_validate(idempotent, 4, trials=5, seed=7)
        second = OracleService.cross_validate(idempotent, 4, trials=5, seed=7)
        assert first == second

    def test_report_schema(self, adversarial, adversarial_config):
        report = OracleService.cross_validate(adversarial, 8, trials=0, seed=0,
                                              inputs=[adversarial_config.parse('y^6')])
        data = CrossValidationReportSchema.serialize(report, adversarial)
        assert data['expected'] == 1
        assert data['bugs'] == 0
        assert data['disagreements'][0]['input']['text'] == 'y^6'
        text = CrossValidationReportSchema.render(report, adversarial)
        assert text.splitlines()[0] == (
            'checked 1 inputs at precision 8 (seed 0): 1 disagreements (1 expected, 0 bugs)'
        )
        assert '  [expected] y^6: reduction non-member, oracle member' in text.splitlines()


class TestOracleSolutionSchema:

    def test_non_member(self, idempotent):
        assert OracleSolutionSchema.serialize(None, idempotent, 3) == {
            'member': False, 'precision': 3, 'cofactors': None,
        }
        assert OracleSolutionSchema.render(None, idempotent, 3) == 'not a member of I + (X)^3'

    def test_member(self, idempotent, parse):
        solution = OracleService.membership_oracle(parse('z - y'), idempotent, 3)
        data = OracleSolutionSchema.serialize(solution, idempotent, 3)
        assert data['member'] is True
        assert len(data['cofactors']) == 4
        assert OracleSolutionSchema.render(solution, idempotent, 3).startswith('member of I + (X)^3\n  u1 = ')
