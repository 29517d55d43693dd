"""HTTP surface of the v1 API."""
import pytest

pytestmark = pytest.mark.api


class TestReduce:

    def test_reduce_default_system(self, api_client, helpers):
        response = api_client.post('/reduce', {'input': 'z', 'precision': 4})
        data = helpers.assert_response_success(response)
        helpers.assert_json_structure(data, ['input', 'normal_form', 'precision', 'steps', 'cofactors'])
        assert data['normal_form'] == {'text': '0', 'precision': 4}
        assert len(data['steps']) == 4
        assert data['steps'][0]['generator'] == 1

    def test_reduce_largest_tie_break(self, api_client, helpers):
        response = api_client.post('/reduce', {'input': 'z', 'precision': 4, 'tie_break': 'largest'})
        data = helpers.assert_response_success(response)
        assert data['steps'][0]['generator'] == 2

    def test_system_precision_is_the_default(self, api_client, helpers):
        data = helpers.assert_response_success(api_client.post('/reduce', {'input': 'z'}))
        assert data['precision'] == 8
        assert len(data['steps']) == 8

    def test_inline_system(self, api_client, helpers, adversarial_payload):
        payload = {'input': 'x^2*y', 'precision': 8, 'system': adversarial_payload}
        data = helpers.assert_response_success(api_client.post('/reduce', payload))
        assert data['normal_form']['text'] == 'y^6'

    def test_parse_error(self, api_client, helpers):
        error = helpers.assert_response_error(api_client.post('/reduce', {'input': 'x + + y'}), 'ParseError')
        assert error['details']['position'] == 4

    def test_precision_limit(self, api_client, helpers):
        helpers.assert_response_error(
            api_client.post('/reduce', {'input': 'z', 'precision': 17}), 'PreconditionViolation'
        )

    def test_missing_input(self, api_client, helpers):
        helpers.assert_response_error(api_client.post('/reduce', {'precision': 4}), 'ConfigError')

    def test_not_json(self, client, helpers):
        response = client.post('/api/v1/reduce', data='z', content_type='text/plain')
        helpers.assert_response_error(response, 'ConfigError')

    def test_unknown_system(self, api_client, helpers):
        helpers.assert_response_error(api_client.post('/reduce', {'input': 'z', 'system': 'nope'}), 'ConfigError')

    def test_bad_tie_break(self, api_client, helpers):
        helpers.assert_response_error(
            api_client.post('/reduce', {'input': 'z', 'tie_break': 'random'}), 'ConfigError'
        )


class TestMembership:

    def test_member(self, api_client, helpers):
        data = helpers.assert_response_success(api_client.post('/member', {'input': 'z', 'precision': 3}))
        assert data['verdict'] == 'InIdealModD'
        assert [c['text'] for c in data['cofactors']] == ['1', '0', '1 + y', '0']

    def test_not_member(self, api_client, helpers):
        data = helpers.assert_response_success(api_client.post('/member', {'input': '1 + x', 'precision': 3}))
        assert data['verdict'] == 'NotInIdealModD'
        assert data['irreducible'] == '1'

    def test_cofactor(self, api_client, helpers):
        data = helpers.assert_response_success(api_client.post('/cofactor', {'input': 'z', 'precision': 3}))
        assert data['identity'] is True
        assert data['violations'] == []
        assert data['certified_cofactors'][2] == {'text': '1 + y', 'precision': 2}


class TestConfluence:

    def test_join(self, api_client, helpers):
        data = helpers.assert_response_success(api_client.post('/join', {'g': 'y', 'h': 'x', 'precision': 6}))
        assert data['verdict'] == 'Joined'
        assert len(data['eliminated']) == 10
        assert data['distances'][-1]['text'] == '<= 1/64'

    def test_join_needs_both_sides(self, api_client, helpers):
        helpers.assert_response_error(api_client.post('/join', {'g': 'y'}), 'ConfigError')

    def test_check_sb_idempotent(self, api_client, helpers):
        data = helpers.assert_response_success(api_client.post('/check-sb', {'max_workers': 2}))
        assert data['passed'] is True
        assert len(data['pairs']) == 6

    def test_check_sb_adversarial(self, api_client, helpers):
        data = helpers.assert_response_success(api_client.post('/check-sb', {'system': 'adversarial'}))
        assert data['passed'] is False
        assert data['pairs'][0]['irreducible'] == 'y^6'
        assert 'Semi-check' in data['note']

    def test_too_many_workers(self, api_client, helpers):
        helpers.assert_response_error(api_client.post('/check-sb', {'max_workers': 64}), 'ConfigError')

    def test_delta(self, api_client, helpers):
        data = helpers.assert_response_success(api_client.post('/delta', {'f': 'z', 'g': 'y'}))
        assert data['text'] == '1/2'

    def test_high_valuation_delta(self, api_client, helpers):
        data = helpers.assert_response_success(api_client.post('/delta', {'f': 'x^20000', 'g': '0'}))
        assert data['exponent'] == 20000
        assert data['text'] == '2^-20000'


class TestOracle:

    def test_oracle_member(self, api_client, helpers):
        payload = {'input': 'y^6', 'precision': 8, 'system': 'adversarial'}
        data = helpers.assert_response_success(api_client.post('/oracle/member', payload))
        assert data['member'] is True

    def test_cross_validate(self, api_client, helpers):
        payload = {'system': 'adversarial', 'precision': 8, 'trials': 0, 'inputs': ['y^6']}
        data = helpers.assert_response_success(api_client.post('/oracle/cross-validate', payload))
        assert data['expected'] == 1
        assert data['bugs'] == 0

    def test_bad_seed(self, api_client, helpers):
        response = api_client.post('/oracle/cross-validate', {'trials': 1, 'seed': 'abc'})
        helpers.assert_response_error(response, 'ConfigError')

    def test_monomial_count_limit(self, api_client, helpers):
        names = [chr(ord('a') + i) for i in range(12)]
        system = {'vars': names, 'order': 'deglex', 'field': 'Q', 'generators': ['a']}
        error = helpers.assert_response_error(
            api_client.post('/oracle/member', {'input': 'a', 'precision': 16, 'system': system}),
            'PreconditionViolation',
        )
        assert '17383860 monomials' in error['message']

    def test_generator_count_limit(self, api_client, helpers):
        system = {'vars': ['x'], 'order': 'deglex', 'field': 'Q',
                  'generators': [f'x^{k}' for k in range(1, 18)]}
        helpers.assert_response_error(
            api_client.post('/oracle/cross-validate', {'precision': 4, 'system': system}),
            'PreconditionViolation',
        )


class TestTars:

    def test_cyclic_demo(self, api_client, helpers):
        response = api_client.get('/tars/cyclic/demo', query_string={'eps': '2^-10'})
        data = helpers.assert_response_success(response)
        assert data['status'] == 'refuted'
        assert [path['length'] for path in data['paths']] == [11, 11]
        assert data['rewriting_loop'] is True

    def test_nbar_demo(self, api_client, helpers):
        response = api_client.get('/tars/nbar/demo', query_string={'eps': '2^-8'})
        data = helpers.assert_response_success(response)
        assert data['paths'][0]['states'][-1] == '(9,0)'
        assert data['rewriting_loop'] is False

    def test_unknown_system(self, api_client, helpers):
        helpers.assert_response_error(api_client.get('/tars/mobius/demo'), 'DomainViolation')

    def test_bad_epsilon(self, api_client, helpers):
        response = api_client.get('/tars/nbar/demo', query_string={'eps': 'tiny'})
        helpers.assert_response_error(response, 'ParseError')


class TestErrorHandlers:

    def test_not_found(self, client, helpers):
        helpers.assert_response_error(client.get('/api/v1/missing'), 'NotFound', 404)

    def test_method_not_allowed(self, api_client, helpers):
        helpers.assert_response_error(api_client.get('/reduce'), 'MethodNotAllowed', 405)
