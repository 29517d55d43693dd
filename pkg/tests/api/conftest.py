"""API test configuration and fixtures."""
import pytest


@pytest.fixture
def api_client(client):
    """JSON client for the v1 endpoints."""

    class APIClient:
        prefix = '/api/v1'

        def __init__(self, client):
            self.client = client

        def get(self, endpoint, **kwargs):
            return self.client.get(f"{self.prefix}{endpoint}", **kwargs)

        def post(self, endpoint, payload=None, **kwargs):
            return self.client.post(f"{self.prefix}{endpoint}", json=payload, **kwargs)

    return APIClient(client)


@pytest.fixture
def adversarial_payload():
    """System file object for {x^2 - y^5, xy}."""
    return {
        'vars': ['x', 'y'],
        'order': 'deglex',
        'field': 'Q',
        'generators': ['x^2 - y^5', 'x*y'],
    }


class APITestHelpers:
    """Helper methods for API testing."""

    @staticmethod
    def assert_response_success(response, expected_status=200):
        """Assert response is successful and return its data."""
        assert response.status_code == expected_status, (
            f"Expected status {expected_status}, got {response.status_code}. "
            f"Response: {response.get_data(as_text=True)}"
        )
        body = response.get_json()
        assert body['success'] is True
        assert 'timestamp' in body
        return body.get('data')

    @staticmethod
    def assert_response_error(response, code, expected_status=400):
        """Assert response is an error envelope with the given code."""
        assert response.status_code == expected_status
        body = response.get_json()
        assert body['success'] is False
        assert body['error']['code'] == code
        return body['error']

    @staticmethod
    def assert_json_structure(data, required_fields):
        """Assert JSON has required fields."""
        for field in required_fields:
            assert field in data, f"Missing field: {field}"


@pytest.fixture
def helpers():
    """Provide API test helpers."""
    return APITestHelpers
