import pytest

from migc.model import make_query_set, validate_distribution


@pytest.fixture
def example1_dist():
    # X in {1,2,3,4} with P = (0.1, 0.4, 0.2, 0.3)
    return validate_distribution([1, 2, 3, 4], [0.1, 0.4, 0.2, 0.3])


@pytest.fixture
def example1_qset():
    # admissible questions: is X in {1,2}? {2,3}? {3,4}?  (labels are 1-based)
    return make_query_set(2, 4, [[[0, 1]], [[1, 2]], [[2, 3]]])


@pytest.fixture
def example2_dist():
    # X in {1..5} with P = (0.1, 0.2, 0.3, 0.15, 0.25), arity 3, unconstrained
    return validate_distribution([1, 2, 3, 4, 5], [0.1, 0.2, 0.3, 0.15, 0.25])


@pytest.fixture
def example2_qset():
    return make_query_set(3, 5, unconstrained=True)
