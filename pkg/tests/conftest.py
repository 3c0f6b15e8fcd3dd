import pytest
from hypothesis import HealthCheck, settings

import ringrange as rr

settings.register_profile(
    "ci",
    deadline=None,
    max_examples=25,
    suppress_health_check=[HealthCheck.data_too_large, HealthCheck.too_slow],
)
settings.load_profile("ci")


@pytest.fixture(autouse=True, scope="session")
def _verify_mode():
    """Every witness and counterexample re-verifies during the test run."""
    rr.set_verify_mode(True)
    yield
    rr.set_verify_mode(False)


_RING_CACHE = {}


def get_ring(spec: str) -> rr.Ring:
    if spec not in _RING_CACHE:
        _RING_CACHE[spec] = rr.realize(spec)
    return _RING_CACHE[spec]


@pytest.fixture
def z4():
    return get_ring("Z4")


@pytest.fixture
def z6():
    return get_ring("Z6")


@pytest.fixture
def z7():
    return get_ring("Z7")


@pytest.fixture
def z9():
    return get_ring("Z9")


@pytest.fixture
def z12():
    return get_ring("Z12")


@pytest.fixture
def z36():
    return get_ring("Z36")


@pytest.fixture
def z4x9():
    return get_ring("Z4 x Z9")


@pytest.fixture
def p16():
    """Z4[x]/(x^2): the order-16 local ring that is neither Bezout nor Hermite."""
    return get_ring("Z4[x]/(x^2)")


SMALL_CORPUS_SPECS = [
    "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z12", "Z16", "Z18", "Z24", "Z36",
    "Z2 x Z2", "Z2 x Z4", "Z3 x Z3", "Z4 x Z9", "Z6 x Z6",
    "Z2[x]/(x^2)", "Z2[x]/(x^2+x+1)", "Z3[x]/(x^2)", "Z4[x]/(x^2)", "Z4[x]/(x^2+x+1)",
]


@pytest.fixture(scope="session")
def small_corpus():
    return [rr.realize(s) for s in SMALL_CORPUS_SPECS]
