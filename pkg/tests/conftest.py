import pytest

from widthlab import CanonicalBodyId, make_body

BODIES = list(CanonicalBodyId)


@pytest.fixture(params=BODIES, ids=lambda b: b.value)
def body_id(request):
    return request.param


@pytest.fixture
def body(body_id):
    return make_body(body_id)
