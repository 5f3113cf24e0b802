import random

import pytest

from reesfiber import fixtures
from reesfiber.oracle import _kernels_py
from reesfiber.oracle._backend import BACKEND, kernels


@pytest.fixture
def rng():
    return random.Random(20261014)


@pytest.fixture
def fix_a():
    return fixtures.fix_a()


@pytest.fixture
def fix_b():
    return fixtures.fix_b()


@pytest.fixture
def fix_c():
    return fixtures.fix_c()


KERNEL_BACKENDS = [pytest.param(_kernels_py, id="python")]
if BACKEND == "compiled":
    KERNEL_BACKENDS.append(pytest.param(kernels, id="compiled"))


@pytest.fixture(scope="module", params=KERNEL_BACKENDS)
def kernel(request):
    return request.param
