import pytest

from qchkit import _purekernels
from qchkit.grassmann import CIData
from qchkit.qring import build_ring
from qchkit.verify import sweep_cases

try:
    from qchkit import _speedups
except ImportError:  # extension not built
    _speedups = None

BACKENDS = [pytest.param(_purekernels, id="python")]
BACKENDS.append(
    pytest.param(_speedups, id="compiled", marks=pytest.mark.skipif(_speedups is None, reason="extension not built"))
)

SWEEP = sweep_cases(max_r=3, max_degree=5)


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


@pytest.fixture(scope="session")
def cubic3():
    return CIData(3, (3,))


@pytest.fixture(scope="session")
def cubic_ring(cubic3):
    return build_ring(cubic3)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[n])
