import pytest

from ipgap.gapcore import gap_report
from ipgap.models import entry_instance, k4_model


@pytest.fixture(scope="session")
def k4():
    """Instance and report for the six-face 2x2x2x2 model, built once."""
    inst = entry_instance(k4_model())
    return inst, gap_report(inst)
