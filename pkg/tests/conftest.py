import pytest

from resetwords.corpus import sample_satisfiable, sample_unsatisfiable
from resetwords.gadgets import build_base_gadget


@pytest.fixture(scope="session")
def sat_gadget():
    return build_base_gadget(sample_satisfiable())


@pytest.fixture(scope="session")
def unsat_gadget():
    return build_base_gadget(sample_unsatisfiable())
