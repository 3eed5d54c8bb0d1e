import pytest

from techcurves import load_bundled, run_full_projection


@pytest.fixture(scope="session")
def base_scenario():
    return load_bundled("base-2030")


@pytest.fixture(scope="session")
def base_results(base_scenario):
    return run_full_projection(base_scenario)
