import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sdg_interactions import load_catalog
from sdg_interactions.correlation import load_results_file
from sdg_interactions.fixture_io import load_expert_file

REPO = Path(__file__).resolve().parents[1]
FIXTURES = REPO / "fixtures"


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def expert_fixture(catalog):
    return load_expert_file(FIXTURES / "expert_answers.csv", catalog)


@pytest.fixture(scope="session")
def indicator_fixture(catalog):
    from sdg_interactions.analytics import IndicatorEvaluations

    results = load_results_file(FIXTURES / "indicator_classes.csv", catalog)
    return IndicatorEvaluations(results=results, loaded=True)
