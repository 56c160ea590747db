import math
import random

import numpy as np
import pytest

from sdg_interactions import kernels

from _oracles import oracle_average_ranks, oracle_spearman

BOTH_PATHS = [("numpy", kernels.average_ranks_numpy, kernels.spearman_numpy)]
if kernels.USING_NUMBA:
    BOTH_PATHS.append(("numba", kernels.average_ranks_numba, kernels.spearman_numba))


@pytest.fixture(scope="module", autouse=True)
def _warm():
    kernels.warmup()


@pytest.mark.parametrize("name,ranks_fn,_", BOTH_PATHS, ids=lambda p: p if isinstance(p, str) else "")
def test_average_ranks_against_oracle(name, ranks_fn, _):
    rng = random.Random(7)
    for _round in range(200):
        n = rng.randint(1, 12)
        values = [float(rng.randint(1, 5)) for _ in range(n)]
        got = ranks_fn(np.array(values))
        expected = oracle_average_ranks(values)
        assert np.allclose(got, expected, atol=1e-12)


@pytest.mark.parametrize("name,_,spearman_fn", BOTH_PATHS, ids=lambda p: p if isinstance(p, str) else "")
def test_spearman_matches_oracle(name, _, spearman_fn):
    rng = random.Random(11)
    for _round in range(300):
        n = rng.randint(2, 10)
        x = [float(rng.randint(1, 5)) for _ in range(n)]
        y = [float(rng.randint(1, 5)) for _ in range(n)]
        got = float(spearman_fn(np.array(x), np.array(y)))
        expected = oracle_spearman(x, y)
        if expected is None:
            assert math.isnan(got)
        else:
            assert abs(got - expected) < 1e-12


def test_frozen_tie_example():
    # ranks of x: [1, 2.5, 2.5, 4]; ranks of y: [1, 3, 2, 4]
    x = np.array([1.0, 2.0, 2.0, 4.0])
    y = np.array([1.0, 3.0, 2.0, 4.0])
    expected = 0.9486832980505138  # frozen from the brute-force oracle
    assert abs(oracle_spearman(list(x), list(y)) - expected) < 1e-15
    assert abs(float(kernels.spearman(x, y)) - expected) < 1e-12


def test_numba_and_numpy_paths_agree():
    if not kernels.USING_NUMBA:
        pytest.skip("numba disabled in this environment")
    rng = random.Random(3)
    for _round in range(200):
        n = rng.randint(2, 30)
        x = np.array([float(rng.randint(1, 9)) for _ in range(n)])
        y = np.array([float(rng.randint(1, 9)) for _ in range(n)])
        a = float(kernels.spearman_numba(x, y))
        b = float(kernels.spearman_numpy(x, y))
        assert (math.isnan(a) and math.isnan(b)) or abs(a - b) < 1e-12


def test_degenerate_inputs_are_nan():
    const = np.array([2.0, 2.0, 2.0])
    varying = np.array([1.0, 2.0, 3.0])
    assert math.isnan(float(kernels.spearman(const, varying)))
    assert math.isnan(float(kernels.spearman(varying, const)))
    assert math.isnan(float(kernels.spearman(np.array([1.0]), np.array([2.0]))))


def test_aligned_intersection():
    years_a = np.array([2000, 2001, 2002, 2003], dtype=np.int64)
    years_b = np.array([2001, 2002, 2003, 2004], dtype=np.int64)
    vals_a = np.array([1.0, 2.0, 3.0, 4.0])
    vals_b = np.array([10.0, 20.0, 30.0, 40.0])
    rho = float(kernels.spearman_aligned(years_a, vals_a, years_b, vals_b, 2))
    assert abs(rho - 1.0) < 1e-12
    # overlap below the minimum is undefined
    assert math.isnan(float(kernels.spearman_aligned(years_a, vals_a, years_b, vals_b, 4)))
    disjoint = np.array([2010, 2011], dtype=np.int64)
    assert math.isnan(
        float(kernels.spearman_aligned(years_a, vals_a, disjoint, vals_b[:2], 1))
    )


def test_env_flag_selects_numpy(monkeypatch):
    import importlib
    import subprocess
    import sys

    code = (
        "import os; os.environ['SDG_INTERACTIONS_NO_NUMBA']='1';"
        "from sdg_interactions import kernels;"
        "assert not kernels.USING_NUMBA;"
        "import numpy as np;"
        "print(kernels.spearman(np.array([1.,2.,3.]), np.array([1.,2.,3.])))"
    )
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == "1.0"
