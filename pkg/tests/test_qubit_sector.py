import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from chainbell.errors import NoneFoundError
from chainbell.qubit_sector import (
    CORRELATION_TENSOR,
    BlochSetting,
    SectorScenario,
    large_n_limit,
    minimal_violating_half_chain,
    qubit_mismatch,
    sector_chain_margin,
    sector_embed_scale,
    sector_margin_closed_form,
    sector_margin_link_sum,
)

TOL = 1e-12


@given(st.floats(-10, 10), st.floats(-10, 10))
def test_tensor_on_zx_plane(a, b):
    va, vb = BlochSetting(a).vector, BlochSetting(b).vector
    assert np.linalg.norm(va) == pytest.approx(1.0, abs=TOL)
    assert va[1] == 0.0
    assert va @ CORRELATION_TENSOR @ vb == pytest.approx(math.cos(a - b), abs=TOL)


def test_tensor_y_term():
    y = np.array([0.0, 1.0, 0.0])
    assert y @ CORRELATION_TENSOR @ y == -1.0


@pytest.mark.parametrize(
    "a, b, expected",
    [(0.3, 0.3, 0.0), (0.2, 0.2 + math.pi, 1.0), (0.0, math.pi / 4, (1 - math.sqrt(2) / 2) / 2)],
)
def test_qubit_mismatch(a, b, expected):
    assert qubit_mismatch(BlochSetting(a), BlochSetting(b)) == pytest.approx(expected, abs=TOL)


def test_qubit_mismatch_value():
    assert qubit_mismatch(BlochSetting(0), BlochSetting(math.pi / 4)) == pytest.approx(0.146447, abs=1e-6)


def test_midpoint_identity():
    for gamma in (1, 2, 4, 8):
        for n in (2, 3, 7, 20):
            sc = SectorScenario(n, gamma)
            for k in range(n - 1):
                a0 = sc.setting(2 * k).vector
                a2 = sc.setting(2 * k + 2).vector
                b1 = sc.setting(2 * k + 1).vector
                np.testing.assert_allclose(a0 + a2, 2 * math.cos(sc.step) * b1, atol=TOL)


def test_two_paths_agree():
    for gamma in (1, 2, 4, 8):
        for n in range(2, 65):
            sc = SectorScenario(n, gamma)
            assert sector_margin_closed_form(sc) == pytest.approx(
                sector_margin_link_sum(sc), abs=TOL
            )


def test_example_values():
    assert sector_chain_margin(SectorScenario(2, 1)) == pytest.approx(0.828427, abs=1e-6)
    expected = 2 * (math.cos(math.pi / 4) - 1) + math.cos(math.pi / 4) - math.cos(3 * math.pi / 4)
    assert sector_chain_margin(SectorScenario(2, 1)) == pytest.approx(expected, abs=TOL)
    assert sector_chain_margin(SectorScenario(4, 4)) == pytest.approx(0.193283, abs=1e-6)
    # already positive at n=2 for large windows too
    assert sector_chain_margin(SectorScenario(2, 16)) == pytest.approx(0.00720986, abs=1e-8)


def test_margin_positive_from_n2():
    # small-angle expansion: (2n-1)(2n-2) delta^2 / 2 > 0
    for gamma in (1, 1.5, 2, 4, 8, 16, 64, 1000):
        for n in (2, 3, 10, 100):
            assert sector_chain_margin(SectorScenario(n, gamma)) > 0


@pytest.mark.parametrize("gamma", [1, 2, 4, 8, 16, 32])
def test_minimal_half_chain(gamma):
    assert minimal_violating_half_chain(gamma) == 2


def test_minimal_half_chain_cap():
    with pytest.raises(NoneFoundError):
        minimal_violating_half_chain(4, cap=1)


@pytest.mark.parametrize("gamma", [1, 2, 4, 8, 16, 32])
def test_large_n_limit(gamma):
    m = sector_chain_margin(SectorScenario(10_000, gamma), check=False)
    # residual is O(1/n)
    assert m == pytest.approx(large_n_limit(gamma), rel=1e-3)


def test_link_mismatch_is_half_step_sine():
    for gamma in (1, 4, 16):
        for n in (2, 10, 50):
            sc = SectorScenario(n, gamma)
            bound = math.sin(math.pi / (4 * n * gamma)) ** 2
            for i, j in sc.links():
                assert qubit_mismatch(sc.setting(i), sc.setting(j)) == pytest.approx(bound, abs=TOL)


@pytest.mark.parametrize(
    "m, d, expected", [(0.5, 2, 0.5), (0.5, 4, 0.25), (0.828427, 6, 0.276142)]
)
def test_embed_scale(m, d, expected):
    assert sector_embed_scale(m, d) == pytest.approx(expected, abs=1e-6)


def test_scenario_validation():
    with pytest.raises(ValueError):
        SectorScenario(1, 1)
    with pytest.raises(ValueError):
        SectorScenario(3, 0.5)
    with pytest.raises(ValueError):
        sector_embed_scale(0.5, 1)
