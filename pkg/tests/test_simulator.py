"""
Simulator tests
"""
import math
from datetime import date
import numpy as np
import pytest
from pydantic import ValidationError
from core.exceptions import InvalidParameterError, NonstationaryModelError
from models import garch
from models.family import Family
from schemas.garch import GarchParams, GarchSpec
from schemas.simulation import SimConfig
from services.simulator import SimulatorService
from services.timeseries import TimeSeriesService
from tests.conftest import GARCH_11, TRUE_PARAMS

EGARCH_11: GarchSpec = GarchSpec(family=Family.EGARCH, p=1, q=1)
EGARCH_PARAMS: GarchParams = GarchParams(omega=-0.2, alpha=[0.1],
                                         gamma=[-0.05], beta=[0.98])


def test_simulation_is_reproducible():
    config = SimConfig(spec=GARCH_11, params=TRUE_PARAMS, length=250,
                       burn_in=100, rng_seed=42)
    first = SimulatorService.simulate(config)
    assert first == SimulatorService.simulate(config)
    other = SimulatorService.simulate(config.copy(update={"rng_seed": 43}))
    assert other[0].values != first[0].values


def test_simulation_calendar():
    returns, variance = SimulatorService.simulate(SimConfig(
        spec=GARCH_11, params=TRUE_PARAMS, length=30, burn_in=10,
        start_date=date(2021, 1, 1)))
    assert len(returns) == len(variance) == 30
    assert returns.dates == variance.dates
    assert returns.dates[0] == date(2021, 1, 1)
    assert all(d.weekday() < 5 for d in returns.dates)
    assert returns.label == "simulated GARCH(1,1)"
    assert all(v > 0 for v in variance.values)


def test_flat_process_variance():
    params = GarchParams(omega=2e-4, alpha=[0.0], beta=[0.0])
    returns, variance = SimulatorService.simulate(SimConfig(
        spec=GARCH_11, params=params, length=100_000, rng_seed=3))
    assert variance.values == pytest.approx([2e-4] * 100_000, rel=1e-12)
    assert TimeSeriesService.sample_variance(returns) == pytest.approx(
        2e-4, rel=0.05)


def test_garch_path_follows_the_recursion():
    returns, variance = SimulatorService.simulate(SimConfig(
        spec=GARCH_11, params=TRUE_PARAMS, length=500, burn_in=0,
        rng_seed=8))
    expected = garch.cond_variance_garch(
        TRUE_PARAMS, returns.array,
        garch.unconditional_variance(GARCH_11, TRUE_PARAMS))
    np.testing.assert_array_equal(variance.array, expected)


def test_egarch_path_follows_the_recursion():
    returns, variance = SimulatorService.simulate(SimConfig(
        spec=EGARCH_11, params=EGARCH_PARAMS, length=500, burn_in=0,
        rng_seed=9))
    start = math.log(garch.unconditional_variance(EGARCH_11, EGARCH_PARAMS))
    expected = garch.cond_variance_egarch(EGARCH_PARAMS, returns.array, start)
    np.testing.assert_allclose(variance.array, expected, rtol=1e-12)


def test_mean_shifts_returns_only():
    shifted = TRUE_PARAMS.copy(update={"mu": 0.001})
    base, base_var = SimulatorService.simulate(SimConfig(
        spec=GARCH_11, params=TRUE_PARAMS, length=100, rng_seed=4))
    moved, moved_var = SimulatorService.simulate(SimConfig(
        spec=GARCH_11, params=shifted, length=100, rng_seed=4))
    np.testing.assert_allclose(moved.array - base.array, 0.001, rtol=1e-9)
    assert moved_var.values == base_var.values


def test_nonstationary_process_is_refused():
    with pytest.raises(NonstationaryModelError):
        SimConfig(spec=GARCH_11, params=GarchParams(
            omega=1e-5, alpha=[0.5], beta=[0.6]), length=10)
    with pytest.raises(NonstationaryModelError):
        SimConfig(spec=EGARCH_11, params=GarchParams(
            omega=-0.1, alpha=[0.1], gamma=[0.0], beta=[1.0]), length=10)


def test_invalid_parameters_are_refused():
    with pytest.raises(InvalidParameterError):
        SimConfig(spec=GARCH_11, params=GarchParams(
            omega=0.0, alpha=[0.1], beta=[0.8]), length=10)
    with pytest.raises(InvalidParameterError):
        SimConfig(spec=GARCH_11, params=GarchParams(
            omega=1e-5, alpha=[-0.1], beta=[0.8]), length=10)
    with pytest.raises(ValidationError):
        SimConfig(spec=GARCH_11, params=GarchParams(
            omega=1e-5, alpha=[0.1, 0.1], beta=[0.8]), length=10)


@pytest.mark.slow
def test_long_path_moments():
    returns, variance = SimulatorService.simulate(SimConfig(
        spec=GARCH_11, params=TRUE_PARAMS, length=200_000, rng_seed=21))
    proxy = TimeSeriesService.squared_return_proxy(returns)
    assert float(np.mean(proxy.array)) == pytest.approx(2e-4, rel=0.10)
    assert float(np.mean(variance.array)) == pytest.approx(2e-4, rel=0.10)
