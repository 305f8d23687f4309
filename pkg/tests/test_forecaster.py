"""
Rolling forecast tests
"""
import numpy as np
import pytest
from core.exceptions import ConfigurationError
from schemas.ann import TrainConfig
from schemas.garch import FitOptions
from schemas.timeseries import ReturnSeries, VarianceSeries
from services.ann import AnnService
from services.forecaster import ForecasterService
from services.metrics import MetricsService
from services.timeseries import TimeSeriesService
from tests.conftest import GARCH_11, TRUE_PARAMS, simulate_garch

QUICK: FitOptions = FitOptions(restarts=1)


def perturbed(series: ReturnSeries, start: int) -> ReturnSeries:
    values = np.array(series.values)
    values[start:] *= 3.0
    return series.copy(update={"values": values.tolist()})


def test_track_alignment(short_path):
    split = TimeSeriesService.split_spec(len(short_path), 0.8)
    track = ForecasterService.rolling_forecast_garch(
        short_path, split, GARCH_11, refit_interval=100, options=QUICK)
    assert len(track) == split.test_len == 60
    assert track.dates == short_path.dates[240:]
    np.testing.assert_allclose(track.realized,
                               short_path.array[240:] ** 2, rtol=1e-15)
    assert track.model_id == "GARCH(1,1)"
    assert track.refit_interval == 100
    assert track.refit_count == 1


def test_refit_schedule(short_path):
    split = TimeSeriesService.split_spec(len(short_path), 0.8)
    track = ForecasterService.rolling_forecast_garch(
        short_path, split, GARCH_11, refit_interval=10, options=QUICK)
    assert track.refit_count == 6
    assert all(step % 10 == 0 for step in track.flagged_steps)


def test_known_parameters(short_path):
    split = TimeSeriesService.split_spec(len(short_path), 0.8)
    track = ForecasterService.rolling_forecast_garch(
        short_path, split, GARCH_11, params=TRUE_PARAMS)
    assert track.refit_interval is None and track.refit_count == 0
    window = short_path.array[:240]
    sigma2 = 1e-5 + 0.95 * np.var(window, ddof=1)
    for value in window[:-1]:
        sigma2 = 1e-5 + 0.10 * value ** 2 + 0.85 * sigma2
    first = 1e-5 + 0.10 * window[-1] ** 2 + 0.85 * sigma2
    assert track.predicted[0] == pytest.approx(first, rel=1e-10)


@pytest.mark.parametrize("params", [TRUE_PARAMS, None])
def test_garch_forecasts_ignore_later_returns(short_path, params):
    split = TimeSeriesService.split_spec(len(short_path), 0.8)
    horizon = 30
    original = ForecasterService.rolling_forecast_garch(
        short_path, split, GARCH_11, refit_interval=10, options=QUICK,
        params=params)
    changed = ForecasterService.rolling_forecast_garch(
        perturbed(short_path, split.train_len + horizon), split, GARCH_11,
        refit_interval=10, options=QUICK, params=params)
    assert changed.predicted[:horizon + 1] == \
        original.predicted[:horizon + 1]
    assert changed.realized[horizon] != original.realized[horizon]


def test_garch_argument_errors(short_path):
    split = TimeSeriesService.split_spec(len(short_path), 0.8)
    with pytest.raises(ConfigurationError):
        ForecasterService.rolling_forecast_garch(
            short_path, split, GARCH_11, refit_interval=0)
    with pytest.raises(ConfigurationError):
        ForecasterService.rolling_forecast_garch(
            short_path, TimeSeriesService.split_spec(299, 0.8), GARCH_11,
            params=TRUE_PARAMS)


def ann_setup(series: ReturnSeries):
    proxy = TimeSeriesService.squared_return_proxy(series)
    split = TimeSeriesService.split_spec(len(proxy), 0.8)
    model, _ = AnnService.train_on_proxy(proxy.array[:split.train_len], 3,
                                         TrainConfig(epochs=3))
    return proxy, split, model


def test_ann_track(short_path):
    proxy, split, model = ann_setup(short_path)
    track = ForecasterService.rolling_forecast_ann(proxy, split, model)
    assert track.model_id == "ANN(3)"
    assert len(track) == split.test_len
    assert track.realized == proxy.values[split.train_len:]
    assert track.predicted[0] == pytest.approx(AnnService.predict_one(
        model, proxy.array[split.train_len - 5:split.train_len]), rel=1e-12)
    last = len(proxy) - 1
    assert track.predicted[-1] == pytest.approx(AnnService.predict_one(
        model, proxy.array[last - 5:last]), rel=1e-12)


def test_ann_forecasts_ignore_later_values(short_path):
    proxy, split, model = ann_setup(short_path)
    horizon = 20
    values = np.array(proxy.values)
    values[split.train_len + horizon:] *= 3.0
    changed = VarianceSeries(dates=proxy.dates, values=values.tolist(),
                             label=proxy.label)
    original = ForecasterService.rolling_forecast_ann(proxy, split, model)
    shifted = ForecasterService.rolling_forecast_ann(changed, split, model)
    assert shifted.predicted[:horizon + 1] == \
        original.predicted[:horizon + 1]
    assert shifted.predicted[horizon + 1] != original.predicted[horizon + 1]


def test_ann_split_must_match(short_path):
    proxy, _, model = ann_setup(short_path)
    with pytest.raises(ConfigurationError):
        ForecasterService.rolling_forecast_ann(
            proxy, TimeSeriesService.split_spec(len(proxy) + 1, 0.8), model)


@pytest.mark.slow
def test_known_parameters_track_true_variance():
    returns, variance = simulate_garch(5000, seed=77)
    split = TimeSeriesService.split_spec(len(returns), 0.5)
    track = ForecasterService.rolling_forecast_garch(
        returns, split, GARCH_11, params=TRUE_PARAMS)
    oracle = MetricsService.rmse(track.realized,
                                 variance.array[split.train_len:])
    assert MetricsService.rmse(track.realized, track.predicted) == \
        pytest.approx(oracle, rel=0.10)
