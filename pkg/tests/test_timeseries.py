"""
Time series service tests
"""
import numpy as np
import pytest
from pydantic import ValidationError
from core.exceptions import ConfigurationError, DomainError, \
    InsufficientDataError
from schemas.timeseries import DescriptiveStats, PriceSeries, SplitSpec
from services.timeseries import TimeSeriesService
from tests.conftest import business_days, make_series


def prices(*values: float) -> PriceSeries:
    return PriceSeries(dates=business_days(len(values)),
                       values=list(values), label="index")


@pytest.mark.parametrize("levels, expected", [
    ((100, 100), [0.0]),
    ((100, 110, 99), [0.10, -0.10]),
    ((1, 2, 4, 8), [1.0, 1.0, 1.0]),
])
def test_compute_returns(levels, expected):
    returns = TimeSeriesService.compute_returns(prices(*levels))
    assert returns.values == pytest.approx(expected, rel=1e-12, abs=1e-15)
    assert returns.dates == business_days(len(levels))[1:]
    assert returns.label == "index"


def test_compute_returns_rejects_bad_prices():
    with pytest.raises(DomainError):
        TimeSeriesService.compute_returns(prices(100, 0, 5))
    with pytest.raises(InsufficientDataError):
        TimeSeriesService.compute_returns(prices(100))


def test_compound_returns_rebuild_prices():
    rng = np.random.default_rng(3)
    levels = 50 * np.cumprod(1 + rng.normal(0, 0.02, 200))
    returns = TimeSeriesService.compute_returns(prices(*levels.tolist()))
    rebuilt = levels[0] * np.cumprod(1 + returns.array)
    np.testing.assert_allclose(rebuilt, levels[1:], rtol=1e-10)


def test_describe_symmetric_series():
    stats = TimeSeriesService.describe(make_series([-1, 0, 1, 0]))
    assert stats.skewness == pytest.approx(0.0, abs=1e-12)
    assert stats.mean == pytest.approx(0.0, abs=1e-15)
    assert stats.std_dev == pytest.approx(np.sqrt(2 / 3), rel=1e-12)
    assert stats.min <= stats.mean <= stats.max
    assert stats.count == 4


def test_describe_normal_kurtosis_is_three():
    rng = np.random.Generator(np.random.PCG64(1))
    stats = TimeSeriesService.describe(
        make_series(rng.standard_normal(100_000)))
    assert stats.kurtosis == pytest.approx(3.0, abs=0.1)


def test_describe_requires_four_observations():
    with pytest.raises(InsufficientDataError):
        TimeSeriesService.describe(make_series([0.1, 0.2, 0.3]))
    short = TimeSeriesService.describe(make_series([0.1, 0.2, 0.3]),
                                       require_moments=False)
    assert short.count == 3
    assert short.skewness is None and short.kurtosis is None


def test_describe_flat_short_series():
    stats = TimeSeriesService.describe(make_series([0.1, 0.1, 0.1]),
                                       require_moments=False)
    assert stats.min <= stats.mean <= stats.max
    assert stats.mean == pytest.approx(0.1, rel=1e-15)
    assert stats.std_dev == 0.0


@pytest.mark.parametrize("mean", [-0.2, 0.13])
def test_stats_mean_within_extremes(mean):
    with pytest.raises(ValidationError):
        DescriptiveStats(mean=mean, std_dev=0.01, max=0.12, min=-0.10,
                         count=50)


def test_split_spec_accepts_decimal_floor():
    assert SplitSpec(train_fraction=0.29, train_len=29, test_len=71).total \
        == 100
    with pytest.raises(ValidationError):
        SplitSpec(train_fraction=0.29, train_len=28, test_len=72)


@pytest.mark.parametrize("values, expected", [
    ([0.1, -0.1], [0.01, 0.01]),
    ([0.0, 0.0, 0.0], [0.0, 0.0, 0.0]),
    ([0.02, -0.03], [0.0004, 0.0009]),
])
def test_squared_return_proxy(values, expected):
    proxy = TimeSeriesService.squared_return_proxy(make_series(values))
    assert proxy.values == pytest.approx(expected, rel=1e-12)
    assert proxy.dates == business_days(len(values))


def test_proxy_ignores_sign():
    values = np.random.default_rng(8).normal(0, 0.01, 50)
    plus = TimeSeriesService.squared_return_proxy(make_series(values))
    minus = TimeSeriesService.squared_return_proxy(make_series(-values))
    assert plus.values == minus.values


def test_sample_variance():
    assert TimeSeriesService.sample_variance(make_series([1, 1, 1])) == 0.0
    assert TimeSeriesService.sample_variance(
        make_series([0, 2])) == pytest.approx(2.0)
    with pytest.raises(InsufficientDataError):
        TimeSeriesService.sample_variance(make_series([1.0]))


def test_sample_variance_matches_std_dev():
    series = make_series(np.random.default_rng(4).normal(0, 0.01, 400))
    stats = TimeSeriesService.describe(series)
    assert TimeSeriesService.sample_variance(series) == pytest.approx(
        stats.std_dev ** 2, rel=1e-12)


@pytest.mark.parametrize("total, fraction, train_len, test_len", [
    (3858, 0.8, 3086, 772),
    (10, 0.5, 5, 5),
    (10, 0.99, 9, 1),
    (100, 0.29, 29, 71),
    (100, 0.57, 57, 43),
    (1000, 0.7, 700, 300),
])
def test_split_sizes(total, fraction, train_len, test_len):
    spec = TimeSeriesService.split_spec(total, fraction)
    assert (spec.train_len, spec.test_len) == (train_len, test_len)
    assert spec.total == total


def test_split_keeps_every_observation():
    rng = np.random.default_rng(12)
    for _ in range(25):
        total = int(rng.integers(20, 200))
        fraction = float(rng.uniform(0.1, 0.9))
        series = make_series(rng.normal(0, 0.01, total))
        train, test = TimeSeriesService.split(series, fraction)
        assert fraction * total - 1 < len(train) <= fraction * total + 1e-9
        assert train.values + test.values == series.values
        assert train.dates + test.dates == series.dates


@pytest.mark.parametrize("fraction", [0.0, 1.0, 0.05])
def test_degenerate_split(fraction):
    with pytest.raises(ConfigurationError):
        TimeSeriesService.split(make_series(np.linspace(-1, 1, 10)),
                                fraction)
