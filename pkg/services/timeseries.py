"""
Time series services script.
"""
import logging
from decimal import Decimal
import numpy as np
from scipy import stats
from core.exceptions import ConfigurationError, DegenerateInputError, \
    DomainError, InsufficientDataError
from schemas.timeseries import DescriptiveStats, PriceSeries, ReturnSeries, \
    SplitSpec, VarianceSeries

logger: logging.Logger = logging.getLogger(__name__)


class TimeSeriesService:
    """
    Return construction, descriptive statistics and sample splitting.
    """

    @staticmethod
    def compute_returns(prices: PriceSeries) -> ReturnSeries:
        """
        Arithmetic returns (P_t - P_{t-1}) / P_{t-1}
        :param prices: dated price levels, all positive
        :type prices: PriceSeries
        :return: returns dated at the later price of each pair
        :rtype: ReturnSeries
        """
        if len(prices) < 2:
            raise InsufficientDataError(
                f"{len(prices)} prices given; at least 2 are required")
        levels: np.ndarray = prices.array
        bad: np.ndarray = np.flatnonzero(levels <= 0)
        if bad.size:
            raise DomainError(
                f"price {levels[bad[0]]} on {prices.dates[bad[0]]} is not"
                f" positive", {"index": int(bad[0])})
        returns: np.ndarray = (levels[1:] - levels[:-1]) / levels[:-1]
        return ReturnSeries(dates=prices.dates[1:], values=returns.tolist(),
                            label=prices.label)

    @staticmethod
    def describe(series: ReturnSeries,
                 require_moments: bool = True) -> DescriptiveStats:
        """
        Descriptive statistics with raw kurtosis (normal = 3)
        :param series: returns
        :type series: ReturnSeries
        :param require_moments: refuse series too short for skewness and
         kurtosis instead of leaving them empty
        :type require_moments: bool
        :return: mean, standard deviation, moments, extremes and count
        :rtype: DescriptiveStats
        """
        count: int = len(series)
        minimum: int = 4 if require_moments else 2
        if count < minimum:
            raise InsufficientDataError(
                f"{count} observations given; describe needs {minimum}")
        values: np.ndarray = series.array
        std_dev: float = float(np.std(values, ddof=1))
        skewness = kurtosis = None
        if count >= 4 and std_dev > 0:
            skewness = float(stats.skew(values))
            kurtosis = float(stats.kurtosis(values, fisher=False))
        elif count >= 4 and require_moments:
            raise DegenerateInputError(
                "moments of a constant series are undefined")
        low: float = float(values.min())
        high: float = float(values.max())
        # rounding can push the mean of a flat series past its extremes
        mean: float = min(max(float(np.mean(values)), low), high)
        return DescriptiveStats(
            mean=mean, std_dev=std_dev, skewness=skewness,
            kurtosis=kurtosis, max=high, min=low, count=count)

    @staticmethod
    def squared_return_proxy(series: ReturnSeries) -> VarianceSeries:
        """
        Squared-return volatility proxy r_t^2
        :param series: returns
        :type series: ReturnSeries
        :return: proxy on the same dates
        :rtype: VarianceSeries
        """
        values: np.ndarray = series.array
        return VarianceSeries(dates=series.dates,
                              values=(values * values).tolist(),
                              label=series.label)

    @staticmethod
    def sample_variance(series: ReturnSeries) -> float:
        """
        Sample variance with n-1 denominator
        :param series: returns
        :type series: ReturnSeries
        :return: variance
        :rtype: float
        """
        if len(series) < 2:
            raise InsufficientDataError(
                f"{len(series)} observations given; variance needs 2")
        return float(np.var(series.array, ddof=1))

    @staticmethod
    def split_spec(total: int, train_fraction: float) -> SplitSpec:
        """
        Partition sizes for a series of the given length
        :param total: number of observations
        :type total: int
        :param train_fraction: in-sample share in (0, 1)
        :type train_fraction: float
        :return: floor(train_fraction x total) in-sample, rest out-of-sample
        :rtype: SplitSpec
        """
        if not 0 < train_fraction < 1:
            raise ConfigurationError(
                f"train fraction {train_fraction} must lie in (0, 1)")
        # decimal product so 0.29 x 100 floors to 29, not 28
        train_len: int = int(Decimal(repr(train_fraction)) * total)
        test_len: int = total - train_len
        if train_len < 2 or test_len < 1:
            raise ConfigurationError(
                f"fraction {train_fraction} of {total} observations leaves"
                f" {train_len} in-sample and {test_len} out-of-sample")
        return SplitSpec(train_fraction=train_fraction, train_len=train_len,
                         test_len=test_len)

    @staticmethod
    def split(series: ReturnSeries, train_fraction: float
              ) -> tuple[ReturnSeries, ReturnSeries]:
        """
        Chronological in-sample / out-of-sample split
        :param series: returns
        :type series: ReturnSeries
        :param train_fraction: in-sample share in (0, 1)
        :type train_fraction: float
        :return: first floor(fraction x n) observations and the remainder
        :rtype: tuple[ReturnSeries, ReturnSeries]
        """
        spec: SplitSpec = TimeSeriesService.split_spec(
            len(series), train_fraction)
        cut: int = spec.train_len
        train: ReturnSeries = ReturnSeries(
            dates=series.dates[:cut], values=series.values[:cut],
            label=series.label)
        test: ReturnSeries = ReturnSeries(
            dates=series.dates[cut:], values=series.values[cut:],
            label=series.label)
        logger.info("split %s: %d in-sample, %d out-of-sample",
                    series.label, spec.train_len, spec.test_len)
        return train, test
