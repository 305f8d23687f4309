"""
Diagnostics services script.
"""
import math
from typing import Optional
import numpy as np
from scipy import stats
from scipy.special import gammaincc
from core.exceptions import ConfigurationError, DegenerateInputError, \
    InsufficientDataError
from schemas.diagnostics import SeriesDiagnostics, TestResult

# Asymptotic constant-only Dickey-Fuller critical values
ADF_CRITICAL_VALUES: dict[str, float] = {"1%": -3.43, "5%": -2.86,
                                         "10%": -2.57}
ADF_MIN_OBS: int = 25


def chi2_sf(statistic: float, dof: int) -> float:
    """
    Upper tail of the chi-square distribution.
    :param statistic: observed value
    :type statistic: float
    :param dof: degrees of freedom
    :type dof: int
    :return: regularized upper incomplete gamma Q(dof/2, statistic/2)
    :rtype: float
    """
    if statistic <= 0:
        return 1.0
    return float(min(1.0, max(0.0, gammaincc(dof / 2.0, statistic / 2.0))))


def _verdict(test: str, statistic: float, p_value: float,
             lags: Optional[int] = None) -> TestResult:
    return TestResult(test=test, statistic=statistic, p_value=p_value,
                      lags=lags, reject_at_1pct=p_value < 0.01,
                      reject_at_5pct=p_value < 0.05)


def _ols(design: np.ndarray, target: np.ndarray
         ) -> tuple[np.ndarray, np.ndarray, float]:
    coef, _, rank, _ = np.linalg.lstsq(design, target, rcond=None)
    if rank < design.shape[1]:
        raise DegenerateInputError("ADF regression is singular")
    resid: np.ndarray = target - design @ coef
    return coef, resid, float(resid @ resid)


def _adf_design(levels: np.ndarray, lags: int, nobs: int
                ) -> tuple[np.ndarray, np.ndarray]:
    """Regressors [1, y_{t-1}, dy_{t-1}..dy_{t-lags}] for the last nobs
    differences."""
    diffs: np.ndarray = np.diff(levels)
    end: int = diffs.size
    start: int = end - nobs
    columns: list[np.ndarray] = [np.ones(nobs), levels[start:end]]
    for k in range(1, lags + 1):
        columns.append(diffs[start - k:end - k])
    return np.column_stack(columns), diffs[start:end]


class DiagnosticsService:
    """
    Normality, serial correlation and unit root tests.
    """

    @staticmethod
    def jarque_bera(values) -> TestResult:
        """
        Jarque-Bera normality test
        :param values: observations
        :type values: array_like
        :return: JB = n/6 (S^2 + (K - 3)^2 / 4) against chi-square(2)
        :rtype: TestResult
        """
        data: np.ndarray = np.asarray(values, dtype=np.float64)
        if data.size < 4:
            raise InsufficientDataError(
                f"{data.size} observations given; Jarque-Bera needs 4")
        if np.ptp(data) == 0:
            raise DegenerateInputError("moments of a constant series are"
                                       " undefined")
        skewness: float = float(stats.skew(data))
        kurtosis: float = float(stats.kurtosis(data, fisher=False))
        statistic: float = data.size / 6.0 * (
            skewness ** 2 + (kurtosis - 3.0) ** 2 / 4.0)
        return _verdict("jarque_bera", statistic, chi2_sf(statistic, 2))

    @staticmethod
    def autocorrelations(values, lags: int) -> np.ndarray:
        """
        Sample autocorrelations of the demeaned series at lags 1..lags
        :param values: observations
        :type values: array_like
        :param lags: highest lag
        :type lags: int
        :return: rho_1..rho_lags
        :rtype: np.ndarray
        """
        data: np.ndarray = np.asarray(values, dtype=np.float64)
        centered: np.ndarray = data - data.mean()
        denominator: float = float(centered @ centered)
        if denominator == 0:
            raise DegenerateInputError(
                "autocorrelation of a constant series is undefined")
        return np.array([centered[k:] @ centered[:-k] / denominator
                         for k in range(1, lags + 1)])

    @staticmethod
    def ljung_box(values, lags: int = 12) -> TestResult:
        """
        Ljung-Box portmanteau test
        :param values: observations
        :type values: array_like
        :param lags: number of autocorrelations pooled
        :type lags: int
        :return: Q = n(n+2) sum rho_k^2 / (n-k) against chi-square(lags)
        :rtype: TestResult
        """
        data: np.ndarray = np.asarray(values, dtype=np.float64)
        if lags < 1:
            raise ConfigurationError(f"Ljung-Box needs lags >= 1, got {lags}")
        if data.size <= lags:
            raise InsufficientDataError(
                f"{data.size} observations do not exceed {lags} lags")
        n: int = data.size
        rho: np.ndarray = DiagnosticsService.autocorrelations(data, lags)
        weights: np.ndarray = n - np.arange(1, lags + 1, dtype=np.float64)
        statistic: float = n * (n + 2) * math.fsum(rho * rho / weights)
        return _verdict("ljung_box", statistic, chi2_sf(statistic, lags),
                        lags)

    @staticmethod
    def default_adf_lag(nobs: int) -> int:
        """
        Schwert rule ceil(12 (n/100)^(1/4)), capped for short samples
        :param nobs: series length
        :type nobs: int
        :return: maximum augmentation lag
        :rtype: int
        """
        rule: int = int(math.ceil(12.0 * (nobs / 100.0) ** 0.25))
        return max(0, min(nobs // 2 - 2, rule))

    @staticmethod
    def adf(values, max_lag: Optional[int] = None) -> TestResult:
        """
        Augmented Dickey-Fuller test with a constant and AIC lag choice.
        :param values: levels y_t
        :type values: array_like
        :param max_lag: largest number of lagged differences considered
        :type max_lag: int
        :return: t-ratio of the y_{t-1} coefficient compared with
         asymptotic critical values
        :rtype: TestResult
        """
        levels: np.ndarray = np.asarray(values, dtype=np.float64)
        n: int = levels.size
        if n < ADF_MIN_OBS:
            raise InsufficientDataError(
                f"{n} observations given; ADF needs {ADF_MIN_OBS}")
        if max_lag is None:
            max_lag = DiagnosticsService.default_adf_lag(n)
        if max_lag < 0 or n - 1 - max_lag < max_lag + 3:
            raise ConfigurationError(
                f"max_lag {max_lag} is not usable with {n} observations")
        common: int = n - 1 - max_lag
        best_lag: int = 0
        best_aic: float = math.inf
        for lag in range(max_lag + 1):
            design, target = _adf_design(levels, lag, common)
            _, _, rss = _ols(design, target)
            if rss <= 0:
                raise DegenerateInputError("ADF regression fits exactly")
            llf: float = -0.5 * common * (
                math.log(2 * math.pi) + math.log(rss / common) + 1.0)
            aic: float = -2.0 * llf + 2.0 * design.shape[1]
            if aic < best_aic:
                best_aic, best_lag = aic, lag
        nobs: int = n - 1 - best_lag
        design, target = _adf_design(levels, best_lag, nobs)
        coef, _, rss = _ols(design, target)
        dof: int = nobs - design.shape[1]
        sigma2: float = rss / dof
        cov: np.ndarray = sigma2 * np.linalg.inv(design.T @ design)
        statistic: float = float(coef[1] / math.sqrt(cov[1, 1]))
        return TestResult(
            test="adf", statistic=statistic, p_value=None, lags=best_lag,
            reject_at_1pct=statistic < ADF_CRITICAL_VALUES["1%"],
            reject_at_5pct=statistic < ADF_CRITICAL_VALUES["5%"],
            critical_values=dict(ADF_CRITICAL_VALUES))

    @staticmethod
    def characterize(values, label: str, lags: int = 12) -> SeriesDiagnostics:
        """
        Characterization battery: Jarque-Bera, Q(lags), Q^2(lags) and ADF.
        :param values: observations
        :type values: array_like
        :param label: series name
        :type label: str
        :param lags: Ljung-Box lags
        :type lags: int
        :return: the four tests
        :rtype: SeriesDiagnostics
        """
        data: np.ndarray = np.asarray(values, dtype=np.float64)
        squared: TestResult = DiagnosticsService.ljung_box(data * data, lags)
        return SeriesDiagnostics(
            label=label, jarque_bera=DiagnosticsService.jarque_bera(data),
            ljung_box=DiagnosticsService.ljung_box(data, lags),
            ljung_box_squared=TestResult(**{**squared.dict(),
                                            "test": "ljung_box_squared"}),
            adf=DiagnosticsService.adf(data))
