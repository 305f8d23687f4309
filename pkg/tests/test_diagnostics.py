"""
Diagnostics service tests
"""
import numpy as np
import pytest
from pydantic import ValidationError
from scipy import stats
from core.exceptions import ConfigurationError, InsufficientDataError
from schemas.diagnostics import TestResult
from services.diagnostics import DiagnosticsService, chi2_sf


def normal_sample(size: int, seed: int) -> np.ndarray:
    return np.random.Generator(np.random.PCG64(seed)).standard_normal(size)


def ar1(size: int, coefficient: float, seed: int) -> np.ndarray:
    shocks = normal_sample(size, seed)
    values = np.zeros(size)
    for t in range(1, size):
        values[t] = coefficient * values[t - 1] + shocks[t]
    return values


@pytest.mark.parametrize("statistic, dof", [(0.5, 2), (3.0, 2), (21.0, 12),
                                            (4.2, 1)])
def test_chi2_tail_matches_scipy(statistic, dof):
    assert chi2_sf(statistic, dof) == pytest.approx(
        stats.chi2.sf(statistic, dof), rel=1e-10)


def test_chi2_tail_at_zero():
    assert chi2_sf(0.0, 2) == 1.0


def test_jarque_bera_formula():
    data = normal_sample(500, 2) ** 3
    result = DiagnosticsService.jarque_bera(data)
    skewness = stats.skew(data)
    kurtosis = stats.kurtosis(data, fisher=False)
    expected = data.size / 6 * (skewness ** 2 + (kurtosis - 3) ** 2 / 4)
    assert result.statistic == pytest.approx(expected, rel=1e-12)
    assert result.p_value == pytest.approx(stats.chi2.sf(expected, 2),
                                           abs=1e-12)
    assert result.reject_at_1pct


def test_jarque_bera_on_normal_sample():
    result = DiagnosticsService.jarque_bera(normal_sample(5000, 21))
    assert result.p_value > 0.001
    assert not result.reject_at_1pct


def test_jarque_bera_needs_four_values():
    with pytest.raises(InsufficientDataError):
        DiagnosticsService.jarque_bera([0.1, 0.2, 0.3])


def test_ljung_box_formula():
    data = normal_sample(200, 7)
    result = DiagnosticsService.ljung_box(data, lags=5)
    centered = data - data.mean()
    rho = [np.sum(centered[k:] * centered[:-k]) / np.sum(centered ** 2)
           for k in range(1, 6)]
    n = data.size
    expected = n * (n + 2) * sum(r ** 2 / (n - k)
                                 for k, r in enumerate(rho, start=1))
    assert result.statistic == pytest.approx(expected, rel=1e-10)
    assert result.lags == 5


def test_ljung_box_white_noise_and_ar1():
    assert DiagnosticsService.ljung_box(normal_sample(2000, 3)).p_value > \
        0.001
    persistent = DiagnosticsService.ljung_box(ar1(500, 0.8, 4), lags=10)
    assert persistent.reject_at_1pct and persistent.reject_at_5pct


def test_ljung_box_arguments():
    with pytest.raises(ConfigurationError):
        DiagnosticsService.ljung_box(normal_sample(50, 1), lags=0)
    with pytest.raises(InsufficientDataError):
        DiagnosticsService.ljung_box(normal_sample(12, 1), lags=12)


def test_adf_rejects_white_noise():
    result = DiagnosticsService.adf(normal_sample(500, 9))
    assert result.p_value is None
    assert result.statistic < -3.43
    assert result.reject_at_1pct and result.reject_at_5pct
    assert result.critical_values["5%"] == -2.86


def test_adf_keeps_random_walk():
    walk = np.cumsum(normal_sample(500, 10))
    result = DiagnosticsService.adf(walk)
    assert not result.reject_at_1pct


def test_adf_needs_observations():
    with pytest.raises(InsufficientDataError):
        DiagnosticsService.adf(normal_sample(20, 1))


def test_rejection_levels_are_nested():
    with pytest.raises(ValidationError):
        TestResult(test="x", statistic=1.0, p_value=0.5,
                   reject_at_1pct=True, reject_at_5pct=False)


def test_characterize_battery():
    report = DiagnosticsService.characterize(normal_sample(400, 14), "noise")
    assert report.label == "noise"
    assert report.jarque_bera.test == "jarque_bera"
    assert report.ljung_box.lags == 12
    assert report.ljung_box_squared.test == "ljung_box_squared"
    assert report.adf.test == "adf"


def false_rejections(size: int, replications: int) -> tuple[float, float]:
    rng = np.random.Generator(np.random.PCG64(2024))
    ljung = jarque = 0
    for _ in range(replications):
        sample = rng.standard_normal(size)
        ljung += DiagnosticsService.ljung_box(sample, 12).reject_at_5pct
        jarque += DiagnosticsService.jarque_bera(sample).reject_at_5pct
    return ljung / replications, jarque / replications


def test_ljung_box_size_reduced():
    ljung, _ = false_rejections(1000, 300)
    assert abs(ljung - 0.05) < 0.035


@pytest.mark.slow
def test_false_rejection_rates():
    ljung, jarque = false_rejections(5000, 1000)
    assert abs(ljung - 0.05) <= 0.02
    assert abs(jarque - 0.05) <= 0.02


@pytest.mark.parametrize("shift, scale", [(0.0, 100.0), (3.5, 0.01),
                                          (-2.0, -4.0)])
def test_jarque_bera_ignores_affine_changes(shift, scale):
    sample = np.random.Generator(np.random.PCG64(31)).standard_t(5, 800)
    base = DiagnosticsService.jarque_bera(sample)
    moved = DiagnosticsService.jarque_bera(shift + scale * sample)
    assert moved.statistic == pytest.approx(base.statistic, rel=1e-9)
    assert moved.reject_at_5pct == base.reject_at_5pct


@pytest.mark.parametrize("series", [normal_sample(600, 21),
                                    ar1(600, 0.6, 22),
                                    normal_sample(600, 23) ** 2])
def test_ljung_box_grows_with_lags(series):
    statistics = [DiagnosticsService.ljung_box(series, lags).statistic
                  for lags in range(1, 41)]
    assert statistics[0] >= 0.0
    assert all(later >= earlier for earlier, later in
               zip(statistics, statistics[1:]))


@pytest.mark.slow
def test_adf_rejection_rates():
    rng = np.random.Generator(np.random.PCG64(2025))
    noise_rejected = walk_kept = 0
    for _ in range(500):
        noise_rejected += DiagnosticsService.adf(
            rng.standard_normal(2000)).reject_at_1pct
        walk_kept += not DiagnosticsService.adf(
            np.cumsum(rng.standard_normal(2000))).reject_at_5pct
    assert noise_rejected / 500 >= 0.95
    assert walk_kept / 500 >= 0.90
