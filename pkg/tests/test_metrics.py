"""
Accuracy metric tests
"""
import math
import numpy as np
import pytest
from pydantic import ValidationError
from core.exceptions import AlignmentError, UsageError
from schemas.forecast import ForecastTrack
from schemas.metrics import EvalReport
from services.metrics import MetricsService
from tests.conftest import business_days

REALIZED: list[float] = [1e-4, 4e-4, 2.5e-4, 9e-5, 3e-4]


def track(model_id: str, predicted, realized=None,
          start: str = "2010-01-04") -> ForecastTrack:
    realized = REALIZED if realized is None else realized
    return ForecastTrack(dates=business_days(len(realized), start),
                         predicted=list(predicted), realized=list(realized),
                         model_id=model_id)


def test_hand_computed_errors():
    actual, predicted = [1, 2, 3, 4], [2, 4, 6, 8]
    assert MetricsService.mae(actual, predicted) == pytest.approx(2.5)
    assert MetricsService.mse(actual, predicted) == pytest.approx(7.5)
    assert MetricsService.rmse(actual, predicted) == pytest.approx(
        math.sqrt(7.5))
    assert MetricsService.mae([0, 0], [3, 4]) == pytest.approx(3.5)
    assert MetricsService.mse([0, 0], [3, 4]) == pytest.approx(12.5)
    assert MetricsService.rmse([0, 0], [3, 4]) == pytest.approx(
        math.sqrt(12.5))


def test_perfect_forecast_and_single_value():
    values = [0.3, 0.1, 0.7]
    assert MetricsService.mae(values, values) == 0.0
    assert MetricsService.rmse(values, values) == 0.0
    assert MetricsService.mse([2.0], [5.0]) == pytest.approx(9.0)
    assert MetricsService.mae([2.0], [5.0]) == pytest.approx(3.0)


def test_metric_identities():
    rng = np.random.default_rng(17)
    for _ in range(1000):
        size = int(rng.integers(1, 40))
        actual = rng.normal(0, 1, size)
        predicted = rng.normal(0, 1, size)
        mae = MetricsService.mae(actual, predicted)
        mse = MetricsService.mse(actual, predicted)
        rmse = MetricsService.rmse(actual, predicted)
        assert rmse ** 2 == pytest.approx(mse, rel=1e-12)
        assert mae <= rmse * (1 + 1e-12)


def test_metrics_ignore_order():
    rng = np.random.default_rng(5)
    actual, predicted = rng.normal(0, 1, 50), rng.normal(0, 1, 50)
    order = rng.permutation(50)
    assert MetricsService.mse(actual[order], predicted[order]) == \
        pytest.approx(MetricsService.mse(actual, predicted), rel=1e-12)
    assert MetricsService.mae(actual[order], predicted[order]) == \
        pytest.approx(MetricsService.mae(actual, predicted), rel=1e-12)


def test_metrics_reject_bad_input():
    with pytest.raises(UsageError):
        MetricsService.mse([], [])
    with pytest.raises(UsageError):
        MetricsService.mae([1.0, 2.0], [1.0])


def test_compare_picks_lowest_rmse():
    report = MetricsService.compare([
        track("GARCH(1,1)", [2e-4] * 5),
        track("ANN(12)", REALIZED[:4] + [2e-4]),
    ], label="sp500")
    assert report.winner == "ANN(12)" and not report.tie
    assert [r.model_id for r in report.reports] == ["GARCH(1,1)", "ANN(12)"]
    assert all(r.n == 5 for r in report.reports)
    table = MetricsService.table(report)
    assert table.startswith("sp500\n")
    assert "*" in table.splitlines()[-1]


def test_compare_reports_ties():
    report = MetricsService.compare([
        track("GARCH(1,1)", [2e-4] * 5), track("EGARCH(1,1,1)", [2e-4] * 5)])
    assert report.tie and report.winner is None
    assert report.tied_models == ["GARCH(1,1)", "EGARCH(1,1,1)"]
    assert MetricsService.table(report).count("tie") == 2


def test_compare_requires_aligned_tracks():
    with pytest.raises(AlignmentError):
        MetricsService.compare([
            track("GARCH(1,1)", [2e-4] * 5),
            track("ANN(1)", [2e-4] * 5, start="2011-01-03")])
    with pytest.raises(AlignmentError):
        MetricsService.compare([
            track("GARCH(1,1)", [2e-4] * 5),
            track("ANN(1)", [2e-4] * 5, realized=[1e-4] * 5)])
    with pytest.raises(UsageError):
        MetricsService.compare([])


def test_ranking_survives_rescaling():
    tracks = [track("GARCH(1,1)", [2e-4] * 5),
              track("EGARCH(1,1,1)", [1.5e-4] * 5),
              track("ANN(1)", REALIZED[::-1])]
    scaled = [track(t.model_id, np.array(t.predicted) * 1e4,
                    np.array(t.realized) * 1e4) for t in tracks]
    assert MetricsService.compare(tracks).winner == \
        MetricsService.compare(scaled).winner


def test_eval_report_identity():
    with pytest.raises(ValidationError):
        EvalReport(model_id="GARCH(1,1)", mae=0.1, mse=0.04, rmse=0.3, n=3)
    report = MetricsService.evaluate(track("GARCH(1,1)", [2e-4] * 5))
    assert report.rmse == pytest.approx(math.sqrt(report.mse), rel=1e-12)
