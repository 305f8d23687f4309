"""
Metrics services script.
"""
import logging
import math
import numpy as np
from sklearn.metrics import mean_absolute_error, mean_squared_error
from tabulate import tabulate
from core.exceptions import AlignmentError, UsageError
from schemas.forecast import ForecastTrack
from schemas.metrics import ComparisonReport, EvalReport

logger: logging.Logger = logging.getLogger(__name__)

TIE_TOLERANCE: float = 1e-12


def _pair(actual, predicted) -> tuple[np.ndarray, np.ndarray]:
    y: np.ndarray = np.asarray(actual, dtype=np.float64).ravel()
    y_hat: np.ndarray = np.asarray(predicted, dtype=np.float64).ravel()
    if y.size == 0 or y.size != y_hat.size:
        raise UsageError(f"metrics need equal non-empty sequences, got"
                         f" {y.size} and {y_hat.size} values")
    return y, y_hat


class MetricsService:
    """
    Forecast accuracy: MAE, MSE, RMSE and model comparison.
    """

    @staticmethod
    def mae(actual, predicted) -> float:
        """
        Mean absolute error
        :param actual: realized values
        :type actual: array_like
        :param predicted: forecasts
        :type predicted: array_like
        :return: mean |y - y_hat|
        :rtype: float
        """
        return float(mean_absolute_error(*_pair(actual, predicted)))

    @staticmethod
    def mse(actual, predicted) -> float:
        """
        Mean squared error
        :param actual: realized values
        :type actual: array_like
        :param predicted: forecasts
        :type predicted: array_like
        :return: mean (y - y_hat)^2
        :rtype: float
        """
        return float(mean_squared_error(*_pair(actual, predicted)))

    @staticmethod
    def rmse(actual, predicted) -> float:
        """
        Root mean squared error
        :param actual: realized values
        :type actual: array_like
        :param predicted: forecasts
        :type predicted: array_like
        :return: sqrt(mse)
        :rtype: float
        """
        return math.sqrt(MetricsService.mse(actual, predicted))

    @staticmethod
    def evaluate(track: ForecastTrack) -> EvalReport:
        """
        Accuracy of one track against its realized proxy
        :param track: forecasts
        :type track: ForecastTrack
        :return: MAE, MSE and RMSE
        :rtype: EvalReport
        """
        mse: float = MetricsService.mse(track.realized, track.predicted)
        return EvalReport(
            model_id=track.model_id,
            mae=MetricsService.mae(track.realized, track.predicted), mse=mse,
            rmse=math.sqrt(mse), n=len(track))

    @staticmethod
    def compare(tracks: list[ForecastTrack],
                label: str = "series") -> ComparisonReport:
        """
        Rank tracks on a shared realized proxy by RMSE
        :param tracks: forecasts with identical dates and realized values
        :type tracks: list[ForecastTrack]
        :param label: series name
        :type label: str
        :return: one report per track and the winner, ties flagged
        :rtype: ComparisonReport
        """
        if not tracks:
            raise UsageError("compare needs at least one track")
        reference: ForecastTrack = tracks[0]
        for track in tracks[1:]:
            if track.dates != reference.dates:
                raise AlignmentError(
                    f"{track.model_id} and {reference.model_id} cover"
                    f" different dates")
            if track.realized != reference.realized:
                raise AlignmentError(
                    f"{track.model_id} and {reference.model_id} disagree on"
                    f" realized values")
        reports: list[EvalReport] = [MetricsService.evaluate(t)
                                     for t in tracks]
        best: float = min(r.rmse for r in reports)
        tied: list[str] = [r.model_id for r in reports if math.isclose(
            r.rmse, best, rel_tol=TIE_TOLERANCE)]
        tie: bool = len(tied) > 1
        winner = None if tie else tied[0]
        if tie:
            logger.warning("RMSE tie on %s between %s", label,
                           ", ".join(tied))
        else:
            logger.info("lowest RMSE on %s: %s", label, winner)
        return ComparisonReport(label=label, reports=reports, winner=winner,
                                tie=tie, tied_models=tied if tie else [])

    @staticmethod
    def table(report: ComparisonReport) -> str:
        """
        Comparison table text with values shown to 7 decimals
        :param report: comparison
        :type report: ComparisonReport
        :return: plain text table
        :rtype: str
        """
        marked: set[str] = set(report.tied_models) if report.tie else {
            report.winner}
        rows: list[list] = [
            [r.model_id, r.mae, r.mse, r.rmse,
             "tie" if report.tie and r.model_id in marked
             else "*" if r.model_id in marked else ""]
            for r in report.reports]
        body: str = tabulate(rows, headers=["model", "MAE", "MSE", "RMSE",
                                            "winner"], floatfmt=".7f")
        return f"{report.label}\n{body}\n"
