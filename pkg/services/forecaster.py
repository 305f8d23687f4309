"""
Forecaster services script.
"""
import logging
from typing import Optional
import numpy as np
from core.exceptions import ConfigurationError, ForecastError, \
    InsufficientDataError, VolatilityLabError
from models import garch
from schemas.ann import MlpModel
from schemas.forecast import ForecastTrack
from schemas.garch import FitOptions, FitResult, GarchParams, GarchSpec
from schemas.timeseries import ReturnSeries, SplitSpec, VarianceSeries
from services.ann import AnnService
from services.garch import GarchService

logger: logging.Logger = logging.getLogger(__name__)


def _check_split(size: int, split: SplitSpec) -> None:
    if split.total != size:
        raise ConfigurationError(
            f"split covers {split.total} observations but the series has"
            f" {size}")


class ForecasterService:
    """
    Rolling fixed-length window, one-step-ahead variance forecasts.
    """

    @staticmethod
    def _refit(window: np.ndarray, spec: GarchSpec, options: FitOptions,
               step: int) -> Optional[FitResult]:
        try:
            return GarchService.fit_array(window, spec, options)
        except VolatilityLabError as exc:
            logger.warning("refit at step %d failed: %s", step, exc)
            return None

    @staticmethod
    def rolling_forecast_garch(
            series: ReturnSeries, split: SplitSpec, spec: GarchSpec,
            refit_interval: int = 20, options: Optional[FitOptions] = None,
            params: Optional[GarchParams] = None) -> ForecastTrack:
        """
        Slide a window of train_len returns across the test period and
         forecast each next variance.
        Parameters are re-estimated every refit_interval steps, warm
         started at the previous estimate; a failed or non-converged refit
         keeps the last converged parameters and flags the step.
        :param series: in-sample and out-of-sample returns
        :type series: ReturnSeries
        :param split: partition of the series
        :type split: SplitSpec
        :param spec: model to estimate
        :type spec: GarchSpec
        :param refit_interval: steps between estimations
        :type refit_interval: int
        :param options: optimizer settings
        :type options: FitOptions
        :param params: known parameters; no estimation takes place
        :type params: GarchParams
        :return: test_len forecasts against the squared-return proxy
        :rtype: ForecastTrack
        """
        if refit_interval < 1:
            raise ConfigurationError(
                f"refit interval must be >= 1, got {refit_interval}")
        _check_split(len(series), split)
        returns: np.ndarray = series.array
        length: int = split.train_len
        if length < spec.max_lag:
            raise InsufficientDataError(
                f"window of {length} is shorter than {spec.model_id} lags")
        options = options or FitOptions()
        current: Optional[GarchParams] = params
        converged_once: bool = params is not None
        flagged: list[int] = []
        refits: int = 0
        predicted: list[float] = []
        for step in range(split.test_len):
            end: int = length + step
            window: np.ndarray = returns[end - length:end]
            if params is None and step % refit_interval == 0:
                result: Optional[FitResult] = ForecasterService._refit(
                    window, spec, options if current is None else
                    options.copy(update={"start": current}), step)
                refits += 1
                if result is not None and result.converged:
                    current, converged_once = result.params, True
                else:
                    flagged.append(step)
                    if result is not None and not converged_once:
                        current = result.params
                    if current is None:
                        raise ForecastError(
                            f"no usable {spec.model_id} estimate at step"
                            f" {step}")
                    logger.warning("step %d keeps the previous %s"
                                   " parameters", step, spec.model_id)
            resids: np.ndarray = window - current.mu
            sigma2: np.ndarray = garch.cond_variance(
                spec, current, resids, GarchService.backcast(window))
            predicted.append(GarchService.forecast_with(spec, current,
                                                        resids, sigma2))
        test: np.ndarray = returns[length:]
        logger.info("%s rolling forecast: %d steps, %d refits, %d flagged",
                    spec.model_id, split.test_len, refits, len(flagged))
        return ForecastTrack(
            dates=series.dates[length:], predicted=predicted,
            realized=(test * test).tolist(), model_id=spec.model_id,
            refit_interval=None if params is not None else refit_interval,
            refit_count=refits, flagged_steps=flagged)

    @staticmethod
    def rolling_forecast_ann(proxy: VarianceSeries, split: SplitSpec,
                             model: MlpModel) -> ForecastTrack:
        """
        Predict each test-period proxy value from the true values that
         precede it, with frozen network weights
        :param proxy: squared returns over the whole series
        :type proxy: VarianceSeries
        :param split: partition of the series
        :type split: SplitSpec
        :param model: network trained on the in-sample proxy
        :type model: MlpModel
        :return: test_len forecasts against the proxy
        :rtype: ForecastTrack
        """
        _check_split(len(proxy), split)
        lookback: int = model.layer_sizes[0]
        if split.train_len < lookback:
            raise InsufficientDataError(
                f"{split.train_len} in-sample values do not fill a window of"
                f" {lookback}")
        values: np.ndarray = proxy.array
        start: int = split.train_len
        predicted: list[float] = [
            AnnService.predict_one(model, values[t - lookback:t])
            for t in range(start, len(values))]
        logger.info("ANN(%d) rolling forecast: %d steps", model.hidden_size,
                    len(predicted))
        return ForecastTrack(
            dates=proxy.dates[start:], predicted=predicted,
            realized=values[start:].tolist(),
            model_id=f"ANN({model.hidden_size})")
