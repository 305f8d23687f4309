"""
Simulator services script.
"""
import logging
import math
import numpy as np
import pandas as pd
from models import garch
from models.family import Family
from schemas.simulation import SimConfig
from schemas.timeseries import ReturnSeries, VarianceSeries

logger: logging.Logger = logging.getLogger(__name__)


class SimulatorService:
    """
    Gaussian GARCH-family paths with known parameters.
    """

    @staticmethod
    def draw_shocks(size: int, rng_seed: int) -> np.ndarray:
        """
        Standard normal innovations from PCG64 via the ziggurat method
        :param size: number of draws
        :type size: int
        :param rng_seed: generator seed
        :type rng_seed: int
        :return: v_t sequence
        :rtype: np.ndarray
        """
        rng: np.random.Generator = np.random.Generator(
            np.random.PCG64(rng_seed))
        return rng.standard_normal(size)

    @staticmethod
    def simulate(config: SimConfig) -> tuple[ReturnSeries, VarianceSeries]:
        """
        Generate returns r_t = mu + v_t sigma_t, starting the recursion at
         the unconditional variance and discarding the burn-in
        :param config: data generating process
        :type config: SimConfig
        :return: returns and their true conditional variances, both of
         config.length observations on business-day dates
        :rtype: tuple[ReturnSeries, VarianceSeries]
        """
        params = config.params
        shocks: np.ndarray = SimulatorService.draw_shocks(
            config.burn_in + config.length, config.rng_seed)
        variance: float = garch.unconditional_variance(config.spec, params)
        alpha: np.ndarray = np.asarray(params.alpha, dtype=np.float64)
        beta: np.ndarray = np.asarray(params.beta, dtype=np.float64)
        if config.spec.family == Family.EGARCH:
            resids, log_sigma2 = garch.egarch_simulation(
                shocks, float(params.omega), alpha,
                np.asarray(params.gamma, dtype=np.float64), beta,
                math.log(variance))
            sigma2: np.ndarray = np.exp(log_sigma2)
        else:
            resids, sigma2 = garch.garch_simulation(
                shocks, float(params.omega), alpha, beta, variance)
        resids, sigma2 = resids[config.burn_in:], sigma2[config.burn_in:]
        dates: list = list(pd.bdate_range(start=config.start_date,
                                          periods=config.length).date)
        label: str = f"simulated {config.spec.model_id}"
        logger.info("simulated %d observations of %s (seed %d)",
                    config.length, config.spec.model_id, config.rng_seed)
        return (ReturnSeries(dates=dates, values=(params.mu + resids).tolist(),
                             label=label),
                VarianceSeries(dates=dates, values=sigma2.tolist(),
                               label=label))
