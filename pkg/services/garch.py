"""
GARCH services script.
"""
import logging
import math
from typing import Optional
import numpy as np
from scipy.optimize import OptimizeResult, minimize
from core.exceptions import DegenerateInputError, InsufficientDataError, \
    NonstationaryModelError, NumericalError
from models import garch
from models.family import Family
from schemas.garch import FitOptions, FitResult, FitSummary, GarchParams, \
    GarchSpec
from schemas.timeseries import ReturnSeries
from services.diagnostics import DiagnosticsService

logger: logging.Logger = logging.getLogger(__name__)

INITIAL_ALPHA: float = 0.10
INITIAL_BETA: float = 0.85
INITIAL_GAMMA: float = -0.10
SIMPLEX_STEP: float = 0.1
RESTART_SPREAD: float = 0.05


class _Objective:
    """
    Negative log-likelihood over the raw parameter vector with an
     infeasibility barrier (+inf outside the family constraints).
    """

    def __init__(self, spec: GarchSpec, returns: np.ndarray,
                 backcast: float) -> None:
        self.family: Family = spec.family
        self.q: int = spec.q
        self.o: int = spec.o or 0
        self.returns: np.ndarray = returns
        self.backcast: float = backcast
        self.log_backcast: float = math.log(backcast)

    def split(self, vector: np.ndarray) -> tuple[
            float, float, np.ndarray, np.ndarray, np.ndarray]:
        """
        Split a vector in estimation order
        :param vector: mu, omega, alpha, gamma, beta
        :type vector: np.ndarray
        :return: mu, omega, alpha, gamma, beta
        :rtype: tuple
        """
        q_end: int = 2 + self.q
        o_end: int = q_end + self.o
        return (vector[0], vector[1], np.ascontiguousarray(vector[2:q_end]),
                np.ascontiguousarray(vector[q_end:o_end]),
                np.ascontiguousarray(vector[o_end:]))

    def variances(self, vector: np.ndarray) -> Optional[np.ndarray]:
        """
        Conditional variances, or None for infeasible parameters
        :param vector: parameters in estimation order
        :type vector: np.ndarray
        :return: sigma_t^2 path
        :rtype: Optional[np.ndarray]
        """
        if not np.all(np.isfinite(vector)):
            return None
        mu, omega, alpha, gamma, beta = self.split(vector)
        resids: np.ndarray = self.returns - mu
        if self.family == Family.EGARCH:
            if beta.sum() >= 1.0:
                return None
            log_sigma2: np.ndarray = garch.egarch_recursion(
                resids, omega, alpha, gamma, beta, self.log_backcast)
            if np.isnan(log_sigma2[-1]):
                return None
            return np.exp(log_sigma2)
        if omega <= 0 or np.any(alpha < 0) or np.any(beta < 0) \
                or alpha.sum() + beta.sum() >= 1.0:
            return None
        return garch.garch_recursion(resids, omega, alpha, beta,
                                     self.backcast)

    def __call__(self, vector: np.ndarray) -> float:
        sigma2: Optional[np.ndarray] = self.variances(vector)
        if sigma2 is None or not np.all(sigma2 > 0):
            return math.inf
        resids: np.ndarray = self.returns - vector[0]
        value: float = 0.5 * (resids.size * garch.LOG_2PI
                              + np.sum(np.log(sigma2))
                              + np.sum(resids * resids / sigma2))
        return value if math.isfinite(value) else math.inf


class GarchService:
    """
    Maximum likelihood estimation and forecasting for GARCH-family models.
    """

    @staticmethod
    def backcast(returns: np.ndarray) -> float:
        """
        Pre-sample variance: sample variance of the demeaned returns
        :param returns: in-sample returns
        :type returns: np.ndarray
        :return: variance with n-1 denominator
        :rtype: float
        """
        return float(np.var(returns, ddof=1))

    @staticmethod
    def initial_params(spec: GarchSpec, returns: np.ndarray) -> GarchParams:
        """
        Feasible starting point near typical daily-return estimates
        :param spec: specification
        :type spec: GarchSpec
        :param returns: in-sample returns
        :type returns: np.ndarray
        :return: starting parameters
        :rtype: GarchParams
        """
        variance: float = GarchService.backcast(returns)
        alpha: list[float] = [INITIAL_ALPHA / spec.q] * spec.q
        beta: list[float] = [INITIAL_BETA / spec.p] * spec.p if spec.p else []
        if spec.family == Family.EGARCH:
            o: int = spec.o or 1
            return GarchParams(
                mu=float(np.mean(returns)),
                omega=(1.0 - sum(beta)) * math.log(variance), alpha=alpha,
                gamma=[INITIAL_GAMMA / o] * o, beta=beta)
        return GarchParams(
            mu=float(np.mean(returns)),
            omega=variance * (1.0 - sum(alpha) - sum(beta)), alpha=alpha,
            beta=beta)

    @staticmethod
    def _scales(spec: GarchSpec, start: np.ndarray,
                returns: np.ndarray) -> np.ndarray:
        scales: np.ndarray = np.maximum(np.abs(start), 0.05)
        scales[0] = float(np.std(returns)) / math.sqrt(returns.size)
        scales[1] = max(abs(start[1]), 1e-12) if spec.family != \
            Family.EGARCH else max(abs(start[1]), 0.05)
        return scales

    @staticmethod
    def _simplex(spec: GarchSpec, size: int) -> np.ndarray:
        steps: np.ndarray = np.full(size, SIMPLEX_STEP)
        steps[size - spec.p:] = -SIMPLEX_STEP
        return np.vstack([np.zeros(size), np.diag(steps)])

    @staticmethod
    def _estimate(spec: GarchSpec, returns: np.ndarray,
                  options: FitOptions) -> tuple[np.ndarray, int, bool, float]:
        """
        Nelder-Mead on (theta - theta_0) / scale with perturbed restarts.
        """
        backcast: float = GarchService.backcast(returns)
        objective: _Objective = _Objective(spec, returns, backcast)
        start_params: GarchParams = options.start or \
            GarchService.initial_params(spec, returns)
        start: np.ndarray = start_params.to_vector()
        if not math.isfinite(objective(start)):
            logger.debug("warm start infeasible for %s, using default guess",
                         spec.model_id)
            start = GarchService.initial_params(spec, returns).to_vector()
        scales: np.ndarray = GarchService._scales(spec, start, returns)
        size: int = start.size
        max_iter: int = options.iteration_factor * size
        # xatol bounds the simplex in raw parameter units
        tolerance: float = options.xatol / float(np.max(scales))

        def scaled(x: np.ndarray) -> float:
            return objective(start + scales * x)

        rng: np.random.Generator = np.random.default_rng(options.seed)
        best_x: np.ndarray = np.zeros(size)
        best_value: float = scaled(best_x)
        best_converged: bool = False
        iterations: int = 0
        for attempt in range(options.restarts + 1):
            origin: np.ndarray = best_x
            if attempt:
                spread: float = RESTART_SPREAD
                for _ in range(10):
                    candidate: np.ndarray = best_x + rng.normal(
                        0.0, spread, size)
                    if math.isfinite(scaled(candidate)):
                        origin = candidate
                        break
                    spread /= 2
            result: OptimizeResult = minimize(
                scaled, origin, method="Nelder-Mead",
                options={"initial_simplex": origin + GarchService._simplex(
                    spec, size), "xatol": tolerance, "fatol": math.inf,
                         "maxiter": max_iter, "maxfev": 10 * max_iter})
            iterations += int(result.nit)
            converged: bool = bool(result.success) and \
                math.isfinite(result.fun)
            if result.fun < best_value or (
                    result.fun == best_value and converged):
                best_x, best_value = np.array(result.x), float(result.fun)
                best_converged = converged
            elif attempt == 0:
                best_converged = converged
        return start + scales * best_x, iterations, best_converged, backcast

    @staticmethod
    def fit(series: ReturnSeries, spec: GarchSpec,
            options: Optional[FitOptions] = None) -> FitResult:
        """
        Maximum likelihood fit of a conditional variance model
        :param series: in-sample returns
        :type series: ReturnSeries
        :param spec: specification to estimate
        :type spec: GarchSpec
        :param options: optimizer settings
        :type options: FitOptions
        :return: estimate with variance path, residuals and AIC
        :rtype: FitResult
        """
        return GarchService.fit_array(series.array, spec, options)

    @staticmethod
    def fit_array(returns: np.ndarray, spec: GarchSpec,
                  options: Optional[FitOptions] = None) -> FitResult:
        """
        Maximum likelihood fit on a bare return array
        :param returns: in-sample returns
        :type returns: np.ndarray
        :param spec: specification to estimate
        :type spec: GarchSpec
        :param options: optimizer settings
        :type options: FitOptions
        :return: estimate with variance path, residuals and AIC
        :rtype: FitResult
        """
        options = options or FitOptions()
        data: np.ndarray = np.ascontiguousarray(returns, dtype=np.float64)
        required: int = 20 * (spec.p + spec.q + 2)
        if data.size < required:
            raise InsufficientDataError(
                f"{data.size} observations given; {spec.model_id} needs"
                f" {required}")
        if np.ptp(data) == 0:
            raise DegenerateInputError("cannot fit a constant return series")
        vector, iterations, converged, backcast = GarchService._estimate(
            spec, data, options)
        params: GarchParams = GarchParams.from_vector(spec, vector)
        resids: np.ndarray = data - params.mu
        sigma2: np.ndarray = garch.cond_variance(spec, params, resids,
                                                 backcast)
        loglik: float = garch.log_likelihood(resids, sigma2)
        result: FitResult = FitResult(
            spec=spec, params=params, log_likelihood=loglik,
            aic=2.0 * spec.n_params - 2.0 * loglik,
            conditional_variance_path=sigma2.tolist(),
            std_residuals=(resids / np.sqrt(sigma2)).tolist(),
            converged=converged, iterations=iterations, backcast=backcast,
            nobs=data.size)
        logger.info("fitted %s: loglik %.4f, AIC %.4f, converged %s",
                    spec.model_id, loglik, result.aic, converged)
        return result

    @staticmethod
    def unconditional_variance(result: FitResult) -> float:
        """
        Long-run variance of the fitted model
        :param result: estimate
        :type result: FitResult
        :return: a_0 / (1 - sum a - sum b), or exp(omega / (1 - sum b))
        :rtype: float
        """
        return garch.unconditional_variance(result.spec, result.params)

    @staticmethod
    def forecast_one_step(result: FitResult, residuals,
                          variances) -> float:
        """
        One-step-ahead conditional variance
        :param result: estimate supplying the parameters
        :type result: FitResult
        :param residuals: latest u_t values, oldest first
        :type residuals: array_like
        :param variances: latest sigma_t^2 values aligned with residuals
        :type variances: array_like
        :return: sigma_{t+1}^2
        :rtype: float
        """
        return GarchService.forecast_with(result.spec, result.params,
                                          residuals, variances)

    @staticmethod
    def forecast_with(spec: GarchSpec, params: GarchParams, residuals,
                      variances) -> float:
        """
        One-step-ahead conditional variance from bare parameters
        :param spec: specification
        :type spec: GarchSpec
        :param params: parameters
        :type params: GarchParams
        :param residuals: latest u_t values, oldest first
        :type residuals: array_like
        :param variances: latest sigma_t^2 values aligned with residuals
        :type variances: array_like
        :return: sigma_{t+1}^2
        :rtype: float
        """
        resids: np.ndarray = np.asarray(residuals, dtype=np.float64)
        sigma2: np.ndarray = np.asarray(variances, dtype=np.float64)
        if min(resids.size, sigma2.size) < spec.max_lag:
            raise InsufficientDataError(
                f"{spec.model_id} needs {spec.max_lag} trailing residuals"
                f" and variances")
        forecast: float = garch.one_step(spec, params, resids, sigma2)
        if not forecast > 0:
            raise NumericalError(f"non-positive forecast {forecast}")
        return forecast

    @staticmethod
    def summarize(result: FitResult, lb_lags: int = 12) -> FitSummary:
        """
        Report column: named coefficients, fit statistics, residual tests
         and the unconditional variance
        :param result: estimate
        :type result: FitResult
        :param lb_lags: Ljung-Box lags for the residual checks
        :type lb_lags: int
        :return: summary
        :rtype: FitSummary
        """
        variance: Optional[float] = None
        try:
            variance = GarchService.unconditional_variance(result)
        except NonstationaryModelError:
            logger.warning("%s estimate is nonstationary",
                           result.spec.model_id)
        std: np.ndarray = np.asarray(result.std_residuals)
        spec: GarchSpec = result.spec
        return FitSummary(
            model_id=spec.model_id, family=spec.family, p=spec.p, o=spec.o,
            q=spec.q, params=dict(zip(spec.param_names(),
                                      result.params.to_vector().tolist())),
            log_likelihood=result.log_likelihood, aic=result.aic,
            converged=result.converged, iterations=result.iterations,
            persistence=result.params.persistence,
            unconditional_variance=variance,
            unconditional_volatility=math.sqrt(variance)
            if variance is not None else None,
            ljung_box=DiagnosticsService.ljung_box(std, lb_lags),
            ljung_box_squared=DiagnosticsService.ljung_box(std * std,
                                                           lb_lags))
