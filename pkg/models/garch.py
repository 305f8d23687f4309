"""
Conditional variance recursions and Gaussian likelihood.

The loops are compiled with numba; they run in nopython mode and release
the GIL so lag-order searches can evaluate cells on worker threads.
"""
import math
import numpy as np
from numba import jit
from core.exceptions import DomainError, InvalidParameterError, \
    NonstationaryModelError, NumericalOverflowError
from models.family import Family
from schemas.garch import GarchParams, GarchSpec

SQRT_2_OVER_PI: float = math.sqrt(2.0 / math.pi)
LOG_2PI: float = math.log(2.0 * math.pi)
# exp() stays finite and positive inside this band
LOG_VARIANCE_BOUND: float = 700.0


@jit(nopython=True, cache=True, nogil=True)
def garch_recursion(resids, omega, alpha, beta, backcast):
    """Compute GARCH(p,q) conditional variances.

    Pre-sample squared residuals and variances equal the backcast.
    """
    n = resids.shape[0]
    q = alpha.shape[0]
    p = beta.shape[0]
    sigma2 = np.empty(n)
    for t in range(n):
        value = omega
        for i in range(q):
            lag = t - i - 1
            if lag >= 0:
                value += alpha[i] * (resids[lag] * resids[lag])
            else:
                value += alpha[i] * backcast
        for j in range(p):
            lag = t - j - 1
            if lag >= 0:
                value += beta[j] * sigma2[lag]
            else:
                value += beta[j] * backcast
        sigma2[t] = value
    return sigma2


@jit(nopython=True, cache=True, nogil=True)
def egarch_recursion(resids, omega, alpha, gamma, beta, init_log_variance):
    """Compute EGARCH log variances.

    Pre-sample log variances equal init_log_variance and pre-sample
    standardized residual terms contribute nothing. Entries from the first
    out-of-band value onward are NaN.
    """
    n = resids.shape[0]
    q = alpha.shape[0]
    o = gamma.shape[0]
    p = beta.shape[0]
    log_sigma2 = np.full(n, np.nan)
    std = np.empty(n)
    for t in range(n):
        value = omega
        for i in range(q):
            lag = t - i - 1
            if lag >= 0:
                value += alpha[i] * (abs(std[lag]) - SQRT_2_OVER_PI)
        for j in range(o):
            lag = t - j - 1
            if lag >= 0:
                value += gamma[j] * std[lag]
        for k in range(p):
            lag = t - k - 1
            if lag >= 0:
                value += beta[k] * log_sigma2[lag]
            else:
                value += beta[k] * init_log_variance
        if not abs(value) < LOG_VARIANCE_BOUND:
            return log_sigma2
        log_sigma2[t] = value
        std[t] = resids[t] / math.exp(0.5 * value)
    return log_sigma2


@jit(nopython=True, cache=True, nogil=True)
def garch_simulation(shocks, omega, alpha, beta, backcast):
    """Generate GARCH residuals u_t = v_t * sigma_t from standard normal
    shocks, using the arithmetic of garch_recursion."""
    n = shocks.shape[0]
    q = alpha.shape[0]
    p = beta.shape[0]
    sigma2 = np.empty(n)
    resids = np.empty(n)
    for t in range(n):
        value = omega
        for i in range(q):
            lag = t - i - 1
            if lag >= 0:
                value += alpha[i] * (resids[lag] * resids[lag])
            else:
                value += alpha[i] * backcast
        for j in range(p):
            lag = t - j - 1
            if lag >= 0:
                value += beta[j] * sigma2[lag]
            else:
                value += beta[j] * backcast
        sigma2[t] = value
        resids[t] = shocks[t] * math.sqrt(value)
    return resids, sigma2


@jit(nopython=True, cache=True, nogil=True)
def egarch_simulation(shocks, omega, alpha, gamma, beta, init_log_variance):
    """Generate EGARCH residuals from standard normal shocks, using the
    arithmetic of egarch_recursion."""
    n = shocks.shape[0]
    q = alpha.shape[0]
    o = gamma.shape[0]
    p = beta.shape[0]
    log_sigma2 = np.empty(n)
    std = np.empty(n)
    resids = np.empty(n)
    for t in range(n):
        value = omega
        for i in range(q):
            lag = t - i - 1
            if lag >= 0:
                value += alpha[i] * (abs(std[lag]) - SQRT_2_OVER_PI)
        for j in range(o):
            lag = t - j - 1
            if lag >= 0:
                value += gamma[j] * std[lag]
        for k in range(p):
            lag = t - k - 1
            if lag >= 0:
                value += beta[k] * log_sigma2[lag]
            else:
                value += beta[k] * init_log_variance
        log_sigma2[t] = value
        resids[t] = shocks[t] * math.exp(0.5 * value)
        std[t] = resids[t] / math.exp(0.5 * value)
    return resids, log_sigma2


def _as_array(values) -> np.ndarray:
    return np.ascontiguousarray(values, dtype=np.float64)


def is_feasible(family: Family, params: GarchParams) -> bool:
    """
    Check the family constraints.
    :param family: conditional variance family
    :type family: Family
    :param params: candidate parameters
    :type params: GarchParams
    :return: True when the constraints hold
    :rtype: bool
    """
    vector: np.ndarray = params.to_vector()
    if not np.all(np.isfinite(vector)):
        return False
    if family == Family.EGARCH:
        return sum(params.beta) < 1.0
    return params.omega > 0.0 and all(a >= 0.0 for a in params.alpha) \
        and all(b >= 0.0 for b in params.beta) \
        and sum(params.alpha) + sum(params.beta) < 1.0


def cond_variance_garch(
        params: GarchParams, residuals, init_variance: float) -> np.ndarray:
    """
    GARCH(p,q) (and ARCH(q)) conditional variance path.
    :param params: feasible GARCH parameters
    :type params: GarchParams
    :param residuals: u_t sequence
    :type residuals: array_like
    :param init_variance: pre-sample u^2 and sigma^2 value
    :type init_variance: float
    :return: sigma_t^2 with the length of the residuals
    :rtype: np.ndarray
    """
    if not is_feasible(Family.GARCH, params):
        raise InvalidParameterError(
            "GARCH parameters violate omega > 0, alpha >= 0, beta >= 0,"
            " sum(alpha) + sum(beta) < 1")
    if not init_variance > 0:
        raise InvalidParameterError("initial variance must be positive")
    return garch_recursion(
        _as_array(residuals), float(params.omega), _as_array(params.alpha),
        _as_array(params.beta), float(init_variance))


def cond_variance_egarch(
        params: GarchParams, residuals,
        init_log_variance: float) -> np.ndarray:
    """
    EGARCH conditional variance path.
    :param params: EGARCH parameters with sum(beta) < 1
    :type params: GarchParams
    :param residuals: u_t sequence
    :type residuals: array_like
    :param init_log_variance: pre-sample ln sigma^2
    :type init_log_variance: float
    :return: sigma_t^2 with the length of the residuals
    :rtype: np.ndarray
    """
    if not is_feasible(Family.EGARCH, params):
        raise InvalidParameterError("EGARCH parameters require sum(beta) < 1")
    if not math.isfinite(init_log_variance):
        raise InvalidParameterError("initial log variance must be finite")
    log_sigma2: np.ndarray = egarch_recursion(
        _as_array(residuals), float(params.omega), _as_array(params.alpha),
        _as_array(params.gamma), _as_array(params.beta),
        float(init_log_variance))
    bad: np.ndarray = np.flatnonzero(np.isnan(log_sigma2))
    if bad.size:
        raise NumericalOverflowError(
            "EGARCH log variance left the representable range", int(bad[0]))
    return np.exp(log_sigma2)


def cond_variance(spec: GarchSpec, params: GarchParams, residuals,
                  backcast: float) -> np.ndarray:
    """
    Dispatch to the family recursion.
    :param spec: specification
    :type spec: GarchSpec
    :param params: parameters
    :type params: GarchParams
    :param residuals: u_t sequence
    :type residuals: array_like
    :param backcast: pre-sample variance; its logarithm for EGARCH
    :type backcast: float
    :return: sigma_t^2
    :rtype: np.ndarray
    """
    if spec.family == Family.EGARCH:
        return cond_variance_egarch(params, residuals, math.log(backcast))
    return cond_variance_garch(params, residuals, backcast)


def log_likelihood(residuals, variance_path) -> float:
    """
    Gaussian log-likelihood of residuals given their variances.
    :param residuals: u_t sequence
    :type residuals: array_like
    :param variance_path: sigma_t^2 sequence of equal length
    :type variance_path: array_like
    :return: -(T/2) ln 2pi - 1/2 sum ln sigma^2 - 1/2 sum u^2 / sigma^2
    :rtype: float
    """
    resids: np.ndarray = _as_array(residuals)
    sigma2: np.ndarray = _as_array(variance_path)
    if resids.shape != sigma2.shape:
        raise DomainError(
            f"{resids.size} residuals do not match {sigma2.size} variances")
    if not np.all(sigma2 > 0):
        raise DomainError("variances must be positive")
    return float(-0.5 * (resids.size * LOG_2PI + np.sum(np.log(sigma2))
                         + np.sum(resids * resids / sigma2)))


def one_step(spec: GarchSpec, params: GarchParams, residuals,
             variances) -> float:
    """
    Apply the family recursion once past the end of the history.
    :param spec: specification
    :type spec: GarchSpec
    :param params: parameters
    :type params: GarchParams
    :param residuals: chronological u_t history
    :type residuals: array_like
    :param variances: chronological sigma_t^2 history aligned with residuals
    :type variances: array_like
    :return: sigma_{t+1}^2
    :rtype: float
    """
    resids: np.ndarray = _as_array(residuals)
    sigma2: np.ndarray = _as_array(variances)
    value: float = params.omega
    if spec.family == Family.EGARCH:
        std: np.ndarray = resids / np.sqrt(sigma2)
        for i, a in enumerate(params.alpha):
            value += a * (abs(std[-1 - i]) - SQRT_2_OVER_PI)
        for j, g in enumerate(params.gamma):
            value += g * std[-1 - j]
        for k, b in enumerate(params.beta):
            value += b * math.log(sigma2[-1 - k])
        if not abs(value) < LOG_VARIANCE_BOUND:
            raise NumericalOverflowError(
                "EGARCH forecast left the representable range", resids.size)
        return math.exp(value)
    for i, a in enumerate(params.alpha):
        value += a * (resids[-1 - i] * resids[-1 - i])
    for j, b in enumerate(params.beta):
        value += b * sigma2[-1 - j]
    return float(value)


def unconditional_variance(spec: GarchSpec, params: GarchParams) -> float:
    """
    Long-run variance of a stationary model.
    :param spec: specification
    :type spec: GarchSpec
    :param params: parameters
    :type params: GarchParams
    :return: a_0 / (1 - sum a - sum b), or exp(omega / (1 - sum b)) for
     EGARCH
    :rtype: float
    """
    if spec.family == Family.EGARCH:
        beta_sum: float = sum(params.beta)
        if beta_sum >= 1.0:
            raise NonstationaryModelError(
                f"sum(beta) = {beta_sum} >= 1 has no unconditional variance")
        return math.exp(params.omega / (1.0 - beta_sum))
    persistence: float = sum(params.alpha) + sum(params.beta)
    if persistence >= 1.0:
        raise NonstationaryModelError(
            f"sum(alpha) + sum(beta) = {persistence} >= 1 has no"
            f" unconditional variance")
    return params.omega / (1.0 - persistence)
