"""
GARCH schemas for Pydantic models
"""
from typing import Optional
import numpy as np
from pydantic import Field, root_validator
from models.family import Family
from schemas import FrozenModel
from schemas.diagnostics import TestResult


class GarchSpec(FrozenModel):
    """
    Family tag and lag orders of a conditional variance model.
    """
    family: Family = Field(
        default=Family.GARCH, title='Family',
        description='ARCH, GARCH or EGARCH')
    p: int = Field(
        default=1, title='p', description='Conditional variance lags', ge=0)
    q: int = Field(
        default=1, title='q', description='Shock lags', ge=1)
    o: Optional[int] = Field(
        default=None, title='o',
        description='Asymmetry lags, EGARCH only', ge=1)

    @root_validator(pre=True, allow_reuse=True)
    def default_asymmetry(cls, values: dict) -> dict:
        """
        EGARCH asymmetry order defaults to one.
        :param values: raw fields
        :type values: dict
        :return: fields with o filled in for EGARCH
        :rtype: dict
        """
        family = values.get("family", Family.GARCH)
        if Family(family) == Family.EGARCH and values.get("o") is None:
            values = {**values, "o": 1}
        return values

    @root_validator(skip_on_failure=True, allow_reuse=True)
    def check_orders(cls, values: dict) -> dict:
        """
        Lag orders validator.
        :param values: validated fields
        :type values: dict
        :return: the same fields
        :rtype: dict
        """
        family: Family = values["family"]
        if family == Family.ARCH and values["p"] != 0:
            raise ValueError("ARCH models carry no variance lags (p = 0)")
        if family != Family.ARCH and values["p"] < 1:
            raise ValueError(f"{family.value} requires p >= 1")
        if family != Family.EGARCH and values["o"] is not None:
            raise ValueError("asymmetry lags apply to EGARCH only")
        return values

    @property
    def model_id(self) -> str:
        """
        Short identifier such as GARCH(1,1) or EGARCH(1,1,1)
        :return: family and orders
        :rtype: str
        """
        if self.family == Family.ARCH:
            return f"ARCH({self.q})"
        if self.family == Family.EGARCH:
            return f"EGARCH({self.p},{self.o},{self.q})"
        return f"GARCH({self.p},{self.q})"

    @property
    def max_lag(self) -> int:
        """
        Longest lag the recursion looks back
        :return: max(p, q, o)
        :rtype: int
        """
        return max(self.p, self.q, self.o or 0)

    @property
    def n_params(self) -> int:
        """
        Parameter count including the mean constant
        :return: 2 + q + o + p
        :rtype: int
        """
        return 2 + self.q + (self.o or 0) + self.p

    def param_names(self) -> list[str]:
        """
        Names of the parameter vector in estimation order.
        :return: mu, omega, alpha[i], gamma[j], beta[k]
        :rtype: list[str]
        """
        names: list[str] = ["mu", "omega"]
        names += [f"alpha[{i + 1}]" for i in range(self.q)]
        names += [f"gamma[{j + 1}]" for j in range(self.o or 0)]
        names += [f"beta[{k + 1}]" for k in range(self.p)]
        return names

    class Config:
        """
        Config class for GarchSpec
        """
        schema_extra: dict[str, dict] = {
            "example": {"family": "EGARCH", "p": 1, "o": 1, "q": 1}
        }


class GarchParams(FrozenModel):
    """
    Mean constant and conditional variance coefficients.
    """
    mu: float = Field(
        default=0.0, title='mu', description='Mean equation constant')
    omega: float = Field(
        ..., title='omega', description='Variance intercept')
    alpha: list[float] = Field(
        default_factory=list, title='alpha',
        description='Shock coefficients a_1..a_q')
    beta: list[float] = Field(
        default_factory=list, title='beta',
        description='Variance lag coefficients beta_1..beta_p')
    gamma: list[float] = Field(
        default_factory=list, title='gamma',
        description='Asymmetry coefficients, EGARCH only')

    def to_vector(self) -> np.ndarray:
        """
        Flatten into estimation order.
        :return: mu, omega, alpha, gamma, beta
        :rtype: np.ndarray
        """
        return np.array([self.mu, self.omega, *self.alpha, *self.gamma,
                         *self.beta], dtype=np.float64)

    @classmethod
    def from_vector(cls, spec: GarchSpec, vector: np.ndarray) -> "GarchParams":
        """
        Rebuild parameters from a vector in estimation order.
        :param spec: lag orders to split the vector with
        :type spec: GarchSpec
        :param vector: mu, omega, alpha, gamma, beta
        :type vector: np.ndarray
        :return: parameters
        :rtype: GarchParams
        """
        values: list[float] = [float(x) for x in vector]
        o: int = spec.o or 0
        return cls(mu=values[0], omega=values[1],
                   alpha=values[2:2 + spec.q],
                   gamma=values[2 + spec.q:2 + spec.q + o],
                   beta=values[2 + spec.q + o:])

    @property
    def persistence(self) -> float:
        """
        Sum of the coefficients governing mean reversion
        :return: sum(alpha) + sum(beta); sum(beta) when gamma is present
        :rtype: float
        """
        if self.gamma:
            return float(sum(self.beta))
        return float(sum(self.alpha) + sum(self.beta))

    class Config:
        """
        Config class for GarchParams
        """
        schema_extra: dict[str, dict] = {
            "example": {"mu": 0.0005, "omega": 0.000002, "alpha": [0.1],
                        "beta": [0.88], "gamma": []}
        }


class FitOptions(FrozenModel):
    """
    Nelder-Mead settings for maximum likelihood estimation.
    """
    restarts: int = Field(
        default=3, title='Restarts',
        description='Perturbed restarts after the first run', ge=0)
    iteration_factor: int = Field(
        default=500, title='Iteration factor',
        description='Iteration cap per run is this times the parameter'
                    ' count', ge=1)
    xatol: float = Field(
        default=1e-8, title='Simplex tolerance',
        description='Simplex diameter in raw parameter units at which a run'
                    ' stops', gt=0)
    seed: int = Field(
        default=0, title='Seed', description='Seed for restart perturbations')
    start: Optional[GarchParams] = Field(
        default=None, title='Warm start',
        description='Starting parameters replacing the default guess')


class FitResult(FrozenModel):
    """
    Maximum likelihood estimate of one specification.
    """
    spec: GarchSpec = Field(..., title='Specification')
    params: GarchParams = Field(..., title='Parameters')
    log_likelihood: float = Field(
        ..., title='Log-likelihood', description='Gaussian log-likelihood')
    aic: float = Field(..., title='AIC', description='2k - 2l, k counts mu')
    conditional_variance_path: list[float] = Field(
        ..., title='Conditional variance',
        description='In-sample sigma_t^2 at the optimum')
    std_residuals: list[float] = Field(
        ..., title='Standardized residuals', description='u_t / sigma_t')
    converged: bool = Field(
        ..., title='Converged', description='Optimizer met its tolerance')
    iterations: int = Field(
        ..., title='Iterations', description='Simplex iterations used', ge=0)
    backcast: float = Field(
        ..., title='Backcast', gt=0,
        description='Pre-sample variance used to start the recursion')
    nobs: int = Field(..., title='Observations', ge=1)

    @root_validator(skip_on_failure=True, allow_reuse=True)
    def check_positive_path(cls, values: dict) -> dict:
        """
        Positive conditional variance validator.
        :param values: validated fields
        :type values: dict
        :return: the same fields
        :rtype: dict
        """
        if any(v <= 0 for v in values["conditional_variance_path"]):
            raise ValueError("conditional variances must be positive")
        return values


class FitSummary(FrozenModel):
    """
    Machine readable fit report for one specification.
    """
    model_id: str = Field(..., title='Model')
    family: Family = Field(..., title='Family')
    p: int = Field(..., title='p')
    o: Optional[int] = Field(default=None, title='o')
    q: int = Field(..., title='q')
    params: dict[str, float] = Field(..., title='Named parameters')
    log_likelihood: float = Field(..., title='Log-likelihood')
    aic: float = Field(..., title='AIC')
    converged: bool = Field(..., title='Converged')
    iterations: int = Field(..., title='Iterations')
    persistence: float = Field(..., title='Persistence')
    unconditional_variance: Optional[float] = Field(
        default=None, title='Unconditional variance',
        description='Absent for nonstationary estimates')
    unconditional_volatility: Optional[float] = Field(
        default=None, title='Unconditional volatility')
    ljung_box: Optional[TestResult] = Field(
        default=None, title='Q on standardized residuals')
    ljung_box_squared: Optional[TestResult] = Field(
        default=None, title='Q on squared standardized residuals')
