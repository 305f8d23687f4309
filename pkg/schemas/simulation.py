"""
Simulation schemas
"""
from datetime import date
from pydantic import Field, root_validator
from core.exceptions import InvalidParameterError
from models import garch
from models.family import Family
from schemas import FrozenModel
from schemas.garch import GarchParams, GarchSpec


class SimConfig(FrozenModel):
    """
    Known-parameter data generating process.
    Nonstationary parameters raise NonstationaryModelError on construction.
    """
    spec: GarchSpec = Field(..., title='Specification')
    params: GarchParams = Field(..., title='Parameters')
    length: int = Field(..., title='Length', ge=1)
    burn_in: int = Field(
        default=1000, title='Burn-in', ge=0,
        description='Leading observations generated and discarded')
    rng_seed: int = Field(default=0, title='Seed')
    start_date: date = Field(
        default=date(2000, 1, 3), title='Start date',
        description='First business day of the synthetic calendar')

    @root_validator(skip_on_failure=True, allow_reuse=True)
    def check_process(cls, values: dict) -> dict:
        """
        Parameter layout and stationarity validator.
        :param values: validated fields
        :type values: dict
        :return: the same fields
        :rtype: dict
        """
        spec: GarchSpec = values["spec"]
        params: GarchParams = values["params"]
        if (len(params.alpha), len(params.gamma), len(params.beta)) != (
                spec.q, spec.o or 0, spec.p):
            raise ValueError(f"parameters do not match {spec.model_id}")
        family: Family = Family.EGARCH if spec.family == Family.EGARCH \
            else Family.GARCH
        if family == Family.GARCH and (params.omega <= 0 or any(
                a < 0 for a in params.alpha) or any(
                b < 0 for b in params.beta)):
            raise InvalidParameterError(
                "GARCH parameters require omega > 0 and non-negative"
                " coefficients")
        garch.unconditional_variance(spec, params)
        return values

    class Config:
        """
        Config class for SimConfig
        """
        schema_extra: dict[str, dict] = {
            "example": {
                "spec": {"family": "GARCH", "p": 1, "q": 1},
                "params": {"mu": 0.0, "omega": 0.00001, "alpha": [0.1],
                           "beta": [0.85]},
                "length": 5000, "burn_in": 1000, "rng_seed": 0}
        }
