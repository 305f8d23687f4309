"""
Forecast schemas
"""
import math
from datetime import date
from typing import Optional
from pydantic import Field, root_validator
from schemas import FrozenModel


class ForecastTrack(FrozenModel):
    """
    One-step-ahead variance forecasts aligned with the realized proxy.
    """
    dates: list[date] = Field(..., title='Dates')
    predicted: list[float] = Field(
        ..., title='Predicted', description='Forecast sigma^2 per date')
    realized: list[float] = Field(
        ..., title='Realized', description='Squared return on the same date')
    model_id: str = Field(..., title='Model')
    refit_interval: Optional[int] = Field(
        default=None, title='Refit interval', ge=1,
        description='Steps between re-estimations; absent for frozen models')
    refit_count: int = Field(
        default=0, title='Refits', description='Estimations performed', ge=0)
    flagged_steps: list[int] = Field(
        default_factory=list, title='Flagged steps',
        description='Test indices whose refit failed or did not converge')

    @root_validator(skip_on_failure=True, allow_reuse=True)
    def check_alignment(cls, values: dict) -> dict:
        """
        Equal lengths and admissible values validator.
        :param values: validated fields
        :type values: dict
        :return: the same fields
        :rtype: dict
        """
        size: int = len(values["dates"])
        if len(values["predicted"]) != size or \
                len(values["realized"]) != size:
            raise ValueError("dates, predicted and realized must have equal"
                             " lengths")
        if not all(math.isfinite(v) and v >= 0 for v in values["predicted"]):
            raise ValueError("predictions must be finite and non-negative")
        if not all(math.isfinite(v) and v >= 0 for v in values["realized"]):
            raise ValueError("realized values must be finite and"
                             " non-negative")
        return values

    def __len__(self) -> int:
        return len(self.dates)
