"""
Accuracy metric schemas
"""
import math
from typing import Optional
from pydantic import Field, root_validator
from schemas import FrozenModel


class EvalReport(FrozenModel):
    """
    Out-of-sample accuracy of one forecast track.
    """
    model_id: str = Field(..., title='Model')
    mae: float = Field(..., title='MAE', ge=0)
    mse: float = Field(..., title='MSE', ge=0)
    rmse: float = Field(..., title='RMSE', ge=0)
    n: int = Field(..., title='Forecasts', ge=1)

    @root_validator(skip_on_failure=True, allow_reuse=True)
    def check_identities(cls, values: dict) -> dict:
        """
        rmse = sqrt(mse) validator.
        :param values: validated fields
        :type values: dict
        :return: the same fields
        :rtype: dict
        """
        if not math.isclose(values["rmse"], math.sqrt(values["mse"]),
                            rel_tol=1e-12, abs_tol=1e-300):
            raise ValueError("rmse must equal the square root of mse")
        return values

    class Config:
        """
        Config class for EvalReport
        """
        schema_extra: dict[str, dict] = {
            "example": {"model_id": "EGARCH(1,1,1)", "mae": 0.0002104,
                        "mse": 2.838e-07, "rmse": 0.0005327, "n": 772}
        }


class ComparisonReport(FrozenModel):
    """
    Every model scored on the same realized proxy.
    """
    label: str = Field(default='series', title='Series')
    reports: list[EvalReport] = Field(..., title='Reports')
    winner: Optional[str] = Field(
        default=None, title='Winner',
        description='Lowest RMSE; absent when the minimum is shared')
    tie: bool = Field(default=False, title='Tie')
    tied_models: list[str] = Field(
        default_factory=list, title='Tied models',
        description='Models sharing the minimal RMSE')
