"""
Diagnostics schema
"""
from typing import Optional
from pydantic import Field, root_validator
from schemas import FrozenModel


class TestResult(FrozenModel):
    """
    Outcome of a statistical test.
    """
    __test__ = False

    test: str = Field(..., title='Test', description='Name of the test')
    statistic: float = Field(
        ..., title='Statistic', description='Value of the test statistic')
    p_value: Optional[float] = Field(
        default=None, title='p-value',
        description='Upper tail probability; absent for ADF', ge=0, le=1)
    lags: Optional[int] = Field(
        default=None, title='Lags', description='Lags used where applicable')
    reject_at_1pct: bool = Field(
        ..., title='Reject at 1%', description='Null rejected at 1%')
    reject_at_5pct: bool = Field(
        ..., title='Reject at 5%', description='Null rejected at 5%')
    critical_values: Optional[dict[str, float]] = Field(
        default=None, title='Critical values',
        description='Tabulated critical values keyed by level')

    @root_validator(skip_on_failure=True, allow_reuse=True)
    def check_nested(cls, values: dict) -> dict:
        """
        1% rejection implies 5% rejection validator.
        :param values: validated fields
        :type values: dict
        :return: the same fields
        :rtype: dict
        """
        if values["reject_at_1pct"] and not values["reject_at_5pct"]:
            raise ValueError("rejection at 1% must imply rejection at 5%")
        return values

    class Config:
        """
        Config class for TestResult
        """
        schema_extra: dict[str, dict] = {
            "example": {
                "test": "ljung_box", "statistic": 2937.2,
                "p_value": 0.0, "lags": 12, "reject_at_1pct": True,
                "reject_at_5pct": True
            }
        }


class SeriesDiagnostics(FrozenModel):
    """
    Data characterization tests for one series.
    """
    label: str = Field(..., title='Label', description='Series name')
    jarque_bera: TestResult = Field(..., title='Jarque-Bera')
    ljung_box: TestResult = Field(..., title='Ljung-Box Q on levels')
    ljung_box_squared: TestResult = Field(
        ..., title='Ljung-Box Q on squares')
    adf: TestResult = Field(..., title='Augmented Dickey-Fuller')
