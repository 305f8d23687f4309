"""
Time series schemas for Pydantic models
"""
from datetime import date
from decimal import Decimal
from typing import Optional
from pydantic import Field, root_validator
from schemas import DatedSeries, FrozenModel


class PriceSeries(DatedSeries):
    """
    Dated price levels read from a file.
    """

    class Config:
        """
        Config class for PriceSeries
        """
        schema_extra: dict[str, dict] = {
            "example": {
                "dates": [date(2020, 1, 2), date(2020, 1, 3)],
                "values": [100.0, 110.0],
                "label": "Index",
            }
        }


class ReturnSeries(DatedSeries):
    """
    Dated arithmetic daily returns as decimal fractions (0.01 = 1%).
    """

    class Config:
        """
        Config class for ReturnSeries
        """
        schema_extra: dict[str, dict] = {
            "example": {
                "dates": [date(2005, 1, 3), date(2005, 1, 4)],
                "values": [0.0043, -0.0121],
                "label": "Durbl",
            }
        }


class VarianceSeries(DatedSeries):
    """
    Dated variance values such as the squared-return volatility proxy.
    """


class DescriptiveStats(FrozenModel):
    """
    Descriptive statistics of a return series.
    """
    mean: float = Field(..., title='Mean', description='Sample mean')
    std_dev: float = Field(
        ..., title='Standard deviation',
        description='Sample standard deviation with n-1 denominator', ge=0)
    skewness: Optional[float] = Field(
        default=None, title='Skewness',
        description='Standardized third central moment; absent below four'
                    ' observations')
    kurtosis: Optional[float] = Field(
        default=None, title='Kurtosis',
        description='Raw standardized fourth central moment (normal = 3);'
                    ' absent below four observations')
    max: float = Field(..., title='Maximum', description='Largest value')
    min: float = Field(..., title='Minimum', description='Smallest value')
    count: int = Field(
        ..., title='Count', description='Number of observations', ge=2)

    @root_validator(skip_on_failure=True, allow_reuse=True)
    def check_range(cls, values: dict) -> dict:
        """
        Extremes and mean ordering validator.
        :param values: validated fields
        :type values: dict
        :return: the same fields
        :rtype: dict
        """
        if not values["min"] <= values["mean"] <= values["max"]:
            raise ValueError("expected min <= mean <= max")
        return values

    class Config:
        """
        Config class for DescriptiveStats
        """
        schema_extra: dict[str, dict] = {
            "example": {
                "mean": 0.00043, "std_dev": 0.01037, "skewness": 0.12,
                "kurtosis": 11.2, "max": 0.12, "min": -0.10, "count": 3086
            }
        }


class SplitSpec(FrozenModel):
    """
    In-sample / out-of-sample partition of a series.
    """
    train_fraction: float = Field(
        ..., title='Train fraction',
        description='Share of observations kept in-sample', gt=0, lt=1)
    train_len: int = Field(
        ..., title='Train length', description='In-sample count', ge=2)
    test_len: int = Field(
        ..., title='Test length', description='Out-of-sample count', ge=1)

    @root_validator(skip_on_failure=True, allow_reuse=True)
    def check_floor(cls, values: dict) -> dict:
        """
        Floor boundary validator.
        :param values: validated fields
        :type values: dict
        :return: the same fields
        :rtype: dict
        """
        total: int = values["train_len"] + values["test_len"]
        floor: int = int(Decimal(repr(values["train_fraction"])) * total)
        if values["train_len"] != floor:
            raise ValueError("train_len must equal floor(train_fraction x n)")
        return values

    @property
    def total(self) -> int:
        """
        Total number of observations
        :return: train_len + test_len
        :rtype: int
        """
        return self.train_len + self.test_len
