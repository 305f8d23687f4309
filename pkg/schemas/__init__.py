"""
Schemas module
"""
import math
from datetime import date
import numpy as np
from pydantic import BaseModel, Field, validator


class FrozenModel(BaseModel):
    """
    Immutable base for every domain type based on Pydantic Base Model.
    """

    class Config:
        """
        Config class for FrozenModel
        """
        allow_mutation: bool = False


class DatedSeries(FrozenModel):
    """
    Dated sequence of scalar observations.
    """
    dates: list[date] = Field(
        ..., title='Dates',
        description='Strictly increasing calendar dates, one per value')
    values: list[float] = Field(
        ..., title='Values', description='Finite observations')
    label: str = Field(
        default='series', title='Label', description='Free text series name')

    @validator("values", allow_reuse=True)
    def check_finite(cls, v: list[float]) -> list[float]:
        """
        Finite values validator.
        :param v: observations
        :type v: list[float]
        :return: the same observations
        :rtype: list[float]
        """
        for index, value in enumerate(v):
            if not math.isfinite(value):
                raise ValueError(f"value at position {index} is not finite")
        return v

    @validator("dates", allow_reuse=True)
    def check_increasing(cls, v: list[date]) -> list[date]:
        """
        Strictly increasing dates validator.
        :param v: dates
        :type v: list[date]
        :return: the same dates
        :rtype: list[date]
        """
        for previous, current in zip(v, v[1:]):
            if current <= previous:
                raise ValueError(
                    f"dates must be strictly increasing ({current} after"
                    f" {previous})")
        return v

    @validator("values", allow_reuse=True)
    def check_lengths(cls, v: list[float], values: dict) -> list[float]:
        """
        Equal lengths validator.
        :param v: observations
        :type v: list[float]
        :param values: fields validated so far
        :type values: dict
        :return: the same observations
        :rtype: list[float]
        """
        dates: list[date] = values.get("dates")
        if dates is not None and len(dates) != len(v):
            raise ValueError(
                f"{len(dates)} dates do not match {len(v)} values")
        return v

    @property
    def array(self) -> np.ndarray:
        """
        Values as a float64 array
        :return: copy of the observations
        :rtype: np.ndarray
        """
        return np.asarray(self.values, dtype=np.float64)

    def __len__(self) -> int:
        return len(self.values)
