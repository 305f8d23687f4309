"""
CRUD module
"""
from typing import Any
import pandas as pd


class Specification:
    """
    Specification class
    """

    def __init__(self, value: Any):
        self.value: Any = value


class Filter:
    """
    Filter class
    """

    def filter(self, frame: pd.DataFrame, spec: Specification
               ) -> pd.DataFrame:
        """
        Filter method
        :param frame: observations indexed by date
        :type frame: pd.DataFrame
        :param spec: specification to filter by
        :type spec: Specification
        :return: the selected part of the frame
        :rtype: pd.DataFrame
        """
        raise NotImplementedError
