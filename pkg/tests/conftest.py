"""
Shared fixtures for the test suite
"""
from datetime import date
from pathlib import Path
from typing import Callable
import pandas as pd
import pytest
from models.family import Family
from schemas.garch import GarchParams, GarchSpec
from schemas.simulation import SimConfig
from schemas.timeseries import ReturnSeries, VarianceSeries
from services.simulator import SimulatorService

GARCH_11: GarchSpec = GarchSpec(family=Family.GARCH, p=1, q=1)
TRUE_PARAMS: GarchParams = GarchParams(mu=0.0, omega=1e-5, alpha=[0.10],
                                       beta=[0.85])


def business_days(count: int, start: str = "2005-01-03") -> list[date]:
    """
    Consecutive business days
    :param count: number of dates
    :type count: int
    :param start: first date
    :type start: str
    :return: dates
    :rtype: list[date]
    """
    return list(pd.bdate_range(start=start, periods=count).date)


def make_series(values, label: str = "series") -> ReturnSeries:
    """
    Return series on consecutive business days
    :param values: returns
    :type values: array_like
    :param label: series name
    :type label: str
    :return: dated returns
    :rtype: ReturnSeries
    """
    values = [float(v) for v in values]
    return ReturnSeries(dates=business_days(len(values)), values=values,
                        label=label)


def simulate_garch(length: int, seed: int, burn_in: int = 500
                   ) -> tuple[ReturnSeries, VarianceSeries]:
    """
    GARCH(1,1) path with omega 1e-5, alpha 0.10 and beta 0.85
    :param length: observations kept
    :type length: int
    :param seed: generator seed
    :type seed: int
    :param burn_in: observations discarded
    :type burn_in: int
    :return: returns and true variances
    :rtype: tuple[ReturnSeries, VarianceSeries]
    """
    return SimulatorService.simulate(SimConfig(
        spec=GARCH_11, params=TRUE_PARAMS, length=length, burn_in=burn_in,
        rng_seed=seed))


@pytest.fixture(scope="session")
def garch_path() -> tuple[ReturnSeries, VarianceSeries]:
    """Simulated GARCH(1,1) returns long enough for a stable fit."""
    return simulate_garch(3000, seed=11)


@pytest.fixture(scope="session")
def short_path() -> ReturnSeries:
    """Simulated GARCH(1,1) returns sized for rolling forecasts."""
    return simulate_garch(300, seed=5)[0]


@pytest.fixture
def write_csv(tmp_path: Path) -> Callable[[str, str], Path]:
    """Write text into a CSV file under the test directory."""

    def write(text: str, name: str = "data.csv") -> Path:
        path: Path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return write
