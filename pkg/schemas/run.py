"""
Run configuration schema
"""
from datetime import date
from pathlib import Path
from typing import Optional
from pydantic import Field, root_validator, validator
from models.family import Family
from schemas import FrozenModel
from schemas.ann import TrainConfig
from schemas.garch import FitOptions
from schemas.search import SearchConfig


class RunConfig(FrozenModel):
    """
    Settings of one command line run, validated before any computation.
    """
    input: Optional[Path] = Field(default=None, title='Input CSV')
    columns: list[str] = Field(
        default_factory=list, title='Columns',
        description='Series to process; every column when empty')
    percent: bool = Field(default=False, title='Percent returns')
    prices: bool = Field(default=False, title='Price levels')
    start: Optional[date] = Field(default=None, title='First date')
    end: Optional[date] = Field(default=None, title='Last date')
    train_fraction: float = Field(default=0.8, title='Train fraction', gt=0,
                                  lt=1)
    families: list[Family] = Field(
        default=[Family.GARCH, Family.EGARCH], title='Families')
    p_max: int = Field(default=5, title='p max', ge=1)
    q_max: int = Field(default=5, title='q max', ge=1)
    lb_lags: int = Field(default=12, title='Ljung-Box lags', ge=1)
    significance: float = Field(default=0.01, title='Significance', gt=0,
                                lt=1)
    restarts: int = Field(default=3, title='Restarts', ge=0)
    iteration_factor: int = Field(default=500, title='Iteration factor',
                                  ge=1)
    xatol: float = Field(default=1e-8, title='Simplex tolerance', gt=0)
    workers: int = Field(default=1, title='Workers', ge=1)
    hidden_sizes: list[int] = Field(default=[1, 12, 50],
                                    title='Hidden sizes')
    lookback: int = Field(default=5, title='Lookback', ge=1)
    epochs: int = Field(default=60, title='Epochs', ge=1)
    learning_rate: float = Field(default=0.05, title='Learning rate', gt=0)
    batch_size: int = Field(default=32, title='Batch size', ge=1)
    validation_fraction: float = Field(default=0.10,
                                       title='Validation fraction', ge=0,
                                       lt=0.5)
    refit_interval: int = Field(default=20, title='Refit interval', ge=1)
    seed: int = Field(default=0, title='Seed', ge=0)
    output: Path = Field(default=Path("output"), title='Output directory')
    encoding: str = Field(default="utf-8", title='Encoding')

    @validator("columns", "families", "hidden_sizes", pre=True,
               allow_reuse=True)
    def split_list(cls, v):
        """
        Comma separated list validator for values read from files.
        :param v: raw value
        :type v: Any
        :return: list of items
        :rtype: list
        """
        if isinstance(v, str):
            return [item.strip() for item in v.split(",") if item.strip()]
        return v

    @validator("hidden_sizes", allow_reuse=True)
    def check_hidden_sizes(cls, v: list[int]) -> list[int]:
        """
        Hidden sizes validator.
        :param v: hidden sizes
        :type v: list[int]
        :return: the same sizes
        :rtype: list[int]
        """
        if not v or min(v) < 1:
            raise ValueError("hidden sizes must be positive and non-empty")
        if len(set(v)) != len(v):
            raise ValueError("hidden sizes must not repeat")
        return v

    @root_validator(skip_on_failure=True, allow_reuse=True)
    def check_flags(cls, values: dict) -> dict:
        """
        Mutually exclusive flags and date range validator.
        :param values: validated fields
        :type values: dict
        :return: the same fields
        :rtype: dict
        """
        if values["percent"] and values["prices"]:
            raise ValueError("percent and prices are exclusive")
        if values["start"] and values["end"] and \
                values["start"] > values["end"]:
            raise ValueError("start must not be after end")
        return values

    def fit_options(self) -> FitOptions:
        """
        Optimizer settings
        :return: restarts, iteration factor, tolerance and seed
        :rtype: FitOptions
        """
        return FitOptions(restarts=self.restarts,
                          iteration_factor=self.iteration_factor,
                          xatol=self.xatol, seed=self.seed)

    def search_config(self) -> SearchConfig:
        """
        Lag-order search settings
        :return: grid, whiteness requirement and optimizer settings
        :rtype: SearchConfig
        """
        return SearchConfig(
            families=self.families, p_max=self.p_max, q_max=self.q_max,
            lb_lags=self.lb_lags, significance=self.significance,
            workers=self.workers, fit_options=self.fit_options())

    def train_config(self) -> TrainConfig:
        """
        Network training settings
        :return: epochs, learning rate, batch size, validation share, seed
        :rtype: TrainConfig
        """
        return TrainConfig(
            epochs=self.epochs, learning_rate=self.learning_rate,
            batch_size=self.batch_size,
            validation_fraction=self.validation_fraction,
            rng_seed=self.seed)


class SeriesProfile(FrozenModel):
    """
    Long-run volatility of the model selected for one series.
    """
    label: str = Field(..., title='Series')
    model_id: str = Field(..., title='Selected model')
    unconditional_variance: Optional[float] = Field(
        default=None, title='Unconditional variance')
    unconditional_volatility: Optional[float] = Field(
        default=None, title='Unconditional volatility')
