"""
Config script
"""
from functools import lru_cache
from pathlib import Path
from typing import Any, Optional, Union
from dotenv import dotenv_values, load_dotenv
from pydantic import BaseSettings, validator
from models.family import Family

load_dotenv()


class Settings(BaseSettings):
    """
    Settings class based on Pydantic Base Settings
    """

    class Config:
        """
        Config class for Settings
        """
        env_file: str = ".env"
        env_file_encoding: str = 'utf-8'

        @classmethod
        def parse_env_var(cls, field_name: str, raw_val: str) -> Any:
            """
            Accept comma separated lists besides JSON for list settings.
            :param field_name: name of the settings field
            :type field_name: str
            :param raw_val: value read from the environment
            :type raw_val: str
            :return: decoded value
            :rtype: Any
            """
            if field_name in ("FAMILIES", "HIDDEN_SIZES") and \
                    not raw_val.strip().startswith("["):
                return [i.strip() for i in raw_val.split(",") if i.strip()]
            return cls.json_loads(raw_val)

    PROJECT_NAME: str = "volatility-lab"
    ENCODING: str = "UTF-8"
    LOG_LEVEL: str = "INFO"
    LOG_FORMAT: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"

    # Data
    TRAIN_FRACTION: float = 0.8
    PERCENT: bool = False
    PRICES: bool = False
    SIM_START_DATE: str = "2000-01-03"

    # GARCH estimation and search
    FAMILIES: list[Family] = [Family.GARCH, Family.EGARCH]
    P_MAX: int = 5
    Q_MAX: int = 5
    LB_LAGS: int = 12
    SIGNIFICANCE: float = 0.01
    RESTARTS: int = 3
    ITERATION_FACTOR: int = 500
    XATOL: float = 1e-8
    WORKERS: int = 1

    # Neural network
    HIDDEN_SIZES: list[int] = [1, 12, 50]
    LOOKBACK: int = 5
    EPOCHS: int = 60
    LEARNING_RATE: float = 0.05
    BATCH_SIZE: int = 32
    VALIDATION_FRACTION: float = 0.10

    # Forecasting and simulation
    REFIT_INTERVAL: int = 20
    BURN_IN: int = 1000
    SEED: int = 0

    @validator("FAMILIES", "HIDDEN_SIZES", pre=True, allow_reuse=True)
    def assemble_list(
            cls, v: Union[str, list[Any]]) -> Union[list[str], list[Any]]:
        """
        Assemble comma separated environment values into lists.
        :param v: raw value from environment or default
        :type v: Union[str, list[Any]]
        :return: list of items
        :rtype: Union[list[str], list[Any]]
        """
        if isinstance(v, str) and not v.startswith("["):
            return [i.strip() for i in v.split(",") if i.strip()]
        if isinstance(v, (list, tuple, str)):
            return v
        raise ValueError(v)


@lru_cache()
def get_setting() -> Settings:
    """
    Get settings cached
    :return: settings object
    :rtype: Settings
    """
    return Settings()


def read_config_file(path: Optional[Path]) -> dict[str, str]:
    """
    Read a key=value run configuration file.
    :param path: location of the file, or None for no file
    :type path: Path
    :return: lowercase keys mapped to their raw string values
    :rtype: dict[str, str]
    """
    if path is None:
        return {}
    values: dict[str, Optional[str]] = dotenv_values(path)
    return {key.strip().lower(): value for key, value in values.items()
            if value is not None}
