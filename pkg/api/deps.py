"""
Dependencies module for the command line
"""
import functools
import logging
from pathlib import Path
from typing import Any, Callable, Optional
import click
from pydantic import ValidationError
from core import config
from core.exceptions import ConfigurationError, VolatilityLabError
from crud.artifacts import write_error
from schemas.run import RunConfig

logger: logging.Logger = logging.getLogger(__name__)


def settings_defaults(setting: config.Settings) -> dict[str, Any]:
    """
    RunConfig defaults taken from the cached settings
    :param setting: environment and .env backed settings
    :type setting: Settings
    :return: RunConfig field values
    :rtype: dict[str, Any]
    """
    return {
        "percent": setting.PERCENT, "prices": setting.PRICES,
        "train_fraction": setting.TRAIN_FRACTION,
        "families": setting.FAMILIES, "p_max": setting.P_MAX,
        "q_max": setting.Q_MAX, "lb_lags": setting.LB_LAGS,
        "significance": setting.SIGNIFICANCE, "restarts": setting.RESTARTS,
        "iteration_factor": setting.ITERATION_FACTOR,
        "xatol": setting.XATOL, "workers": setting.WORKERS,
        "hidden_sizes": setting.HIDDEN_SIZES, "lookback": setting.LOOKBACK,
        "epochs": setting.EPOCHS, "learning_rate": setting.LEARNING_RATE,
        "batch_size": setting.BATCH_SIZE,
        "validation_fraction": setting.VALIDATION_FRACTION,
        "refit_interval": setting.REFIT_INTERVAL, "seed": setting.SEED,
        "encoding": setting.ENCODING.lower()}


def build_run_config(flags: dict[str, Any],
                     config_file: Optional[Path] = None) -> RunConfig:
    """
    Merge settings, a key=value file and command line flags, in
     increasing precedence
    :param flags: flag values; None and empty tuples mean "not given"
    :type flags: dict[str, Any]
    :param config_file: optional run configuration file
    :type config_file: Path
    :return: validated run configuration
    :rtype: RunConfig
    """
    values: dict[str, Any] = settings_defaults(config.get_setting())
    from_file: dict[str, str] = config.read_config_file(config_file)
    unknown: list[str] = sorted(set(from_file) - set(RunConfig.__fields__))
    if unknown:
        raise ConfigurationError(
            f"unknown configuration keys: {', '.join(unknown)}")
    values.update(from_file)
    values.update({key: value for key, value in flags.items()
                   if value is not None and value != ()})
    try:
        return RunConfig(**values)
    except ValidationError as exc:
        raise ConfigurationError(f"invalid configuration: {exc}",
                                 {"errors": exc.errors()}) from exc


def handle_cli_exceptions(command: Callable) -> Callable:
    """
    Decorator turning toolkit errors into an error.json record in the
     output directory and the matching exit status
    :param command: click command callback with an "output" parameter
    :type command: Callable
    :return: decorated callback
    :rtype: Callable
    """

    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return command(*args, **kwargs)
        except VolatilityLabError as exc:
            logger.error("%s failed: %s", command.__name__, exc.message)
            output: Path = Path(kwargs.get("output") or
                                RunConfig.__fields__["output"].default)
            write_error(output, exc.to_record())
            click.echo(f"error: {exc.message}", err=True)
            raise click.exceptions.Exit(exc.exit_code) from exc

    return wrapper
