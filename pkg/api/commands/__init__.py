"""
Commands package: shared options and series loading
"""
from datetime import datetime
from pathlib import Path
from typing import Any, Callable, Optional, TypeVar
import click
from api.deps import build_run_config
from core.exceptions import ConfigurationError
from crud.artifacts import ArtifactStore
from crud.series import load_returns
from helper.helper import file_tag
from schemas.run import RunConfig
from schemas.timeseries import ReturnSeries

Result = TypeVar("Result")
DATE_FORMATS: list[str] = ["%Y-%m-%d", "%Y%m%d"]


def _as_date(value: Optional[datetime]):
    return value.date() if value is not None else None


def data_options(command: Callable) -> Callable:
    """
    Input selection and output options shared by the data commands
    :param command: click callback
    :type command: Callable
    :return: callback with the options attached
    :rtype: Callable
    """
    options: list[Callable] = [
        click.option("--input", "input_path", type=click.Path(
            exists=False, dir_okay=False, path_type=Path),
                     help="Dated CSV: a 'date' column then one column per"
                          " series."),
        click.option("--column", "columns", multiple=True,
                     help="Series to process; repeat for several."),
        click.option("--prices/--returns", "prices", default=None,
                     help="Columns hold price levels, not returns."),
        click.option("--percent/--fraction", "percent", default=None,
                     help="Returns are given in percent."),
        click.option("--start", type=click.DateTime(DATE_FORMATS),
                     help="First date kept."),
        click.option("--end", type=click.DateTime(DATE_FORMATS),
                     help="Last date kept."),
        click.option("--train-fraction", type=float,
                     help="In-sample share of the observations."),
        click.option("--seed", type=int, help="Seed of every random draw."),
        click.option("--config", "config_file", type=click.Path(
            exists=True, dir_okay=False, path_type=Path),
                     help="key=value run configuration file."),
        click.option("--output", type=click.Path(file_okay=False,
                                                 path_type=Path),
                     help="Directory receiving the artifacts."),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def run_config(config_file: Optional[Path], **flags: Any) -> RunConfig:
    """
    Run configuration from the shared options and command specific flags
    :param config_file: optional key=value file
    :type config_file: Path
    :param flags: option values keyed by RunConfig field
    :type flags: Any
    :return: validated run configuration
    :rtype: RunConfig
    """
    if "input_path" in flags:
        flags["input"] = flags.pop("input_path")
    for key in ("start", "end"):
        if key in flags:
            flags[key] = _as_date(flags[key])
    return build_run_config(flags, config_file)


def load_series(run: RunConfig) -> dict[str, ReturnSeries]:
    """
    Return series selected by the run configuration
    :param run: run configuration
    :type run: RunConfig
    :return: one series per selected column
    :rtype: dict[str, ReturnSeries]
    """
    if run.input is None:
        raise ConfigurationError("an --input CSV file is required")
    return load_returns(run.input, run.columns, run.prices, run.percent,
                        run.start, run.end, run.encoding)


def stage_per_series(
        run: RunConfig, series: dict[str, ReturnSeries],
        stage: Callable[[ReturnSeries, ArtifactStore], Result]
) -> tuple[ArtifactStore, list[Result]]:
    """
    Stage artifacts for each series: at the output root for a single
     series, in one sub-directory per series otherwise
    :param run: run configuration
    :type run: RunConfig
    :param series: series to process
    :type series: dict[str, ReturnSeries]
    :param stage: work for one series
    :type stage: Callable[[ReturnSeries, ArtifactStore], Result]
    :return: store holding every staged file and the per-series results
    :rtype: tuple[ArtifactStore, list[Result]]
    """
    root: ArtifactStore = ArtifactStore(run.output, run.encoding)
    if len(series) == 1:
        return root, [stage(next(iter(series.values())), root)]
    results: list[Result] = []
    for label, values in series.items():
        store: ArtifactStore = ArtifactStore(run.output / file_tag(label),
                                             run.encoding)
        results.append(stage(values, store))
        root.merge(store, file_tag(label))
    return root, results
