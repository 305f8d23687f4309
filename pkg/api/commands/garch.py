"""
GARCH commands: fit-garch and search-garch.
"""
from pathlib import Path
from typing import Optional
import click
from pydantic import ValidationError
from api.commands import data_options, load_series, run_config, \
    stage_per_series
from api.deps import handle_cli_exceptions
from core.exceptions import ConfigurationError
from crud.artifacts import ArtifactStore
from models.family import Family
from schemas.garch import FitResult, GarchSpec
from schemas.run import RunConfig
from schemas.timeseries import ReturnSeries
from services.garch import GarchService
from services.pipeline import PipelineService
from services.search import ModelSearchService
from services.timeseries import TimeSeriesService

FAMILY_CHOICE: click.Choice = click.Choice([f.value for f in Family])


def model_options(command):
    """
    Family and lag order options of a single specification
    :param command: click callback
    :type command: Callable
    :return: callback with the options attached
    :rtype: Callable
    """
    command = click.option("--o", "o", type=int,
                           help="Asymmetry lags (EGARCH).")(command)
    command = click.option("--q", "q", type=int, default=1,
                           show_default=True, help="Shock lags.")(command)
    command = click.option("--p", "p", type=int, default=1,
                           show_default=True,
                           help="Variance lags (0 for ARCH).")(command)
    return click.option("--family", type=FAMILY_CHOICE,
                        default=Family.GARCH.value,
                        show_default=True)(command)


def build_spec(family: str, p: int, q: int, o: Optional[int]) -> GarchSpec:
    """
    Validated specification from command line values
    :param family: family name
    :type family: str
    :param p: variance lags
    :type p: int
    :param q: shock lags
    :type q: int
    :param o: asymmetry lags
    :type o: int
    :return: specification
    :rtype: GarchSpec
    """
    chosen: Family = Family(family)
    try:
        return GarchSpec(family=chosen, p=0 if chosen == Family.ARCH else p,
                         q=q, o=o)
    except ValidationError as exc:
        raise ConfigurationError(f"invalid specification: {exc}") from exc


@click.command("fit-garch")
@model_options
@click.option("--lb-lags", type=int, help="Ljung-Box lags.")
@data_options
@handle_cli_exceptions
def fit_garch(config_file: Optional[Path], family: str, p: int, q: int,
              o: Optional[int], **flags) -> None:
    """
    Estimate one specification on the in-sample returns.
    \f
    :param config_file: optional key=value run configuration
    :type config_file: Path
    :param family: family name
    :type family: str
    :param p: variance lags
    :type p: int
    :param q: shock lags
    :type q: int
    :param o: asymmetry lags
    :type o: int
    :return: None
    :rtype: NoneType
    """
    spec: GarchSpec = build_spec(family, p, q, o)
    run: RunConfig = run_config(config_file, **flags)

    def stage(series: ReturnSeries, store: ArtifactStore) -> None:
        train, _ = TimeSeriesService.split(series, run.train_fraction)
        result: FitResult = GarchService.fit(train, spec, run.fit_options())
        store.add_json("garch_fit.json",
                       GarchService.summarize(result, run.lb_lags))

    store, _ = stage_per_series(run, load_series(run), stage)
    store.commit()


@click.command("search-garch")
@click.option("--family", "families", type=FAMILY_CHOICE, multiple=True,
              help="Family to search; repeat for several.")
@click.option("--p-max", type=int, help="Largest variance lag order.")
@click.option("--q-max", type=int, help="Largest shock lag order.")
@click.option("--lb-lags", type=int, help="Ljung-Box lags.")
@click.option("--significance", type=float,
              help="Level of the residual whiteness checks.")
@click.option("--workers", type=int, help="Grid cells fitted concurrently.")
@data_options
@handle_cli_exceptions
def search_garch(config_file: Optional[Path], **flags) -> None:
    """
    Lowest AIC lag orders with white standardized residuals, on the
    in-sample returns.
    \f
    :param config_file: optional key=value run configuration
    :type config_file: Path
    :return: None
    :rtype: NoneType
    """
    run: RunConfig = run_config(config_file, **flags)

    def stage(series: ReturnSeries, store: ArtifactStore) -> None:
        train, _ = TimeSeriesService.split(series, run.train_fraction)
        PipelineService.search_artifacts(
            store, ModelSearchService.search(train, run.search_config()))

    store, _ = stage_per_series(run, load_series(run), stage)
    store.commit()
