"""
Pipeline command.
"""
from pathlib import Path
from typing import Optional
import click
from api.commands import data_options, load_series, run_config, \
    stage_per_series
from api.commands.garch import FAMILY_CHOICE
from api.deps import handle_cli_exceptions
from crud.artifacts import ArtifactStore
from schemas.run import RunConfig, SeriesProfile
from schemas.timeseries import ReturnSeries
from services.pipeline import PipelineService


@click.command("pipeline")
@click.option("--family", "families", type=FAMILY_CHOICE, multiple=True,
              help="Family to search; repeat for several.")
@click.option("--p-max", type=int)
@click.option("--q-max", type=int)
@click.option("--lb-lags", type=int)
@click.option("--significance", type=float)
@click.option("--workers", type=int)
@click.option("--hidden", "hidden_sizes", type=int, multiple=True)
@click.option("--lookback", type=int)
@click.option("--epochs", type=int)
@click.option("--learning-rate", type=float)
@click.option("--batch-size", type=int)
@click.option("--validation-fraction", type=float)
@click.option("--refit-interval", type=int)
@data_options
@handle_cli_exceptions
def pipeline(config_file: Optional[Path], **flags) -> None:
    """
    Full study per series: describe and diagnose the in-sample returns,
    search GARCH lag orders, sweep network sizes, forecast the test period
    with each family's model and the best network, then compare.
    \f
    :param config_file: optional key=value run configuration
    :type config_file: Path
    :return: None
    :rtype: NoneType
    """
    run: RunConfig = run_config(config_file, **flags)
    series: dict[str, ReturnSeries] = load_series(run)

    def stage(values: ReturnSeries, store: ArtifactStore) -> SeriesProfile:
        return PipelineService.run(values, run, store)

    store, profiles = stage_per_series(run, series, stage)
    if len(series) > 1:
        store.add_json("profiles.json",
                       PipelineService.rank_profiles(profiles))
    store.commit()
