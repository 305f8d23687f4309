"""
Neural network command: train-ann.
"""
from pathlib import Path
from typing import Optional
import click
from api.commands import data_options, load_series, run_config, \
    stage_per_series
from api.deps import handle_cli_exceptions
from crud.artifacts import ArtifactStore, curve_frame
from schemas.run import RunConfig
from schemas.timeseries import ReturnSeries, VarianceSeries
from services.ann import AnnService
from services.timeseries import TimeSeriesService


@click.command("train-ann")
@click.option("--hidden", "hidden_sizes", type=int, multiple=True,
              help="Hidden layer size; repeat for several.")
@click.option("--lookback", type=int, help="Window length.")
@click.option("--epochs", type=int)
@click.option("--learning-rate", type=float)
@click.option("--batch-size", type=int)
@click.option("--validation-fraction", type=float,
              help="Chronological tail held out for validation.")
@data_options
@handle_cli_exceptions
def train_ann(config_file: Optional[Path], **flags) -> None:
    """
    Train one network per hidden size on the in-sample squared returns.
    \f
    :param config_file: optional key=value run configuration
    :type config_file: Path
    :return: None
    :rtype: NoneType
    """
    run: RunConfig = run_config(config_file, **flags)

    def stage(series: ReturnSeries, store: ArtifactStore) -> None:
        train, _ = TimeSeriesService.split(series, run.train_fraction)
        proxy: VarianceSeries = TimeSeriesService.squared_return_proxy(train)
        sweep, models, curves = AnnService.sweep(
            proxy.values, run.hidden_sizes, run.train_config(), run.lookback)
        store.add_json("ann_sweep.json", sweep)
        for size in run.hidden_sizes:
            store.add_csv(f"curve_{size}.csv", curve_frame(curves[size]))
            store.add_json(f"model_{size}.json", models[size])

    store, _ = stage_per_series(run, load_series(run), stage)
    store.commit()
