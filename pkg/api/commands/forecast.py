"""
Forecast commands: forecast and compare.
"""
from pathlib import Path
from typing import Optional
import click
from api.commands import data_options, load_series, run_config, \
    stage_per_series
from api.commands.garch import build_spec, model_options
from api.deps import handle_cli_exceptions
from core import config
from crud.artifacts import ArtifactStore
from crud.series import load_track, track_frame
from schemas.ann import MlpModel
from schemas.forecast import ForecastTrack
from schemas.garch import GarchSpec
from schemas.run import RunConfig
from schemas.timeseries import ReturnSeries, SplitSpec
from services.ann import AnnService
from services.forecaster import ForecasterService
from services.metrics import MetricsService
from services.pipeline import PipelineService
from services.timeseries import TimeSeriesService


@click.command("forecast")
@model_options
@click.option("--ann-model", type=click.Path(exists=True, dir_okay=False,
                                             path_type=Path),
              help="Forecast with a saved network instead of a GARCH"
                   " model.")
@click.option("--refit-interval", type=int,
              help="Steps between re-estimations.")
@data_options
@handle_cli_exceptions
def forecast(config_file: Optional[Path], family: str, p: int, q: int,
             o: Optional[int], ann_model: Optional[Path], **flags) -> None:
    """
    Rolling one-step-ahead variance forecasts over the out-of-sample
    period.
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
    :param ann_model: saved network
    :type ann_model: Path
    :return: None
    :rtype: NoneType
    """
    run: RunConfig = run_config(config_file, **flags)
    model: Optional[MlpModel] = AnnService.load(ann_model) \
        if ann_model else None
    spec: Optional[GarchSpec] = None if model else build_spec(family, p, q,
                                                              o)

    def stage(series: ReturnSeries, store: ArtifactStore) -> None:
        split: SplitSpec = TimeSeriesService.split_spec(len(series),
                                                        run.train_fraction)
        track: ForecastTrack
        if model is not None:
            track = ForecasterService.rolling_forecast_ann(
                TimeSeriesService.squared_return_proxy(series), split, model)
        else:
            track = ForecasterService.rolling_forecast_garch(
                series, split, spec, run.refit_interval, run.fit_options())
        store.add_csv(f"forecast_{track.model_id}.csv", track_frame(track))

    store, _ = stage_per_series(run, load_series(run), stage)
    store.commit()


@click.command("compare")
@click.option("--track", "tracks", required=True, multiple=True,
              type=click.Path(exists=True, dir_okay=False, path_type=Path),
              help="forecast_<model>.csv file; repeat for several.")
@click.option("--label", default="series", show_default=True,
              help="Series name shown in the report.")
@click.option("--output", type=click.Path(file_okay=False, path_type=Path),
              default=Path("output"), show_default=True)
@handle_cli_exceptions
def compare(tracks: tuple[Path, ...], label: str, output: Path) -> None:
    """
    MAE, MSE and RMSE of forecast tracks sharing their realized values.
    \f
    :param tracks: forecast CSV files
    :type tracks: tuple[Path, ...]
    :param label: series name
    :type label: str
    :param output: output directory
    :type output: Path
    :return: None
    :rtype: NoneType
    """
    store: ArtifactStore = ArtifactStore(
        output, config.get_setting().ENCODING.lower())
    PipelineService.compare_artifacts(store, MetricsService.compare(
        [load_track(path) for path in tracks], label))
    store.commit()
