"""
Pipeline services script.
"""
import logging
from typing import Optional
from crud.artifacts import ArtifactStore, curve_frame
from crud.series import track_frame
from schemas.forecast import ForecastTrack
from schemas.garch import FitSummary, GarchParams, GarchSpec
from schemas.metrics import ComparisonReport
from schemas.run import RunConfig, SeriesProfile
from schemas.search import SearchReport
from schemas.timeseries import ReturnSeries, SplitSpec, VarianceSeries
from services.ann import AnnService
from services.diagnostics import DiagnosticsService
from services.forecaster import ForecasterService
from services.metrics import MetricsService
from services.search import ModelSearchService
from services.timeseries import TimeSeriesService

logger: logging.Logger = logging.getLogger(__name__)

WINNER_PATHS: dict = {"winner": {"conditional_variance_path",
                                 "std_residuals"}}


def summary_spec(summary: FitSummary) -> tuple[GarchSpec, GarchParams]:
    """
    Specification and parameters behind a fit summary
    :param summary: summary of an estimate
    :type summary: FitSummary
    :return: specification and parameters
    :rtype: tuple[GarchSpec, GarchParams]
    """
    spec: GarchSpec = GarchSpec(family=summary.family, p=summary.p,
                                o=summary.o, q=summary.q)
    return spec, GarchParams.from_vector(spec, list(summary.params.values()))


class PipelineService:
    """
    The complete study for one return series.
    """

    @staticmethod
    def search_artifacts(store: ArtifactStore, report: SearchReport) -> None:
        """
        Stage garch_search.json and garch_table.txt
        :param store: artifact store
        :type store: ArtifactStore
        :param report: search outcome
        :type report: SearchReport
        :return: None
        :rtype: NoneType
        """
        store.add_json("garch_search.json", report.dict(exclude=WINNER_PATHS))
        store.add_text("garch_table.txt", ModelSearchService.table(report))

    @staticmethod
    def compare_artifacts(store: ArtifactStore,
                          report: ComparisonReport) -> None:
        """
        Stage compare.json and compare_table.txt
        :param store: artifact store
        :type store: ArtifactStore
        :param report: comparison
        :type report: ComparisonReport
        :return: None
        :rtype: NoneType
        """
        store.add_json("compare.json", report)
        store.add_text("compare_table.txt", MetricsService.table(report))

    @staticmethod
    def run(series: ReturnSeries, config: RunConfig,
            store: ArtifactStore) -> SeriesProfile:
        """
        Split, characterize, search, train, forecast and compare
        :param series: full return series
        :type series: ReturnSeries
        :param config: validated run settings
        :type config: RunConfig
        :param store: receives every artifact of the series
        :type store: ArtifactStore
        :return: long-run volatility of the selected GARCH-family model
        :rtype: SeriesProfile
        """
        split: SplitSpec = TimeSeriesService.split_spec(
            len(series), config.train_fraction)
        train, _ = TimeSeriesService.split(series, config.train_fraction)
        store.add_json("describe.json", TimeSeriesService.describe(train))
        store.add_json("diagnostics.json", DiagnosticsService.characterize(
            train.array, series.label, config.lb_lags))

        report: SearchReport = ModelSearchService.search(
            train, config.search_config())
        PipelineService.search_artifacts(store, report)

        proxy: VarianceSeries = TimeSeriesService.squared_return_proxy(series)
        sweep, models, curves = AnnService.sweep(
            proxy.values[:split.train_len], config.hidden_sizes,
            config.train_config(), config.lookback)
        store.add_json("ann_sweep.json", sweep)
        for size in config.hidden_sizes:
            store.add_csv(f"curve_{size}.csv", curve_frame(curves[size]))
            store.add_json(f"model_{size}.json", models[size])

        tracks: list[ForecastTrack] = []
        for family in config.families:
            summary: Optional[FitSummary] = report.family_winners.get(family)
            if summary is None:
                logger.warning("no %s model to forecast with for %s",
                               family.value, series.label)
                continue
            spec, params = summary_spec(summary)
            tracks.append(ForecasterService.rolling_forecast_garch(
                series, split, spec, config.refit_interval,
                config.fit_options().copy(update={"start": params})))
        tracks.append(ForecasterService.rolling_forecast_ann(
            proxy, split, models[sweep.best_hidden_size]))
        for track in tracks:
            store.add_csv(f"forecast_{track.model_id}.csv",
                          track_frame(track))
        PipelineService.compare_artifacts(
            store, MetricsService.compare(tracks, series.label))

        winner: FitSummary = report.winner_summary
        return SeriesProfile(
            label=series.label, model_id=winner.model_id,
            unconditional_variance=winner.unconditional_variance,
            unconditional_volatility=winner.unconditional_volatility)

    @staticmethod
    def rank_profiles(profiles: list[SeriesProfile]) -> list[SeriesProfile]:
        """
        Order series from the lowest to the highest long-run variance
        :param profiles: one profile per series
        :type profiles: list[SeriesProfile]
        :return: sorted profiles, nonstationary selections last
        :rtype: list[SeriesProfile]
        """
        return sorted(profiles, key=lambda p: (
            p.unconditional_variance is None,
            p.unconditional_variance or 0.0, p.label))

