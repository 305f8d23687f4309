"""
Data commands: describe, diagnose and simulate.
"""
from pathlib import Path
from typing import Optional
import click
from pydantic import ValidationError
from api.commands import data_options, load_series, run_config, \
    stage_per_series
from api.deps import handle_cli_exceptions
from core import config
from core.exceptions import ConfigurationError
from crud.artifacts import ArtifactStore
from crud.series import series_frame
from models.family import Family
from schemas.garch import GarchParams, GarchSpec
from schemas.run import RunConfig
from schemas.simulation import SimConfig
from schemas.timeseries import DescriptiveStats, ReturnSeries
from services.diagnostics import DiagnosticsService
from services.simulator import SimulatorService
from services.timeseries import TimeSeriesService

DEFAULT_PROCESS: dict[Family, dict] = {
    Family.ARCH: {"omega": 5e-5, "alpha": [0.3]},
    Family.GARCH: {"omega": 1e-5, "alpha": [0.1], "beta": [0.85]},
    Family.EGARCH: {"omega": -0.2, "alpha": [0.15], "gamma": [-0.08],
                    "beta": [0.98]},
}


@click.command("describe")
@data_options
@handle_cli_exceptions
def describe(config_file: Optional[Path], **flags) -> None:
    """
    Descriptive statistics of the whole return series.
    \f
    :param config_file: optional key=value run configuration
    :type config_file: Path
    :return: None
    :rtype: NoneType
    """
    run: RunConfig = run_config(config_file, **flags)
    series: dict[str, ReturnSeries] = load_series(run)
    stats: dict[str, DescriptiveStats] = {
        label: TimeSeriesService.describe(values, require_moments=False)
        for label, values in series.items()}
    store: ArtifactStore = ArtifactStore(run.output, run.encoding)
    store.add_json("describe.json", next(iter(stats.values()))
                   if len(stats) == 1 else stats)
    store.commit()


@click.command("diagnose")
@click.option("--lb-lags", type=int, help="Ljung-Box lags.")
@data_options
@handle_cli_exceptions
def diagnose(config_file: Optional[Path], **flags) -> None:
    """
    Jarque-Bera, Ljung-Box on returns and squares, and ADF on the
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
        store.add_json("describe.json", TimeSeriesService.describe(train))
        store.add_json("diagnostics.json", DiagnosticsService.characterize(
            train.array, series.label, run.lb_lags))

    store, _ = stage_per_series(run, load_series(run), stage)
    store.commit()


@click.command("simulate")
@click.option("--family", type=click.Choice([f.value for f in Family]),
              default=Family.GARCH.value, show_default=True)
@click.option("--mu", type=float, default=0.0, show_default=True)
@click.option("--omega", type=float, help="Variance intercept.")
@click.option("--alpha", type=float, multiple=True,
              help="Shock coefficient; repeat for higher lags.")
@click.option("--gamma", type=float, multiple=True,
              help="EGARCH asymmetry coefficient.")
@click.option("--beta", type=float, multiple=True,
              help="Variance lag coefficient.")
@click.option("--length", type=int, default=5000, show_default=True)
@click.option("--burn-in", type=int, help="Discarded leading draws.")
@click.option("--seed", type=int, help="Generator seed.")
@click.option("--output", type=click.Path(file_okay=False, path_type=Path),
              default=Path("output"), show_default=True)
@handle_cli_exceptions
def simulate(family: str, mu: float, omega: Optional[float],
             alpha: tuple[float, ...], gamma: tuple[float, ...],
             beta: tuple[float, ...], length: int, burn_in: Optional[int],
             seed: Optional[int], output: Path) -> None:
    """
    Simulate a path with known parameters. Lag orders follow the number
    of coefficients given; without coefficients a typical daily process
    of the family is used.
    \f
    :param family: ARCH, GARCH or EGARCH
    :type family: str
    :param mu: mean constant
    :type mu: float
    :param omega: variance intercept
    :type omega: float
    :param alpha: shock coefficients
    :type alpha: tuple[float, ...]
    :param gamma: asymmetry coefficients
    :type gamma: tuple[float, ...]
    :param beta: variance lag coefficients
    :type beta: tuple[float, ...]
    :param length: observations kept
    :type length: int
    :param burn_in: observations discarded
    :type burn_in: int
    :param seed: generator seed
    :type seed: int
    :param output: output directory
    :type output: Path
    :return: None
    :rtype: NoneType
    """
    setting: config.Settings = config.get_setting()
    chosen: Family = Family(family)
    process: dict = dict(DEFAULT_PROCESS[chosen]) if not (
        alpha or beta or gamma) else {
        "alpha": list(alpha), "beta": list(beta), "gamma": list(gamma)}
    if omega is not None:
        process["omega"] = omega
    elif "omega" not in process:
        raise ConfigurationError("--omega is required with explicit"
                                 " coefficients")
    try:
        params: GarchParams = GarchParams(mu=mu, **process)
        spec: GarchSpec = GarchSpec(
            family=chosen, p=len(params.beta), q=len(params.alpha),
            o=len(params.gamma) or None)
        sim: SimConfig = SimConfig(
            spec=spec, params=params, length=length,
            burn_in=setting.BURN_IN if burn_in is None else burn_in,
            rng_seed=setting.SEED if seed is None else seed,
            start_date=setting.SIM_START_DATE)
    except ValidationError as exc:
        raise ConfigurationError(f"invalid simulation: {exc}") from exc
    returns, variances = SimulatorService.simulate(sim)
    store: ArtifactStore = ArtifactStore(output, setting.ENCODING.lower())
    store.add_csv("simulated.csv", series_frame({"simulated": returns}))
    store.add_csv("true_variance.csv",
                  series_frame({"true_variance": variances}))
    store.add_json("simulation.json", sim)
    store.commit()
