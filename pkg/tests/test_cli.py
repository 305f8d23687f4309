"""
Command line tests
"""
import json
from pathlib import Path
import pytest
from click.testing import CliRunner
from crud.artifacts import ArtifactStore
from crud.series import load_track, series_frame, track_frame
from helper.helper import to_json
from main import cli
from schemas.forecast import ForecastTrack
from schemas.timeseries import ReturnSeries
from services.metrics import MetricsService
from tests.conftest import business_days, simulate_garch


@pytest.fixture
def runner() -> CliRunner:
    """Click test runner."""
    return CliRunner()


def write_series(path: Path, named: dict[str, ReturnSeries]) -> Path:
    series_frame(named).to_csv(path, index=False)
    return path


def read_json(path: Path):
    return json.loads(path.read_text(encoding="utf-8"))


def snapshot(directory: Path) -> dict[str, bytes]:
    return {p.relative_to(directory).as_posix(): p.read_bytes()
            for p in sorted(directory.rglob("*")) if p.is_file()}


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert "1.0.0" in result.output


def test_describe_short_file(runner, write_csv, tmp_path):
    path = write_csv("date,x\n2010-01-04,0.01\n2010-01-05,-0.02\n"
                     "2010-01-06,0.005\n")
    result = runner.invoke(cli, ["describe", "--input", str(path),
                                 "--output", str(tmp_path / "out")])
    assert result.exit_code == 0, result.output
    stats = read_json(tmp_path / "out" / "describe.json")
    assert stats["count"] == 3
    assert stats["skewness"] is None


def test_unknown_flag_is_a_usage_error(runner):
    result = runner.invoke(cli, ["describe", "--bogus"])
    assert result.exit_code == 2


def test_configuration_error_record(runner, write_csv, tmp_path):
    path = write_csv("date,x\n2010-01-04,0.01\n2010-01-05,-0.02\n")
    out = tmp_path / "out"
    result = runner.invoke(cli, ["describe", "--input", str(path),
                                 "--train-fraction", "1.5", "--output",
                                 str(out)])
    assert result.exit_code == 2
    record = read_json(out / "error.json")
    assert record["code"] == "configuration"
    assert record["exit_code"] == 2
    assert not (out / "describe.json").exists()


def test_bad_file_record(runner, write_csv, tmp_path):
    path = write_csv("date,x\n2010-01-04,0.01\n2010-01-05,oops\n")
    out = tmp_path / "out"
    result = runner.invoke(cli, ["describe", "--input", str(path),
                                 "--output", str(out)])
    assert result.exit_code == 3
    record = read_json(out / "error.json")
    assert record["code"] == "ingestion"
    assert record["details"]["line"] == 3


def test_nonstationary_simulation_record(runner, tmp_path):
    out = tmp_path / "out"
    result = runner.invoke(cli, ["simulate", "--omega", "1e-5", "--alpha",
                                 "0.5", "--beta", "0.6", "--output",
                                 str(out)])
    assert result.exit_code == 4
    assert read_json(out / "error.json")["code"] == "nonstationary_model"
    assert not (out / "simulated.csv").exists()


def test_simulate_then_describe(runner, tmp_path):
    sim = tmp_path / "sim"
    result = runner.invoke(cli, ["simulate", "--length", "300", "--seed",
                                 "3", "--burn-in", "100", "--output",
                                 str(sim)])
    assert result.exit_code == 0, result.output
    assert {"simulated.csv", "true_variance.csv", "simulation.json"} <= \
        set(snapshot(sim))
    assert read_json(sim / "simulation.json")["rng_seed"] == 3
    out = tmp_path / "out"
    result = runner.invoke(cli, ["describe", "--input",
                                 str(sim / "simulated.csv"), "--output",
                                 str(out)])
    assert result.exit_code == 0, result.output
    assert read_json(out / "describe.json")["count"] == 300


def test_diagnose_writes_one_directory_per_series(runner, tmp_path):
    first, _ = simulate_garch(120, seed=1)
    second, _ = simulate_garch(120, seed=2)
    path = write_series(tmp_path / "data.csv", {"sp500": first,
                                                "ftse": second})
    out = tmp_path / "out"
    result = runner.invoke(cli, ["diagnose", "--input", str(path),
                                 "--output", str(out)])
    assert result.exit_code == 0, result.output
    for label in ("sp500", "ftse"):
        report = read_json(out / label / "diagnostics.json")
        assert report["label"] == label
        assert read_json(out / label / "describe.json")["count"] == 96


def test_fit_and_forecast(runner, tmp_path):
    returns, _ = simulate_garch(400, seed=6)
    path = write_series(tmp_path / "data.csv", {"sp500": returns})
    out = tmp_path / "out"
    result = runner.invoke(cli, ["fit-garch", "--input", str(path),
                                 "--output", str(out)])
    assert result.exit_code == 0, result.output
    fit = read_json(out / "garch_fit.json")
    assert fit["model_id"] == "GARCH(1,1)"
    assert set(fit["params"]) == {"mu", "omega", "alpha[1]", "beta[1]"}
    result = runner.invoke(cli, ["forecast", "--input", str(path),
                                 "--refit-interval", "100", "--output",
                                 str(out)])
    assert result.exit_code == 0, result.output
    track = load_track(out / "forecast_GARCH(1,1).csv")
    assert len(track) == 80
    assert track.dates == returns.dates[320:]


def test_forecast_with_broken_model_file(runner, tmp_path):
    returns, _ = simulate_garch(200, seed=4)
    path = write_series(tmp_path / "data.csv", {"sp500": returns})
    model = tmp_path / "model_12.json"
    model.write_text("{\"layer_sizes\": [5, 12", encoding="utf-8")
    out = tmp_path / "out"
    result = runner.invoke(cli, ["forecast", "--input", str(path),
                                 "--ann-model", str(model), "--output",
                                 str(out)])
    assert result.exit_code == 3
    record = read_json(out / "error.json")
    assert record["code"] == "data"
    assert record["details"]["path"] == str(model)
    assert not list(out.glob("forecast_*.csv"))


PIPELINE_FLAGS: list[str] = [
    "--family", "GARCH", "--family", "EGARCH", "--p-max", "1", "--q-max",
    "1", "--hidden", "1", "--hidden", "2", "--epochs", "3",
    "--refit-interval", "40", "--seed", "7"]


def test_pipeline_is_reproducible(runner, tmp_path):
    returns, _ = simulate_garch(400, seed=12)
    path = write_series(tmp_path / "data.csv", {"sp500": returns})
    outputs = []
    for name in ("first", "second"):
        out = tmp_path / name
        result = runner.invoke(cli, ["pipeline", "--input", str(path),
                                     "--output", str(out)] + PIPELINE_FLAGS)
        assert result.exit_code == 0, result.output
        outputs.append(snapshot(out))
    assert outputs[0] == outputs[1]
    files = set(outputs[0])
    assert {"describe.json", "diagnostics.json", "garch_search.json",
            "garch_table.txt", "ann_sweep.json", "curve_1.csv",
            "curve_2.csv", "model_1.json", "model_2.json", "compare.json",
            "compare_table.txt"} <= files
    forecasts = sorted(f for f in files if f.startswith("forecast_"))
    assert len([f for f in forecasts if f.startswith("forecast_ANN(")]) == 1
    report = read_json(tmp_path / "first" / "compare.json")
    assert sorted(f"forecast_{r['model_id']}.csv"
                  for r in report["reports"]) == forecasts
    search = read_json(tmp_path / "first" / "garch_search.json")
    assert [c["spec"]["family"] for c in search["candidates"]] == \
        ["GARCH", "EGARCH"]
    assert "conditional_variance_path" not in search["winner"]


def test_compare_delegates_to_metrics(runner, tmp_path):
    dates = business_days(4)
    realized = [1e-4, 3e-4, 2e-4, 5e-5]
    store = ArtifactStore(tmp_path / "tracks")
    for model_id, predicted in (("GARCH(1,1)", [2e-4] * 4),
                                ("ANN(12)", [1.2e-4, 2.5e-4, 2e-4, 1e-4])):
        store.add_csv(f"forecast_{model_id}.csv", track_frame(ForecastTrack(
            dates=dates, predicted=predicted, realized=realized,
            model_id=model_id)))
    paths = store.commit()
    out = tmp_path / "out"
    arguments = ["compare", "--label", "sp500", "--output", str(out)]
    for path in paths:
        arguments += ["--track", str(path)]
    result = runner.invoke(cli, arguments)
    assert result.exit_code == 0, result.output
    expected = MetricsService.compare([load_track(p) for p in paths],
                                      "sp500")
    assert (out / "compare.json").read_text(encoding="utf-8") == \
        to_json(expected)
    assert (out / "compare_table.txt").read_text(encoding="utf-8") == \
        MetricsService.table(expected)
    assert expected.winner == "ANN(12)"


def test_compare_misaligned_tracks(runner, tmp_path):
    store = ArtifactStore(tmp_path / "tracks")
    for model_id, start in (("GARCH(1,1)", "2010-01-04"),
                            ("ANN(1)", "2011-01-03")):
        store.add_csv(f"forecast_{model_id}.csv", track_frame(ForecastTrack(
            dates=business_days(3, start), predicted=[1e-4] * 3,
            realized=[2e-4] * 3, model_id=model_id)))
    paths = store.commit()
    out = tmp_path / "out"
    result = runner.invoke(cli, ["compare", "--track", str(paths[0]),
                                 "--track", str(paths[1]), "--output",
                                 str(out)])
    assert result.exit_code == 3
    assert read_json(out / "error.json")["code"] == "alignment"
