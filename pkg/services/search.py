"""
Model search services script.
"""
import logging
from functools import partial
from typing import Callable, Optional
import anyio
from anyio import to_thread
from tabulate import tabulate
from core.exceptions import InsufficientDataError, SearchFailedError, \
    VolatilityLabError
from models.family import Family
from schemas.garch import FitOptions, FitResult, FitSummary, GarchSpec
from schemas.search import Candidate, SearchConfig, SearchReport
from schemas.timeseries import ReturnSeries
from services.garch import GarchService

logger: logging.Logger = logging.getLogger(__name__)

AIC_TIE_TOLERANCE: float = 1e-6
BENCHMARK: GarchSpec = GarchSpec(family=Family.GARCH, p=1, q=1)

CellOutcome = tuple[Candidate, Optional[FitResult]]


def _evaluate(series: ReturnSeries, config: SearchConfig, index: int,
              spec: GarchSpec) -> CellOutcome:
    options: FitOptions = config.fit_options.copy(
        update={"seed": config.fit_options.seed + index})
    try:
        result: FitResult = GarchService.fit(series, spec, options)
        summary: FitSummary = GarchService.summarize(result, config.lb_lags)
    except VolatilityLabError as exc:
        logger.warning("%s failed: %s", spec.model_id, exc)
        return Candidate(spec=spec, error=str(exc)), None
    return Candidate(
        spec=spec, aic=result.aic, converged=result.converged,
        lb_levels_pass=summary.ljung_box.p_value >= config.significance,
        lb_squares_pass=summary.ljung_box_squared.p_value >=
        config.significance, summary=summary), result


async def _evaluate_concurrently(
        cells: list[Callable[[], CellOutcome]],
        workers: int) -> list[CellOutcome]:
    outcomes: list[Optional[CellOutcome]] = [None] * len(cells)
    limiter: anyio.CapacityLimiter = anyio.CapacityLimiter(workers)

    async def run(index: int) -> None:
        outcomes[index] = await to_thread.run_sync(cells[index],
                                                   limiter=limiter)

    async with anyio.create_task_group() as task_group:
        for i in range(len(cells)):
            task_group.start_soon(run, i)
    return outcomes


def _select(candidates: list[Candidate]) -> Optional[Candidate]:
    """Lowest AIC; ties within tolerance go to smaller p + q, then p."""
    if not candidates:
        return None
    best_aic: float = min(c.aic for c in candidates)
    tied: list[Candidate] = [c for c in candidates
                             if c.aic - best_aic <= AIC_TIE_TOLERANCE]
    return min(tied, key=lambda c: (c.spec.p + c.spec.q, c.spec.p))


class ModelSearchService:
    """
    AIC minimization over lag orders subject to white-noise residuals.
    """

    @staticmethod
    def choose(candidates: list[Candidate]) -> tuple[Optional[Candidate],
                                                     bool]:
        """
        Pick the forecasting model among candidates
        :param candidates: evaluated grid cells
        :type candidates: list[Candidate]
        :return: the winner, or None when nothing converged, and whether
         the whiteness requirement had to be relaxed
        :rtype: tuple[Optional[Candidate], bool]
        """
        passing: list[Candidate] = [c for c in candidates if c.passes]
        if passing:
            return _select(passing), False
        converged: list[Candidate] = [c for c in candidates if c.converged]
        return _select(converged), True

    @staticmethod
    def search(series: ReturnSeries, config: SearchConfig) -> SearchReport:
        """
        Fit every grid cell and select the lowest AIC model with white
         standardized residuals
        :param series: in-sample returns
        :type series: ReturnSeries
        :param config: grid and whiteness requirement
        :type config: SearchConfig
        :return: all candidates, the winner, benchmark and family winners
        :rtype: SearchReport
        """
        grid: list[GarchSpec] = config.grid()
        required: int = max(20 * (s.p + s.q + 2) for s in grid)
        if len(series) < required:
            raise InsufficientDataError(
                f"{len(series)} observations given; the largest grid"
                f" specification needs {required}")
        cells: list[Callable[[], CellOutcome]] = [
            partial(_evaluate, series, config, i, spec)
            for i, spec in enumerate(grid)]
        outcomes: list[CellOutcome]
        if config.workers > 1:
            outcomes = anyio.run(_evaluate_concurrently, cells,
                                 config.workers)
        else:
            outcomes = [cell() for cell in cells]
        candidates: list[Candidate] = [c for c, _ in outcomes]
        results: list[Optional[FitResult]] = [r for _, r in outcomes]

        winner, relaxed = ModelSearchService.choose(candidates)
        if winner is None:
            raise SearchFailedError(
                "no specification in the grid converged",
                {"candidates": [c.dict(exclude={"summary"})
                                for c in candidates]})
        rationale: str = (
            f"{winner.spec.model_id} has the lowest AIC among converged"
            f" candidates with white residuals at the"
            f" {config.significance:g} level")
        if relaxed:
            rationale = (
                f"no candidate passed both Ljung-Box checks at the"
                f" {config.significance:g} level; {winner.spec.model_id} has"
                f" the lowest AIC among converged candidates")
            logger.warning("relaxed selection for %s: %s", series.label,
                           rationale)
        family_winners: dict[Family, FitSummary] = {}
        for family in config.families:
            best, _ = ModelSearchService.choose(
                [c for c in candidates if c.spec.family == family])
            if best is not None:
                family_winners[family] = best.summary
        logger.info("search on %s selected %s (AIC %.4f)", series.label,
                    winner.spec.model_id, winner.aic)
        return SearchReport(
            config=config, candidates=candidates,
            winner=results[candidates.index(winner)],
            winner_summary=winner.summary,
            selection_rationale=rationale, relaxed=relaxed,
            benchmark=ModelSearchService._benchmark(series, config,
                                                    candidates),
            family_winners=family_winners)

    @staticmethod
    def _benchmark(series: ReturnSeries, config: SearchConfig,
                   candidates: list[Candidate]) -> Optional[FitSummary]:
        for candidate in candidates:
            if candidate.spec == BENCHMARK:
                return candidate.summary
        outcome: Candidate = _evaluate(series, config, len(candidates),
                                       BENCHMARK)[0]
        return outcome.summary

    @staticmethod
    def table(report: SearchReport) -> str:
        """
        Search table text: coefficient, log-likelihood, Q(lags),
         Q^2(lags) and AIC rows for the benchmark and the family winners,
         followed by every candidate
        :param report: search outcome
        :type report: SearchReport
        :return: plain text tables
        :rtype: str
        """
        columns: list[tuple[str, FitSummary]] = []
        if report.benchmark is not None:
            columns.append(("benchmark", report.benchmark))
        columns += [(family.value, summary) for family, summary in
                    report.family_winners.items()]
        lags: int = report.config.lb_lags
        names: list[str] = []
        for _, summary in columns:
            names += [n for n in summary.params if n not in names]
        rows: list[list] = [[name] + [summary.params.get(name) for _, summary
                                      in columns] for name in names]
        rows.append(["log-likelihood"] + [s.log_likelihood for _, s in
                                          columns])
        rows.append([f"Q({lags})"] + [s.ljung_box.statistic for _, s in
                                      columns])
        rows.append([f"Q^2({lags})"] + [s.ljung_box_squared.statistic
                                        for _, s in columns])
        rows.append(["AIC"] + [s.aic for _, s in columns])
        headers: list[str] = [""] + [f"{label}\n{s.model_id}" for label, s
                                     in columns]
        selected: str = tabulate(rows, headers=headers, floatfmt=".6g",
                                 missingval="")
        listing: str = tabulate(
            [[c.spec.model_id, c.aic, c.converged,
              c.summary.ljung_box.p_value if c.summary else None,
              c.summary.ljung_box_squared.p_value if c.summary else None,
              "*" if c.spec == report.winner.spec else ""]
             for c in report.candidates],
            headers=["model", "AIC", "converged", f"Q({lags}) p",
                     f"Q^2({lags}) p", "winner"], floatfmt=".6g",
            missingval="")
        return f"{selected}\n\n{listing}\n\n{report.selection_rationale}\n"
