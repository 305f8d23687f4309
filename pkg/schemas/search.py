"""
Lag-order search schemas
"""
from typing import Optional
from pydantic import Field, root_validator, validator
from models.family import Family
from schemas import FrozenModel
from schemas.garch import FitOptions, FitResult, FitSummary, GarchSpec


class SearchConfig(FrozenModel):
    """
    Grid and white-noise requirement of a lag-order search.
    """
    families: list[Family] = Field(
        default=[Family.GARCH, Family.EGARCH], title='Families',
        description='Families searched, in grid order')
    p_max: int = Field(default=5, title='p max', ge=1)
    q_max: int = Field(default=5, title='q max', ge=1)
    lb_lags: int = Field(
        default=12, title='Ljung-Box lags', ge=1,
        description='Lags of the residual whiteness checks')
    significance: float = Field(
        default=0.01, title='Significance', gt=0, lt=1,
        description='A check passes when its p-value is at least this level')
    workers: int = Field(
        default=1, title='Workers', ge=1,
        description='Grid cells fitted concurrently')
    fit_options: FitOptions = Field(
        default_factory=FitOptions, title='Fit options',
        description='Optimizer settings; cell i is seeded with seed + i')

    @validator("families", allow_reuse=True)
    def check_families(cls, v: list[Family]) -> list[Family]:
        """
        Non-empty, duplicate free family list validator.
        :param v: families
        :type v: list[Family]
        :return: the same families
        :rtype: list[Family]
        """
        if not v:
            raise ValueError("at least one family is required")
        if len(set(v)) != len(v):
            raise ValueError("families must not repeat")
        return v

    def grid(self) -> list[GarchSpec]:
        """
        Specifications in grid order: family, then p, then q.
        :return: every specification searched
        :rtype: list[GarchSpec]
        """
        specs: list[GarchSpec] = []
        for family in self.families:
            if family == Family.ARCH:
                specs += [GarchSpec(family=family, p=0, q=q)
                          for q in range(1, self.q_max + 1)]
                continue
            specs += [GarchSpec(family=family, p=p, q=q)
                      for p in range(1, self.p_max + 1)
                      for q in range(1, self.q_max + 1)]
        return specs

    class Config:
        """
        Config class for SearchConfig
        """
        schema_extra: dict[str, dict] = {
            "example": {"families": ["GARCH", "EGARCH"], "p_max": 5,
                        "q_max": 5, "lb_lags": 12, "significance": 0.01}
        }


class Candidate(FrozenModel):
    """
    One grid cell of a search.
    """
    spec: GarchSpec = Field(..., title='Specification')
    aic: Optional[float] = Field(
        default=None, title='AIC', description='Absent when the fit failed')
    converged: bool = Field(default=False, title='Converged')
    lb_levels_pass: bool = Field(
        default=False, title='Q passes',
        description='Standardized residuals look white')
    lb_squares_pass: bool = Field(
        default=False, title='Q^2 passes',
        description='Squared standardized residuals look white')
    summary: Optional[FitSummary] = Field(default=None, title='Summary')
    error: Optional[str] = Field(
        default=None, title='Error', description='Why the fit failed')

    @property
    def passes(self) -> bool:
        """
        Eligible to win without relaxation
        :return: converged with both whiteness checks passed
        :rtype: bool
        """
        return self.converged and self.lb_levels_pass and self.lb_squares_pass


class SearchReport(FrozenModel):
    """
    Candidates of a search and the selected forecasting model.
    """
    config: SearchConfig = Field(..., title='Configuration')
    candidates: list[Candidate] = Field(
        ..., title='Candidates', description='One per grid cell, grid order')
    winner: FitResult = Field(..., title='Winner')
    winner_summary: FitSummary = Field(..., title='Winner summary')
    selection_rationale: str = Field(..., title='Selection rationale')
    relaxed: bool = Field(
        default=False, title='Relaxed',
        description='No candidate passed; the lowest AIC converged fit won')
    benchmark: Optional[FitSummary] = Field(
        default=None, title='GARCH(1,1) benchmark')
    family_winners: dict[Family, FitSummary] = Field(
        default_factory=dict, title='Family winners',
        description='Selected model within each searched family')

    @root_validator(skip_on_failure=True, allow_reuse=True)
    def check_candidates(cls, values: dict) -> dict:
        """
        One candidate per grid cell validator.
        :param values: validated fields
        :type values: dict
        :return: the same fields
        :rtype: dict
        """
        grid: list[GarchSpec] = values["config"].grid()
        if [c.spec for c in values["candidates"]] != grid:
            raise ValueError("candidates must follow the search grid")
        return values
