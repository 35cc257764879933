# decision.py
"""Test decisions, critical values and p-values of the conservative test phi1 and the exact size test phi2"""

from dataclasses import dataclass, field
import math
from typing import NamedTuple, Optional, Tuple

from scipy import stats

from core import frontier, statistic, tail
from resources import exceptions, logs, settings, strings


# Containers
@dataclass(frozen=True)
class GofConfig():
    """Test settings.

    cx None computes C_x from the design, a number fixes it.
    """
    h: float = settings.H_DEFAULT
    h1: float = settings.H_DEFAULT
    k: int = settings.K_DEFAULT
    level: float = settings.LEVEL_DEFAULT
    gamma: Optional[float] = None
    a1: float = settings.A1_DEFAULT
    cx: Optional[float] = None

    def __post_init__(self) -> None:
        checks = (
            ('h', self.h, self.h > 0, '> 0'),
            ('h1', self.h1, self.h1 > 0, '> 0'),
            ('k', self.k, self.k >= 1, '>= 1'),
            ('level', self.level, 0 < self.level < 1, 'in (0, 1)'),
            ('a1', self.a1, self.a1 > 0, '> 0'),
        )
        for name, value, valid, condition in checks:
            if not valid:
                raise exceptions.DomainError(strings.ERROR_DOMAIN.format(name=name, condition=condition, value=value))
        if self.gamma is not None and not self.gamma > 0:
            raise exceptions.DomainError(strings.ERROR_GAMMA.format(gamma=self.gamma))
        if self.cx is not None and not self.cx > 0:
            raise exceptions.DomainError(strings.ERROR_DOMAIN.format(name='cx', condition='> 0', value=self.cx))

    @property
    def cx_mode(self) -> str:
        return 'auto' if self.cx is None else 'fixed'


class Decision(NamedTuple):
    """Critical value, decision and p-value of one test"""
    crit: float
    reject: bool
    p: float


@dataclass(frozen=True)
class GofOutcome():
    """Result of both tests on one sample.

    n_stat is the in-interval point count normalizing C_x, n_formula = 2 * breakdown.m the n in the
    critical values.
    """
    T: float
    gamma_used: float
    cx: float
    crit1: float
    crit2: float
    reject1: bool
    reject2: bool
    p1: float
    p2: float
    breakdown: statistic.StatBreakdown
    n_stat: int
    n_formula: int
    cx_mode: str
    regularity: float
    gamma_estimate: Optional[tail.TailEstimate] = None
    warnings: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def rejected(self) -> bool:
        """True if either test rejects"""
        return self.reject1 or self.reject2


# Quantiles
def normal_quantile(q: float) -> float:
    """Returns the q-quantile of the standard normal distribution.

    Raises
    ------
    DomainError if q is not in (0, 1).
    """
    if not 0 < q < 1:
        raise exceptions.DomainError(strings.ERROR_DOMAIN.format(name='q', condition='in (0, 1)', value=q))
    return float(stats.norm.ppf(q))


def _check_positive(**values: float) -> None:
    for name, value in values.items():
        if not value > 0:
            raise exceptions.DomainError(strings.ERROR_DOMAIN.format(name=name, condition='> 0', value=value))


def _decide(T: float, scale: float, level: float) -> Decision:
    """Rejects for large T. scale is the standard deviation of T under the hypothesis."""
    if not 0 < level < 1:
        raise exceptions.DomainError(strings.ERROR_DOMAIN.format(name='level', condition='in (0, 1)', value=level))
    crit = normal_quantile(1 - level) * scale
    return Decision(crit=float(crit), reject=bool(T >= crit), p=float(stats.norm.cdf(-T / scale)))


# Tests
def phi1(T: float, n: float, h: float, gamma_used: float, cx: float, level: float) -> Decision:
    """Conservative test using the variance bound 8 / cx^3 * n^-2 * h^-3 * gamma^-4.

    Raises
    ------
    DomainError on nonpositive inputs or level outside (0, 1).
    """
    _check_positive(n=n, h=h, gamma=gamma_used, cx=cx)
    scale = math.sqrt((8 / cx ** 3) * n ** -2 * h ** -3 * gamma_used ** -4)
    return _decide(T, scale, level)


def phi2(T: float, n: float, h: float, gamma_used: float, a1: float, level: float) -> Decision:
    """Asymptotically exact test using the variance a1 * n^-2 * h^-3 * gamma^-4.

    Raises
    ------
    DomainError on nonpositive inputs or level outside (0, 1).
    """
    _check_positive(n=n, h=h, gamma=gamma_used, a1=a1)
    scale = math.sqrt(n ** -2 * h ** -3 * gamma_used ** -4 * a1)
    return _decide(T, scale, level)


# Pipeline
def _annotate(error: exceptions.GofError, stage: str) -> exceptions.GofError:
    error.stage = stage
    logs.logger.info(strings.MSG_ERROR_STAGE.format(stage=stage, error=error))
    return error


def sample_warnings(sample: frontier.Sample) -> Tuple[str, ...]:
    """Returns the notes on how the sample was canonicalized"""
    warnings = []
    if sample.merged_count:
        warnings.append(strings.WARNING_MERGED.format(count=sample.merged_count))
    if sample.dropped_last:
        warnings.append(strings.WARNING_DROPPED_LAST.format(x=sample.dropped_x))
    return tuple(warnings)


def run_test(sample: frontier.Sample, config: GofConfig) -> GofOutcome:
    """Runs the full test on a sample.

    Stages: residuals (only if gamma is estimated), gamma, statistic, c_x, phi1, phi2.
    An error of a stage is re-raised with error.stage set to the stage name.
    With an automatic C_x of 0 (an empty half-bandwidth window) phi1 is undefined and the c_x stage
    raises DomainError.
    """
    stage = 'residuals'
    try:
        gamma_estimate = None
        if config.gamma is None:
            residuals = frontier.residuals_even(sample, config.h1)
            stage = 'gamma'
            gamma_estimate = tail.neg_hill(residuals, config.k)
            gamma_used = gamma_estimate.gamma_hat
        else:
            stage = 'gamma'
            gamma_used = tail.resolve_gamma(config.gamma, None, config.k)

        stage = 'statistic'
        breakdown = statistic.t_statistic(sample, config.h, gamma_used)
        n_formula = 2 * breakdown.m

        stage = 'c_x'
        n_stat = sample.n_stat
        regularity = statistic.design_regularity(sample.xs, config.h)
        if config.cx is None:
            cx = statistic.c_x(sample.xs, config.h, n_stat)
            if not cx > 0:
                raise exceptions.DomainError(
                    strings.ERROR_DOMAIN.format(name='C_x', condition='> 0 for phi1', value=cx)
                )
        else:
            cx = float(config.cx)

        stage = 'phi1'
        decision1 = phi1(breakdown.T, n_formula, config.h, gamma_used, cx, config.level)
        stage = 'phi2'
        decision2 = phi2(breakdown.T, n_formula, config.h, gamma_used, config.a1, config.level)
    except exceptions.GofError as error:
        raise _annotate(error, stage)

    warnings = list(sample_warnings(sample))
    if regularity > settings.IRREGULAR_DESIGN_RATIO:
        warnings.append(
            strings.WARNING_IRREGULAR_DESIGN.format(ratio=regularity, limit=settings.IRREGULAR_DESIGN_RATIO)
        )
    outcome = GofOutcome(
        T=breakdown.T,
        gamma_used=gamma_used,
        cx=cx,
        crit1=decision1.crit,
        crit2=decision2.crit,
        reject1=decision1.reject,
        reject2=decision2.reject,
        p1=decision1.p,
        p2=decision2.p,
        breakdown=breakdown,
        n_stat=n_stat,
        n_formula=n_formula,
        cx_mode=config.cx_mode,
        regularity=regularity,
        gamma_estimate=gamma_estimate,
        warnings=tuple(warnings),
    )
    logs.logger.debug(
        f'Test done: T = {outcome.T}, gamma = {gamma_used}, C_x = {cx}, '
        f'p1 = {outcome.p1}, p2 = {outcome.p2}.'
    )
    return outcome
