# sims.py
"""Size and power experiments: seeded replicates of the test on simulated equidistant designs"""

from dataclasses import asdict, dataclass, field, fields
import math
from typing import Any, Dict, Mapping, Optional, Tuple

import numpy as np

from core import decision, frontier
from resources import exceptions, functions, logs, settings, strings


TRUTH_KINDS = ('zero', 'sin', 'power', 'neg_power')
ERROR_LAWS = ('uniform_unit', 'neg_exponential')
GAMMA_MODES = ('known', 'estimated')
FAILED_REPLICATE_ERRORS = (
    exceptions.FrontierError,
    exceptions.ZeroDenominatorError,
    exceptions.DegenerateDesignError,
    exceptions.DomainError,
)


# Containers
@dataclass(frozen=True)
class Truth():
    """Frontier of a simulation.

    zero: 0
    sin: c * sin(alpha * pi * x)
    power: c * (x - x0)^p
    neg_power: -c * (x - x0)^p
    """
    kind: str = 'zero'
    c: float = 0.0
    alpha: float = 1.0
    p: int = 2
    x0: float = 0.0


@dataclass(frozen=True)
class ExperimentSpec():
    """One experiment: design size n, test settings, frontier, error law and replicates.

    gamma is the known scale used with gamma_mode 'known'.
    """
    n: int = 100
    h: float = settings.H_DEFAULT
    h1: float = settings.H_DEFAULT
    k: int = settings.K_DEFAULT
    level: float = settings.LEVEL_DEFAULT
    gamma_mode: str = 'estimated'
    gamma: float = 1.0
    a1: float = settings.A1_DEFAULT
    truth: Truth = field(default_factory=Truth)
    errors: str = 'uniform_unit'
    reps: int = settings.REPS_DEFAULT
    seed: int = settings.SEED_DEFAULT
    label: str = ''

    @classmethod
    def from_dict(cls, values: Mapping[str, Any]) -> 'ExperimentSpec':
        """Creates a validated spec from flat keys. Truth parameters use the keys truth, c, alpha, p and x0.

        Raises
        ------
        InvalidSpecError on unknown keys, unreadable values or invalid settings.
        """
        truth_keys = {'truth': 'kind', 'c': 'c', 'alpha': 'alpha', 'p': 'p', 'x0': 'x0'}
        spec_fields = {spec_field.name: spec_field for spec_field in fields(cls) if spec_field.name != 'truth'}
        unknown = set(values) - set(truth_keys) - set(spec_fields)
        if unknown:
            raise exceptions.InvalidSpecError(
                strings.ERROR_INVALID_SPEC.format(reason=f'unknown keys {", ".join(sorted(unknown))}')
            )
        converters = {'n': _to_int, 'k': _to_int, 'reps': _to_int, 'seed': _to_int, 'p': _to_number,
                      'gamma_mode': str, 'errors': str, 'label': str, 'truth': str}
        spec_values = {}
        truth_values = {}
        for key, value in values.items():
            converter = converters.get(key, float)
            try:
                converted = converter(value)
            except (TypeError, ValueError) as error:
                raise exceptions.InvalidSpecError(
                    strings.ERROR_INVALID_SPEC.format(reason=f'{key} = {value!r}: {error}')
                ) from error
            if key in truth_keys:
                truth_values[truth_keys[key]] = converted
            else:
                spec_values[key] = converted
        spec = cls(truth=Truth(**truth_values), **spec_values)
        spec.validate()
        return spec

    def to_dict(self) -> Dict[str, Any]:
        """Returns the flat keys accepted by from_dict"""
        values = asdict(self)
        truth = values.pop('truth')
        values['truth'] = truth.pop('kind')
        values.update(truth)
        return values

    def validate(self) -> None:
        """Raises InvalidSpecError if a setting is out of range"""
        checks = (
            (self.n >= 2 and self.n % 2 == 0, f'n must be a positive even number, got {self.n}'),
            (self.h > 0, f'h must be > 0, got {self.h}'),
            (self.h1 > 0, f'h1 must be > 0, got {self.h1}'),
            (self.k >= 1, f'k must be >= 1, got {self.k}'),
            (0 < self.level < 1, f'level must be in (0, 1), got {self.level}'),
            (self.gamma > 0, f'gamma must be > 0, got {self.gamma}'),
            (self.a1 > 0, f'a1 must be > 0, got {self.a1}'),
            (self.reps >= 1, f'reps must be >= 1, got {self.reps}'),
            (self.gamma_mode in GAMMA_MODES, f'gamma_mode must be one of {", ".join(GAMMA_MODES)}'),
            (self.errors in ERROR_LAWS, f'errors must be one of {", ".join(ERROR_LAWS)}'),
            (self.truth.kind in TRUTH_KINDS, f'truth must be one of {", ".join(TRUTH_KINDS)}'),
            (self.gamma_mode == 'known' or self.k < self.n / 2,
             f'an estimated gamma needs k < n/2, got k = {self.k}, n = {self.n}'),
        )
        for valid, reason in checks:
            if not valid:
                raise exceptions.InvalidSpecError(strings.ERROR_INVALID_SPEC.format(reason=reason))
        if self.truth.kind in ('power', 'neg_power'):
            p = self.truth.p
            if isinstance(p, bool) or int(p) != p or p < 1:
                raise exceptions.InvalidSpecError(
                    strings.ERROR_INVALID_SPEC.format(reason=f'p must be a positive integer, got {p}')
                )

    def gof_config(self) -> decision.GofConfig:
        """Returns the test settings of every replicate"""
        gamma = self.gamma if self.gamma_mode == 'known' else None
        return decision.GofConfig(h=self.h, h1=self.h1, k=self.k, level=self.level, gamma=gamma, a1=self.a1)


@dataclass(frozen=True)
class ExperimentReport():
    """Rejection rates over the completed replicates.

    Failed replicates (estimator errors) are counted in reps_failed and excluded from the rates.
    The means are None when no replicate finished.
    The half-widths are 3 binomial standard errors.
    """
    spec: ExperimentSpec
    rejection_rate_phi1: float
    rejection_rate_phi2: float
    reps_done: int
    reps_failed: int
    binom_ci_halfwidth: float
    binom_ci_halfwidth_phi1: float
    mean_T: Optional[float]
    mean_gamma: Optional[float]
    seed: int


def _to_int(value: Any) -> int:
    number = float(value)
    if not number.is_integer():
        raise ValueError(f'{value!r} is not an integer')
    return int(number)


def _to_number(value: Any) -> float:
    number = float(value)
    return int(number) if number.is_integer() else number


# Designs and errors
def gen_design(n: int, h: float) -> np.ndarray:
    """Returns the equidistant design -h, -h + 1/n, ... up to 1 + h.

    Raises
    ------
    DomainError if n < 1 or h <= 0.
    """
    if n < 1:
        raise exceptions.DomainError(strings.ERROR_DOMAIN.format(name='n', condition='>= 1', value=n))
    if not h > 0:
        raise exceptions.DomainError(strings.ERROR_DOMAIN.format(name='h', condition='> 0', value=h))
    offset = h * n
    if abs(offset - round(offset)) < 1e-9:
        offset = round(offset)
    last = math.floor(offset + n + h * n + 1e-9)
    return (np.arange(last + 1) - offset) / n


def gen_errors(law: str, count: int, rng: np.random.Generator) -> np.ndarray:
    """Draws count errors <= 0. Both laws have scale gamma = 1.

    Raises
    ------
    InvalidSpecError on an unknown law.
    """
    if law == 'uniform_unit':
        return -rng.uniform(0.0, 1.0, count)
    if law == 'neg_exponential':
        return -rng.exponential(1.0, count)
    raise exceptions.InvalidSpecError(
        strings.ERROR_INVALID_SPEC.format(reason=f'errors must be one of {", ".join(ERROR_LAWS)}')
    )


def truth_eval(truth: Truth, x: Any) -> Any:
    """Evaluates the frontier at x (number or array)"""
    x = np.asarray(x, dtype=float)
    if truth.kind == 'zero':
        values = np.zeros_like(x)
    elif truth.kind == 'sin':
        values = truth.c * np.sin(truth.alpha * np.pi * x)
    elif truth.kind == 'power':
        values = truth.c * (x - truth.x0) ** truth.p
    elif truth.kind == 'neg_power':
        values = -truth.c * (x - truth.x0) ** truth.p
    else:
        raise exceptions.InvalidSpecError(
            strings.ERROR_INVALID_SPEC.format(reason=f'truth must be one of {", ".join(TRUTH_KINDS)}')
        )
    return float(values) if values.ndim == 0 else values


def build_sample(spec: ExperimentSpec, rng: np.random.Generator,
                 affine: Tuple[float, float] = (0.0, 0.0)) -> frontier.Sample:
    """Draws one sample Y = g(x) + a + b*x + error on the design of spec. affine = (b, a)."""
    xs = gen_design(spec.n, spec.h)
    errors = gen_errors(spec.errors, len(xs), rng)
    slope, intercept = affine
    ys = truth_eval(spec.truth, xs) + intercept + slope * xs + errors
    return frontier.Sample.from_points(xs, ys, settings.ELIGIBLE_INTERVAL)


# Experiments
def _replicate_outcome(spec: ExperimentSpec, replicate: int) -> Optional[Tuple[bool, bool, float, float]]:
    """Returns (reject1, reject2, T, gamma_used) of one replicate, None if the estimators failed"""
    rng = functions.replicate_rng(spec.seed, replicate)
    sample = build_sample(spec, rng)
    try:
        outcome = decision.run_test(sample, spec.gof_config())
    except FAILED_REPLICATE_ERRORS as error:
        logs.logger.info(f'Replicate {replicate} failed in stage {error.stage}: {error}')
        return None
    return outcome.reject1, outcome.reject2, outcome.T, outcome.gamma_used


def _halfwidth(rate: float, reps: int) -> float:
    return 3 * math.sqrt(rate * (1 - rate) / reps) if reps else 0.0


def run_experiment(spec: ExperimentSpec, workers: Optional[int] = None) -> ExperimentReport:
    """Runs spec.reps seeded replicates and returns the rejection rates of both tests.

    The result does not depend on the number of workers.

    Raises
    ------
    InvalidSpecError if the spec is not valid.
    """
    spec.validate()
    logs.logger.info(f'Running experiment {spec.label or spec.truth.kind} with {spec.reps} replicates.')
    results = functions.run_replicates(_replicate_outcome, spec.reps, spec, workers=workers)
    done = [result for result in results if result is not None]
    reps_done = len(done)
    reps_failed = spec.reps - reps_done
    if reps_failed:
        logs.logger.info(f'{reps_failed} of {spec.reps} replicates failed.')
    if reps_done:
        rate1 = sum(result[0] for result in done) / reps_done
        rate2 = sum(result[1] for result in done) / reps_done
        mean_T = float(np.mean([result[2] for result in done]))
        mean_gamma = float(np.mean([result[3] for result in done]))
    else:
        rate1 = rate2 = 0.0
        mean_T = mean_gamma = None
    return ExperimentReport(
        spec=spec,
        rejection_rate_phi1=float(rate1),
        rejection_rate_phi2=float(rate2),
        reps_done=reps_done,
        reps_failed=reps_failed,
        binom_ci_halfwidth=_halfwidth(rate2, reps_done),
        binom_ci_halfwidth_phi1=_halfwidth(rate1, reps_done),
        mean_T=mean_T,
        mean_gamma=mean_gamma,
        seed=spec.seed,
    )
