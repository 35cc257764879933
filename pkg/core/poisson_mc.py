# poisson_mc.py
"""Monte Carlo estimation of the variance constant A1 from the limiting Poisson point processes.

Every replicate draws five independent odd processes on [0, 1] x [-M, 0] and one even master process
on [-1, 6] x [-M, 0], all of intensity gamma / 2 since odd and even points each take half of the
rescaled sample. The even process of position k is the master window (k-2, k+1] shifted by k-1,
so neighbouring positions share points. With G the functional below,
X = G(odd 3, even 3) and Y = sum over k of G(odd k, even k), and the covariance of X and Y estimates
A_gamma = A1 / gamma^4.
"""

from dataclasses import dataclass
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy import integrate

from core import frontier
from resources import exceptions, functions, logs, settings, strings
from resources.functions import as_float_array


ODD_PROCESSES = 5
CENTER = 3
MASTER_STRIP = (-1.0, 6.0)
BANDWIDTH = 1.0


# Containers
@dataclass(frozen=True)
class PlanarPointSet():
    """Points of a planar process in the strip [x_lo, x_hi] x [-depth, 0], sorted by x"""
    xs: np.ndarray
    ys: np.ndarray
    x_lo: float
    x_hi: float
    depth: float

    @classmethod
    def from_points(cls, xs: Sequence[float], ys: Sequence[float], x_lo: float, x_hi: float,
                    depth: float) -> 'PlanarPointSet':
        """Creates a point set sorted by x.

        Raises
        ------
        LengthMismatchError if xs and ys differ in length.
        DomainError if depth <= 0 or a point lies outside the strip.
        """
        xs = as_float_array(xs)
        ys = as_float_array(ys)
        if len(xs) != len(ys):
            raise exceptions.LengthMismatchError(
                strings.ERROR_LENGTH.format(first='xs', second='ys', len_first=len(xs), len_second=len(ys))
            )
        if not depth > 0:
            raise exceptions.DomainError(strings.ERROR_DOMAIN.format(name='depth', condition='> 0', value=depth))
        inside = (xs >= x_lo) & (xs <= x_hi) & (ys >= -depth) & (ys <= 0)
        if not np.all(inside):
            raise exceptions.DomainError(
                strings.ERROR_DOMAIN.format(name='points', condition=f'inside [{x_lo}, {x_hi}] x [{-depth}, 0]',
                                            value='a point outside')
            )
        order = np.argsort(xs, kind='stable')
        xs, ys = xs[order], ys[order]
        xs.setflags(write=False)
        ys.setflags(write=False)
        return cls(xs=xs, ys=ys, x_lo=float(x_lo), x_hi=float(x_hi), depth=float(depth))

    def __len__(self) -> int:
        return len(self.xs)

    def scale_y(self, c: float) -> 'PlanarPointSet':
        """Returns the set with every point (x, y) mapped to (x, c*y), c > 0"""
        if not c > 0:
            raise exceptions.DomainError(strings.ERROR_DOMAIN.format(name='c', condition='> 0', value=c))
        return PlanarPointSet.from_points(self.xs, self.ys * c, self.x_lo, self.x_hi, self.depth * c)

    def truncate(self, depth: float) -> 'PlanarPointSet':
        """Returns the points with y >= -depth"""
        keep = self.ys >= -depth
        return PlanarPointSet.from_points(self.xs[keep], self.ys[keep], self.x_lo, self.x_hi, depth)

    def window(self, lower: float, upper: float, shift: float) -> 'PlanarPointSet':
        """Returns the points with lower < x <= upper moved to x - shift"""
        keep = (self.xs > lower) & (self.xs <= upper)
        return PlanarPointSet.from_points(self.xs[keep] - shift, self.ys[keep], lower - shift, upper - shift,
                                          self.depth)


@dataclass(frozen=True)
class A1Estimate():
    """Empirical covariance of X and Y with its standard error.

    a1_equivalent = value * gamma^4 is comparable with A1 at any gamma.
    """
    value: float
    std_error: float
    variance: float
    reps: int
    gamma: float
    depth: float
    seed: int
    grid_n: int
    redraws: int

    @property
    def a1_equivalent(self) -> float:
        return self.value * self.gamma ** 4


# Processes
def default_depth(gamma: float) -> float:
    """Returns the default truncation depth M = 40 / gamma"""
    return settings.DEPTH_FACTOR / gamma


def draw_process(intensity: float, x_lo: float, x_hi: float, depth: float,
                 rng: np.random.Generator) -> PlanarPointSet:
    """Draws a homogeneous Poisson process of the given intensity on [x_lo, x_hi] x [-depth, 0]"""
    count = rng.poisson(intensity * (x_hi - x_lo) * depth)
    xs = rng.uniform(x_lo, x_hi, count)
    ys = -rng.uniform(0, depth, count)
    return PlanarPointSet.from_points(xs, ys, x_lo, x_hi, depth)


def sample_processes(gamma: float, depth: float,
                     rng: np.random.Generator) -> Tuple[List[PlanarPointSet], PlanarPointSet]:
    """Draws the five odd processes and the even master process, all of intensity gamma / 2.

    Raises
    ------
    DomainError if gamma <= 0 or depth <= 0.
    """
    if not gamma > 0:
        raise exceptions.DomainError(strings.ERROR_GAMMA.format(gamma=gamma))
    if not depth > 0:
        raise exceptions.DomainError(strings.ERROR_DOMAIN.format(name='depth', condition='> 0', value=depth))
    intensity = gamma / 2
    phi_o = [draw_process(intensity, 0.0, 1.0, depth, rng) for _ in range(ODD_PROCESSES)]
    master = draw_process(intensity, *MASTER_STRIP, depth, rng)
    return phi_o, master


def window_e(master: PlanarPointSet, k: int) -> PlanarPointSet:
    """Returns the even process of position k: master points with x in (k-2, k+1], shifted by k-1"""
    return master.window(k - 2, k + 1, k - 1)


# Functional
def g_functional(phi_o: PlanarPointSet, phi_e: PlanarPointSet, gamma: float,
                 grid_n: int = settings.GRID_N_DEFAULT) -> float:
    """Returns 1/2 * int_0^1 g(x)^2 dx + (2/gamma) * sum of Y * 1{Y >= g(X)} over the odd points,
    g being the frontier fit of phi_e at bandwidth 1. The integral uses Simpson's rule on grid_n + 1 nodes.

    Raises
    ------
    DomainError if grid_n is not a positive even number or gamma <= 0.
    DegenerateDrawError if phi_e leaves one side of a window empty.
    """
    if grid_n < 2 or grid_n % 2 != 0:
        raise exceptions.DomainError(
            strings.ERROR_DOMAIN.format(name='grid_n', condition='a positive even number', value=grid_n)
        )
    if not gamma > 0:
        raise exceptions.DomainError(strings.ERROR_GAMMA.format(gamma=gamma))
    nodes = np.linspace(0.0, 1.0, grid_n + 1)
    try:
        fitted = frontier.fit_points_grid(phi_e.xs, phi_e.ys, nodes, BANDWIDTH).values
        exceedance = 0.0
        if len(phi_o):
            at_points = frontier.fit_points_grid(phi_e.xs, phi_e.ys, phi_o.xs, BANDWIDTH).values
            exceedance = float(np.sum(phi_o.ys[phi_o.ys >= at_points]))
    except exceptions.FrontierError as error:
        raise exceptions.DegenerateDrawError(strings.ERROR_DEGENERATE_DRAW.format(error=error)) from error
    integral = float(integrate.simpson(fitted ** 2, x=nodes))
    return 0.5 * integral + (2 / gamma) * exceedance


# Estimation
def _replicate_values(gamma: float, depth: float, grid_n: int, seed: int,
                      replicate: int) -> Tuple[float, float, int]:
    """Returns (X, Y, redraws) of one replicate. Degenerate draws are redrawn with the next attempt seed."""
    for attempt in range(settings.MAX_REDRAWS + 1):
        rng = functions.replicate_rng(seed, replicate, attempt)
        phi_o, master = sample_processes(gamma, depth, rng)
        try:
            values = [g_functional(phi_o[k - 1], window_e(master, k), gamma, grid_n)
                      for k in range(1, ODD_PROCESSES + 1)]
        except exceptions.DegenerateDrawError as error:
            logs.logger.debug(f'Replicate {replicate}, attempt {attempt}: {error}')
            continue
        return values[CENTER - 1], math.fsum(values), attempt
    raise exceptions.DepthTooShallowError(
        strings.ERROR_DEPTH_TOO_SHALLOW.format(redraws=settings.MAX_REDRAWS + 1, reps=1,
                                               rate=settings.MAX_DEGENERATE_RATE, depth=depth, gamma=gamma)
    )


def cov_variance(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Returns the plug-in variance of the empirical covariance of paired samples:
    (1/n) * (mu4 - (n-2)/(n-1) * eta^4 + sigma^2 * tau^2 / (n-1)), with mu4 the mean of the
    products of squared deviations, eta^2 the sample covariance and sigma^2, tau^2 the sample variances.

    Raises
    ------
    LengthMismatchError if the samples differ in length.
    TooFewRepsError if n < 2.
    """
    xs = as_float_array(xs)
    ys = as_float_array(ys)
    if len(xs) != len(ys):
        raise exceptions.LengthMismatchError(
            strings.ERROR_LENGTH.format(first='xs', second='ys', len_first=len(xs), len_second=len(ys))
        )
    n = len(xs)
    if n < 2:
        raise exceptions.TooFewRepsError(strings.ERROR_TOO_FEW_REPS.format(reps=n))
    dx = xs - xs.mean()
    dy = ys - ys.mean()
    mu4 = float(np.mean(dx ** 2 * dy ** 2))
    eta2 = float(np.sum(dx * dy) / (n - 1))
    sigma2 = float(np.sum(dx ** 2) / (n - 1))
    tau2 = float(np.sum(dy ** 2) / (n - 1))
    return (mu4 - (n - 2) / (n - 1) * eta2 ** 2 + sigma2 * tau2 / (n - 1)) / n


def estimate_a1(reps: int, gamma: float = 1.0, depth: Optional[float] = None,
                grid_n: int = settings.GRID_N_DEFAULT, seed: int = settings.SEED_DEFAULT,
                workers: Optional[int] = None) -> A1Estimate:
    """Estimates A_gamma by the empirical covariance of X and Y over reps replicates.

    Arguments
    ---------
    reps: Number of replicates, >= 2.
    gamma: Scale of the error density at the frontier, the processes have intensity gamma / 2.
        gamma = 1 estimates A1.
    depth: Truncation depth M, defaults to 40 / gamma.
    grid_n: Simpson intervals, even.
    seed: Master seed. Replicate i only depends on (seed, i).
    workers: Worker processes, the result does not depend on it.

    Raises
    ------
    TooFewRepsError if reps < 2.
    DomainError on invalid gamma, depth or grid_n.
    DepthTooShallowError if more than 1% of the draws had to be redrawn.
    """
    if isinstance(reps, bool) or int(reps) != reps or reps < 2:
        raise exceptions.TooFewRepsError(strings.ERROR_TOO_FEW_REPS.format(reps=reps))
    reps = int(reps)
    if not gamma > 0:
        raise exceptions.DomainError(strings.ERROR_GAMMA.format(gamma=gamma))
    if depth is None:
        depth = default_depth(gamma)
    if not depth > 0:
        raise exceptions.DomainError(strings.ERROR_DOMAIN.format(name='depth', condition='> 0', value=depth))
    if grid_n < 2 or grid_n % 2 != 0:
        raise exceptions.DomainError(
            strings.ERROR_DOMAIN.format(name='grid_n', condition='a positive even number', value=grid_n)
        )
    logs.logger.info(f'Estimating A at gamma = {gamma}, depth = {depth} with {reps} replicates, seed {seed}.')
    results = functions.run_replicates(_replicate_values, reps, gamma, depth, grid_n, seed, workers=workers)
    xs = np.array([result[0] for result in results])
    ys = np.array([result[1] for result in results])
    redraws = sum(result[2] for result in results)
    if redraws > settings.MAX_DEGENERATE_RATE * reps:
        raise exceptions.DepthTooShallowError(
            strings.ERROR_DEPTH_TOO_SHALLOW.format(redraws=redraws, reps=reps, rate=settings.MAX_DEGENERATE_RATE,
                                                   depth=depth, gamma=gamma)
        )
    if redraws:
        logs.logger.info(f'{redraws} degenerate draws were redrawn.')
    value = float(np.cov(xs, ys)[0, 1])
    variance = cov_variance(xs, ys)
    return A1Estimate(value=value, std_error=math.sqrt(max(variance, 0.0)), variance=variance, reps=reps,
                      gamma=float(gamma), depth=float(depth), seed=int(seed), grid_n=int(grid_n), redraws=redraws)
