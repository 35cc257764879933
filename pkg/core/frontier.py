# frontier.py
"""Boundary estimator for regression with one-sided errors.

At every abscissa x the estimate is the minimal intercept p0 of a line p0 + p1 * (t - x) that lies
on or above all estimation points with |t - x| < h. That is the least concave majorant of the
windowed points evaluated at x, so the fit builds the upper hull of each window and reads it off.
Abscissae that share a window share one hull.
"""

from dataclasses import dataclass
import math
from typing import Optional, Sequence, Tuple

import numpy as np

from resources import exceptions, logs, settings, strings
from resources.functions import as_float_array


# Containers
@dataclass(frozen=True)
class Sample():
    """Design points with responses, sorted by x.

    Parity follows the 1-based position in this order: odd positions build the statistic,
    even positions estimate the frontier. eligible marks the points inside the statistic
    interval, the others are buffer observations used by the frontier fit only.
    """
    xs: np.ndarray
    ys: np.ndarray
    eligible: np.ndarray
    merged_count: int = 0
    dropped_last: bool = False
    dropped_x: Optional[float] = None

    @classmethod
    def from_points(cls, xs: Sequence[float], ys: Sequence[float],
                    eligible_interval: Optional[Tuple[float, float]] = None,
                    make_even: bool = True) -> 'Sample':
        """Creates a canonical sample.

        Arguments
        ---------
        xs, ys: Abscissae and responses in any order.
        eligible_interval: Closed interval of statistic eligible abscissae. None makes every point eligible.
        make_even: Drop the last point if the point count is odd.

        Raises
        ------
        LengthMismatchError if xs and ys differ in length.
        EmptyDesignError if there are no points.
        DomainError if a value is not finite.
        """
        xs = as_float_array(xs)
        ys = as_float_array(ys)
        if len(xs) != len(ys):
            raise exceptions.LengthMismatchError(
                strings.ERROR_LENGTH.format(first='xs', second='ys', len_first=len(xs), len_second=len(ys))
            )
        if len(xs) == 0:
            raise exceptions.EmptyDesignError(strings.ERROR_EMPTY_DESIGN)
        if not (np.all(np.isfinite(xs)) and np.all(np.isfinite(ys))):
            raise exceptions.DomainError(
                strings.ERROR_DOMAIN.format(name='Sample values', condition='finite', value='a non-finite value')
            )
        xs, ys, merged_count = canonical_points(xs, ys)
        dropped_last = False
        dropped_x = None
        if make_even and len(xs) % 2 == 1 and len(xs) > 1:
            dropped_last = True
            dropped_x = float(xs[-1])
            xs, ys = xs[:-1], ys[:-1]
            logs.logger.info(strings.WARNING_DROPPED_LAST.format(x=dropped_x))
        if eligible_interval is None:
            eligible = np.ones(len(xs), dtype=bool)
        else:
            lower, upper = eligible_interval
            tolerance = settings.ELIGIBILITY_TOLERANCE
            eligible = (xs >= lower - tolerance) & (xs <= upper + tolerance)
        for array in (xs, ys, eligible):
            array.setflags(write=False)
        return cls(xs=xs, ys=ys, eligible=eligible, merged_count=merged_count,
                   dropped_last=dropped_last, dropped_x=dropped_x)

    @property
    def n_points(self) -> int:
        """Total number of points, buffer included"""
        return len(self.xs)

    @property
    def n_stat(self) -> int:
        """Number of statistic eligible points, both parities"""
        return int(np.count_nonzero(self.eligible))

    @property
    def odd_mask(self) -> np.ndarray:
        """Points with odd 1-based index"""
        return np.arange(self.n_points) % 2 == 0

    @property
    def even_mask(self) -> np.ndarray:
        """Points with even 1-based index"""
        return np.arange(self.n_points) % 2 == 1

    def estimation_points(self) -> Tuple[np.ndarray, np.ndarray]:
        """Returns all even-indexed points, buffer included"""
        mask = self.even_mask
        return self.xs[mask], self.ys[mask]

    def statistic_points(self) -> Tuple[np.ndarray, np.ndarray]:
        """Returns the odd-indexed eligible points"""
        mask = self.odd_mask & self.eligible
        return self.xs[mask], self.ys[mask]

    def residual_points(self) -> Tuple[np.ndarray, np.ndarray]:
        """Returns the even-indexed eligible points"""
        mask = self.even_mask & self.eligible
        return self.xs[mask], self.ys[mask]


@dataclass(frozen=True)
class FrontierFit():
    """Frontier estimate at a list of abscissae.

    support_pairs[i] holds the indices (into the estimation points) of the hull vertices left and
    right of eval_x[i]. Both entries are equal if a single point sits at eval_x[i].
    window_counts[i] holds the number of window points strictly left and strictly right of eval_x[i].
    """
    eval_x: np.ndarray
    values: np.ndarray
    slopes: np.ndarray
    support_pairs: np.ndarray
    window_counts: np.ndarray

    def __len__(self) -> int:
        return len(self.values)


# Miscellaneous functions
def canonical_points(xs: np.ndarray, ys: np.ndarray) -> Tuple[np.ndarray, np.ndarray, int]:
    """Sorts points by x and merges equal abscissae keeping the maximal y.
    Lower duplicates are never active constraints of the majorant.

    Returns
    -------
    Tuple (xs, ys, merged_count)
    """
    order = np.lexsort((-ys, xs))
    xs = xs[order]
    ys = ys[order]
    unique_xs, first = np.unique(xs, return_index=True)
    merged_count = len(xs) - len(unique_xs)
    if merged_count:
        logs.logger.debug(strings.WARNING_MERGED.format(count=merged_count))
    return unique_xs, ys[first], merged_count


def _upper_hull(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Returns the indices of the upper hull vertices of points sorted by strictly increasing x.
    Collinear middle points are dropped."""
    x_list = xs.tolist()
    y_list = ys.tolist()
    hull = []
    for index, (x, y) in enumerate(zip(x_list, y_list)):
        while len(hull) >= 2:
            origin, last = hull[-2], hull[-1]
            cross = ((x_list[last] - x_list[origin]) * (y - y_list[origin])
                     - (y_list[last] - y_list[origin]) * (x - x_list[origin]))
            if cross < 0:
                break
            hull.pop()
        hull.append(index)
    return np.asarray(hull, dtype=np.intp)


def _evaluate_hull(hull_x: np.ndarray, hull_y: np.ndarray,
                   eval_x: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Evaluates a concave polygon at abscissae inside its x range.

    Returns
    -------
    Tuple (values, slopes, left vertex positions, right vertex positions). The slope is the one of the
    hull segment through x, at a vertex the segment to its right (left for the last vertex).
    """
    last = len(hull_x) - 1
    if last == 0:
        zeros = np.zeros(len(eval_x), dtype=np.intp)
        return np.full(len(eval_x), hull_y[0]), np.zeros(len(eval_x)), zeros, zeros
    left = np.clip(np.searchsorted(hull_x, eval_x, side='right') - 1, 0, last)
    at_vertex = hull_x[left] == eval_x
    right = np.where(at_vertex, left, np.minimum(left + 1, last))
    span = np.where(right == left, 1.0, hull_x[right] - hull_x[left])
    interpolated = hull_y[left] + (hull_y[right] - hull_y[left]) * ((eval_x - hull_x[left]) / span)
    values = np.where(at_vertex, hull_y[left], interpolated)
    segment_slopes = np.diff(hull_y) / np.diff(hull_x)
    segment = np.minimum(left, last - 1)
    return values, segment_slopes[segment], left, right


# Fitting
def fit_points_grid(xs: np.ndarray, ys: np.ndarray, eval_x: Sequence[float], h: float) -> FrontierFit:
    """Fits the frontier of raw estimation points at several abscissae.

    Arguments
    ---------
    xs, ys: Estimation points, xs strictly increasing (see canonical_points).
    eval_x: Abscissae, ascending order makes the window sweep share hulls.
    h: Bandwidth > 0. The window |x - x_i| < h is open.

    Returns
    -------
    FrontierFit

    Raises
    ------
    DomainError if h <= 0.
    EmptyWindowError if no point lies in the window of some abscissa.
    EmptySideError if the window of some abscissa has no point at x and none on one side of it.
    Both carry the first failing abscissa.
    """
    if not h > 0:
        raise exceptions.DomainError(strings.ERROR_DOMAIN.format(name='h', condition='> 0', value=h))
    eval_x = as_float_array(eval_x)
    # Points within WINDOW_TOLERANCE * h of a window end lie on it and are left out
    eps = settings.WINDOW_TOLERANCE * h
    lo = np.searchsorted(xs, eval_x - h + eps, side='right')
    hi = np.searchsorted(xs, eval_x + h - eps, side='left')
    below = np.searchsorted(xs, eval_x, side='left')
    above = np.searchsorted(xs, eval_x, side='right')
    left_counts = below - lo
    right_counts = hi - above
    at_x = above - below

    empty = hi <= lo
    if np.any(empty):
        x = float(eval_x[np.argmax(empty)])
        raise exceptions.EmptyWindowError(
            strings.ERROR_FIT_GRID.format(x=x, error=strings.ERROR_EMPTY_WINDOW.format(x=x, h=h)), x=x
        )
    one_sided = (left_counts + at_x == 0) | (right_counts + at_x == 0)
    if np.any(one_sided):
        index = int(np.argmax(one_sided))
        x = float(eval_x[index])
        side = 'left' if left_counts[index] + at_x[index] == 0 else 'right'
        raise exceptions.EmptySideError(
            strings.ERROR_FIT_GRID.format(x=x, error=strings.ERROR_EMPTY_SIDE.format(side=side, x=x, h=h)), x=x
        )

    count = len(eval_x)
    values = np.empty(count)
    slopes = np.empty(count)
    support_pairs = np.empty((count, 2), dtype=np.intp)
    breaks = np.flatnonzero((np.diff(lo) != 0) | (np.diff(hi) != 0)) + 1
    starts = np.concatenate(([0], breaks))
    ends = np.concatenate((breaks, [count]))
    for start, end in zip(starts.tolist(), ends.tolist()):
        first, stop = int(lo[start]), int(hi[start])
        hull = _upper_hull(xs[first:stop], ys[first:stop]) + first
        group_values, group_slopes, left, right = _evaluate_hull(xs[hull], ys[hull], eval_x[start:end])
        values[start:end] = group_values
        slopes[start:end] = group_slopes
        support_pairs[start:end, 0] = hull[left]
        support_pairs[start:end, 1] = hull[right]
    logs.logger.debug(f'Frontier fit at {count} abscissae with {len(starts)} distinct windows, h = {h}.')

    window_counts = np.column_stack((left_counts, right_counts))
    for array in (eval_x, values, slopes, support_pairs, window_counts):
        array.setflags(write=False)
    return FrontierFit(eval_x=eval_x, values=values, slopes=slopes, support_pairs=support_pairs,
                       window_counts=window_counts)


def fit_points(xs: np.ndarray, ys: np.ndarray, x: float, h: float) -> float:
    """Fits the frontier of raw estimation points at a single abscissa. See fit_points_grid."""
    return float(fit_points_grid(xs, ys, [x], h).values[0])


def fit_at(sample: Sample, x: float, h: float) -> float:
    """Returns the frontier estimate at x from the even-indexed points of sample.

    Raises
    ------
    EmptyWindowError, EmptySideError, DomainError as fit_points_grid.
    """
    xs, ys = sample.estimation_points()
    return fit_points(xs, ys, x, h)


def fit_grid(sample: Sample, xs: Sequence[float], h: float) -> FrontierFit:
    """Returns the frontier estimate at all abscissae in xs from the even-indexed points of sample.
    Every value equals fit_at at the same abscissa bit for bit."""
    estimation_xs, estimation_ys = sample.estimation_points()
    return fit_points_grid(estimation_xs, estimation_ys, xs, h)


def residuals_even(sample: Sample, h1: float) -> np.ndarray:
    """Returns Y - g(x) for the even-indexed eligible points in x order, g fitted at bandwidth h1.
    Each point lies inside its own window, so every residual is <= 0 and some are 0."""
    xs, ys = sample.residual_points()
    fit = fit_grid(sample, xs, h1)
    return ys - fit.values


# Diagnostics
def cell_maxima(xs: Sequence[float], errors: Sequence[float], a: float, b: float, h: float) -> np.ndarray:
    """Returns the maxima Z_j of errors over the half-bandwidth cells (a + (j-1)h/2, a + jh/2],
    j = 0..2*ceil((b-a)/h)+1. Empty cells give -inf.

    For an affine frontier and 0 <= a < b <= 1 the fit error on (a, b] is bounded by max_j |Z_j|.
    """
    xs = as_float_array(xs)
    errors = as_float_array(errors)
    cells = 2 * math.ceil((b - a) / h) + 2
    maxima = np.full(cells, -np.inf)
    for j in range(cells):
        inside = (xs > a + (j - 1) * h / 2) & (xs <= a + j * h / 2)
        if np.any(inside):
            maxima[j] = errors[inside].max()
    return maxima
