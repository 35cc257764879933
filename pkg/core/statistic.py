# statistic.py
"""Test statistics: distance of the frontier estimate to the affine functions and its bias corrected form"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from core import frontier
from resources import exceptions, logs, settings, strings
from resources.functions import as_float_array


Affine = Tuple[float, float] # (slope, intercept)


# Containers
@dataclass(frozen=True)
class DesignSums():
    """Sums over the statistic abscissae. denom = R*m - S^2."""
    R: float
    S: float
    m: int
    denom: float


@dataclass(frozen=True)
class StatBreakdown():
    """Bias corrected statistic T together with its parts.

    S1, S2 and S3 are the three terms of the alternative form relative to the affine least squares fit
    of the frontier values (reference), so T = S1 - S2 - S3. S1 = S1_prime + (2/gamma_used) * S1_second.
    K and L are the sums of (g - f) and (g - f) * x over the statistic points.
    """
    T: float
    T1: float
    S1: float
    S2: float
    S3: float
    S1_prime: float
    S1_second: float
    K: float
    L: float
    gamma_used: float
    sum_sq: float
    correction_count: int
    m: int
    reference: Affine


# Sums
def design_sums(odd_xs: Sequence[float]) -> DesignSums:
    """Returns R = sum x^2, S = sum x and denom = R*m - S^2 over the statistic abscissae.

    Raises
    ------
    EmptyDesignError if odd_xs is empty.
    DegenerateDesignError if denom <= 0.
    """
    odd_xs = as_float_array(odd_xs)
    m = len(odd_xs)
    if m == 0:
        raise exceptions.EmptyDesignError(strings.ERROR_EMPTY_DESIGN)
    R = float(np.sum(odd_xs ** 2))
    S = float(np.sum(odd_xs))
    denom = R * m - S ** 2
    if not denom > 0:
        raise exceptions.DegenerateDesignError(strings.ERROR_DEGENERATE_DESIGN.format(denom=denom))
    return DesignSums(R=R, S=S, m=m, denom=denom)


def _affine_values(f: Affine, xs: np.ndarray) -> np.ndarray:
    slope, intercept = f
    return slope * xs + intercept


# Statistics
def t1(ghat_odd: Sequence[float], odd_xs: Sequence[float], f: Affine = (0.0, 0.0)) -> float:
    """Returns the squared discrete L2 distance of the frontier values to the affine functions,
    written relative to an arbitrary affine f. The value does not depend on f.

    Raises
    ------
    LengthMismatchError if the lists differ in length.
    DegenerateDesignError if the abscissae have no spread.
    """
    ghat_odd = as_float_array(ghat_odd)
    odd_xs = as_float_array(odd_xs)
    if len(ghat_odd) != len(odd_xs):
        raise exceptions.LengthMismatchError(
            strings.ERROR_LENGTH.format(first='ghat_odd', second='odd_xs',
                                        len_first=len(ghat_odd), len_second=len(odd_xs))
        )
    sums = design_sums(odd_xs)
    deviation = ghat_odd - _affine_values(f, odd_xs)
    centered_x = odd_xs - sums.S / sums.m
    return float(
        np.sum(deviation ** 2)
        - np.sum(deviation) ** 2 / sums.m
        - sums.m * np.sum(deviation * centered_x) ** 2 / sums.denom
    )


def _statistic_inputs(sample: frontier.Sample, h: float,
                      gamma_prime: float) -> Tuple[np.ndarray, np.ndarray, np.ndarray, DesignSums]:
    """Returns statistic abscissae, responses, frontier values there and the design sums"""
    if not gamma_prime > 0:
        raise exceptions.DomainError(strings.ERROR_GAMMA.format(gamma=gamma_prime))
    odd_xs, odd_ys = sample.statistic_points()
    sums = design_sums(odd_xs)
    ghat = frontier.fit_grid(sample, odd_xs, h).values
    return odd_xs, odd_ys, ghat, sums


def _tf_terms(odd_xs: np.ndarray, odd_ys: np.ndarray, ghat: np.ndarray, sums: DesignSums,
              gamma_prime: float, f: Affine) -> Tuple[float, float, float]:
    """Returns the three terms of T_f: the exceedance corrected squared distance, the centering term
    and the slope projection term."""
    exceed = (odd_ys >= ghat).astype(float)
    fx = _affine_values(f, odd_xs)
    corrected = ghat + exceed / gamma_prime - fx
    centered_x = odd_xs - sums.S / sums.m
    first = float(np.sum((ghat - fx) ** 2) + (2 / gamma_prime) * np.sum((odd_ys - fx) * exceed))
    second = float(np.sum(corrected) ** 2 / sums.m)
    third = float(sums.m * np.sum(corrected * centered_x) ** 2 / sums.denom)
    return first, second, third


def t_statistic(sample: frontier.Sample, h: float, gamma_prime: float) -> StatBreakdown:
    """Computes the bias corrected statistic T with its breakdown.

    The frontier is fitted at the odd eligible abscissae from the even points at bandwidth h.
    Exceedances 1{Y >= g(x)} are inclusive.

    Raises
    ------
    DomainError if gamma_prime <= 0.
    Frontier errors and DegenerateDesignError.
    """
    odd_xs, odd_ys, ghat, sums = _statistic_inputs(sample, h, gamma_prime)
    m = sums.m
    exceed = (odd_ys >= ghat).astype(float)
    centered_x = odd_xs - sums.S / m
    T = float(
        np.sum(ghat ** 2) + (2 / gamma_prime) * np.sum(odd_ys * exceed)
        - (2 / (2 * m)) * (np.sum(ghat) + np.sum(exceed) / gamma_prime) ** 2
        - m * np.sum((ghat + exceed / gamma_prime) * centered_x) ** 2 / sums.denom
    )

    slope, intercept = np.polyfit(odd_xs, ghat, 1)
    reference = (float(slope), float(intercept))
    S1, S2, S3 = _tf_terms(odd_xs, odd_ys, ghat, sums, gamma_prime, reference)
    fx = _affine_values(reference, odd_xs)
    breakdown = StatBreakdown(
        T=T,
        T1=t1(ghat, odd_xs),
        S1=S1,
        S2=S2,
        S3=S3,
        S1_prime=float(np.sum((ghat - fx) ** 2)),
        S1_second=float(np.sum((odd_ys - fx) * exceed)),
        K=float(np.sum(ghat - fx)),
        L=float(np.sum((ghat - fx) * odd_xs)),
        gamma_used=float(gamma_prime),
        sum_sq=float(np.sum(ghat ** 2)),
        correction_count=int(np.count_nonzero(exceed)),
        m=m,
        reference=reference,
    )
    logs.logger.debug(f'Statistic T = {T} from m = {m} points, h = {h}, gamma = {gamma_prime}.')
    return breakdown


def t_f(sample: frontier.Sample, h: float, gamma_prime: float, f: Affine) -> float:
    """Computes T in its alternative form relative to f. For affine f this equals T exactly
    in exact arithmetic; other functions are outside that identity and are not accepted here."""
    odd_xs, odd_ys, ghat, sums = _statistic_inputs(sample, h, gamma_prime)
    first, second, third = _tf_terms(odd_xs, odd_ys, ghat, sums, gamma_prime, f)
    return first - second - third


# Design regularity
def _window_counts(all_xs: Sequence[float], h: float) -> np.ndarray:
    """Returns #{x_i in [t, t + h/2)} at every event and between consecutive events of the
    piecewise constant count function on the open range (-h, 1 + h/2).

    Events and window ends within WINDOW_TOLERANCE * h of each other or of a point are taken as equal,
    so shifted abscissae of an equidistant design meet their neighbours exactly.
    """
    xs = np.sort(as_float_array(all_xs))
    if len(xs) == 0:
        raise exceptions.EmptyDesignError(strings.ERROR_EMPTY_DESIGN)
    if not h > 0:
        raise exceptions.DomainError(strings.ERROR_DOMAIN.format(name='h', condition='> 0', value=h))
    eps = settings.WINDOW_TOLERANCE * h
    lower, upper = -h, 1 + h / 2
    events = np.sort(np.concatenate((xs, xs - h / 2)))
    events = events[(events > lower + eps) & (events < upper - eps)]
    if len(events):
        # One event per cluster of near-equal values
        events = events[np.concatenate(([True], np.diff(events) > eps))]
    bounds = np.concatenate(([lower], events, [upper]))
    midpoints = (bounds[:-1] + bounds[1:]) / 2
    starts = np.concatenate((events, midpoints))
    return (np.searchsorted(xs, starts + h / 2 - eps, side='left')
            - np.searchsorted(xs, starts - eps, side='left'))


def eligible_count(all_xs: Sequence[float]) -> int:
    """Returns the number of abscissae inside the statistic interval"""
    xs = as_float_array(all_xs)
    lower, upper = settings.ELIGIBLE_INTERVAL
    tolerance = settings.ELIGIBILITY_TOLERANCE
    return int(np.count_nonzero((xs >= lower - tolerance) & (xs <= upper + tolerance)))


def c_x(all_xs: Sequence[float], h: float, n_stat: Optional[int] = None) -> float:
    """Returns the design regularity constant: the smallest number of design points in a
    half-bandwidth window [t, t + h/2), t in (-h, 1 + h/2), divided by n*h.

    Arguments
    ---------
    all_xs: All design points, buffer included.
    h: Bandwidth.
    n_stat: Normalizing count, defaults to the number of points inside [0, 1].

    Raises
    ------
    EmptyDesignError if there are no design points or none inside [0, 1].
    """
    if n_stat is None:
        n_stat = eligible_count(all_xs)
    if n_stat < 1:
        raise exceptions.EmptyDesignError(strings.ERROR_EMPTY_DESIGN)
    counts = _window_counts(all_xs, h)
    return float(counts.min() / (n_stat * h))


def design_regularity(all_xs: Sequence[float], h: float) -> float:
    """Returns max / min of the half-bandwidth window counts; inf if some window is empty"""
    counts = _window_counts(all_xs, h)
    if counts.min() == 0:
        return float('inf')
    return float(counts.max() / counts.min())
