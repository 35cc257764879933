# tail.py
"""Scale estimation for the upper tail of the error distribution"""

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from resources import exceptions, logs, strings
from resources.functions import as_float_array


# Containers
@dataclass(frozen=True)
class TailEstimate():
    """Scale estimate gamma_hat = (2k/n) / denominator with n = 2m residuals in the full split."""
    gamma_hat: float
    k: int
    denominator: float
    m: int


# Estimation
def neg_hill(residuals: Sequence[float], k: int) -> TailEstimate:
    """Estimates gamma from the gap between the top residual order statistic and the one k places below.

    Arguments
    ---------
    residuals: Residuals of the estimation half of the sample, m = len(residuals) = n/2.
    k: Order statistic depth, 1 <= k < m.

    Returns
    -------
    TailEstimate

    Raises
    ------
    BadKError if k is out of range.
    ZeroDenominatorError if both order statistics coincide.
    """
    residuals = np.sort(as_float_array(residuals), kind='stable')
    m = len(residuals)
    if isinstance(k, bool) or int(k) != k or not 1 <= k < m:
        raise exceptions.BadKError(strings.ERROR_BAD_K.format(m=m, k=k))
    k = int(k)
    denominator = float(residuals[m - 1] - residuals[m - 1 - k])
    if not denominator > 0:
        raise exceptions.ZeroDenominatorError(
            strings.ERROR_ZERO_DENOMINATOR.format(k=k, value=float(residuals[m - 1]))
        )
    n = 2 * m
    gamma_hat = (2 * k / n) / denominator
    logs.logger.debug(f'Scale estimate gamma_hat = {gamma_hat} from m = {m} residuals, k = {k}.')
    return TailEstimate(gamma_hat=gamma_hat, k=k, denominator=denominator, m=m)


def resolve_gamma(config_gamma: Optional[float], residuals: Optional[Sequence[float]], k: int) -> float:
    """Returns the known gamma if given, otherwise the estimate from the residuals.

    Raises
    ------
    DomainError if config_gamma is given but not > 0.
    Errors of neg_hill otherwise.
    """
    if config_gamma is not None:
        if not config_gamma > 0:
            raise exceptions.DomainError(strings.ERROR_GAMMA.format(gamma=config_gamma))
        return float(config_gamma)
    return neg_hill(residuals, k).gamma_hat
