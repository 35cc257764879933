#exceptions.py
"""Contains custom exceptions"""

from typing import Optional


class GofError(Exception):
    """Base class for all errors of the goodness-of-fit pipeline.
    stage is set by decision.run_test to the name of the stage that failed."""
    stage: Optional[str] = None


# --- Frontier ---
class FrontierError(GofError, ValueError):
    """Custom exception for when the frontier can't be fitted at an abscissa"""
    def __init__(self, message: str, x: Optional[float] = None):
        super().__init__(message)
        self.x = x


class EmptyWindowError(FrontierError):
    """Custom exception for when no estimation point lies inside the bandwidth window"""
    pass


class EmptySideError(FrontierError):
    """Custom exception for when the window has points on one side of x only (missing buffer observations)"""
    pass


# --- Tail ---
class ZeroDenominatorError(GofError, ValueError):
    """Custom exception for when the two order statistics of the scale estimator coincide"""
    pass


class BadKError(GofError, ValueError):
    """Custom exception for when the order statistic depth k is out of range"""
    pass


# --- Statistic ---
class DegenerateDesignError(GofError, ValueError):
    """Custom exception for when the statistic abscissae have zero spread"""
    pass


class EmptyDesignError(GofError, ValueError):
    """Custom exception for when there are no design points"""
    pass


# --- Decision ---
class DomainError(GofError, ValueError):
    """Custom exception for when an input lies outside its domain"""
    pass


# --- Poisson Monte Carlo ---
class DegenerateDrawError(GofError):
    """Custom exception for when a simulated even process leaves a window side empty"""
    pass


class TooFewRepsError(GofError, ValueError):
    """Custom exception for when a Monte Carlo run has less than two replicates"""
    pass


class DepthTooShallowError(GofError):
    """Custom exception for when too many draws had to be redrawn"""
    pass


class LengthMismatchError(GofError, ValueError):
    """Custom exception for when paired samples have different lengths"""
    pass


# --- Experiments and input files ---
class InvalidSpecError(GofError, ValueError):
    """Custom exception for when an experiment spec is not valid"""
    pass


class ParseError(GofError, ValueError):
    """Custom exception for when a row of an input file can't be read"""
    def __init__(self, message: str, row: Optional[int] = None):
        super().__init__(message)
        self.row = row


class TooFewRowsError(GofError, ValueError):
    """Custom exception for when an input file has not enough usable rows"""
    pass
