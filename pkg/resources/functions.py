# functions.py
"""Shared helpers: seeding, parallel replicate runs and number formatting"""

from typing import Any, Callable, List, Optional, Sequence

from humanfriendly import format_timespan
from joblib import Parallel, delayed
import numpy as np

from resources import settings


# --- Random numbers ---
def replicate_rng(seed: int, replicate: int, attempt: int = 0) -> np.random.Generator:
    """Returns the generator of one replicate.
    The stream only depends on (seed, replicate, attempt), never on the worker that runs it.
    """
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(replicate, attempt)))


# --- Parallel runs ---
def resolve_workers(workers: Optional[int]) -> int:
    """Returns the worker count to use. None or values < 1 fall back to the configured default."""
    if workers is None or workers < 1:
        return settings.WORKERS_DEFAULT
    return workers


def run_replicates(function: Callable[..., Any], reps: int, *args: Any,
                   workers: Optional[int] = None) -> List[Any]:
    """Runs function(*args, replicate) for replicate = 0..reps-1 and returns the results in replicate order.

    Arguments
    ---------
    function: Module level function, it has to be picklable for worker processes.
    reps: Number of replicates.
    args: Leading arguments passed to every call.
    workers: Number of worker processes. 1 runs everything in this process.

    Returns
    -------
    List with one result per replicate, index i belongs to replicate i.
    """
    workers = resolve_workers(workers)
    if workers == 1:
        return [function(*args, replicate) for replicate in range(reps)]
    return Parallel(n_jobs=workers)(delayed(function)(*args, replicate) for replicate in range(reps))


# --- Formatting ---
def format_number(value: Any) -> str:
    """Formats numbers for human readable reports"""
    if value is None:
        return 'N/A'
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, (int, np.integer)):
        return f'{value:,}'
    if isinstance(value, (float, np.floating)):
        if value != 0 and (abs(value) < 1e-3 or abs(value) >= 1e5):
            return f'{value:.4g}'
        return f'{value:.4f}'
    return str(value)


def format_wall_time(seconds: float) -> str:
    """Formats a wall time in seconds"""
    return format_timespan(seconds)


def as_float_array(values: Sequence[float]) -> np.ndarray:
    """Returns a 1d float copy of values"""
    return np.array(values, dtype=float).reshape(-1)
