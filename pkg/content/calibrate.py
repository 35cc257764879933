# calibrate.py
"""Contains the calibrate command"""

import time
from typing import Optional

from core import poisson_mc
from data import reports
from resources import functions, settings, strings


# --- Commands ---
def command_calibrate(reps: int, seed: int, gamma: float = 1.0, depth: Optional[float] = None,
                      grid_n: int = settings.GRID_N_DEFAULT, workers: Optional[int] = None) -> reports.Report:
    """Calibrate command. Estimates A_gamma and returns the report."""
    start_time = time.perf_counter()
    estimate = poisson_mc.estimate_a1(reps, gamma=gamma, depth=depth, grid_n=grid_n, seed=seed, workers=workers)
    return reports.Report(
        command='calibrate',
        config={
            'reps': reps,
            'seed': seed,
            'gamma': gamma,
            'depth': estimate.depth,
            'grid_n': grid_n,
            'workers': functions.resolve_workers(workers),
        },
        result=reports.estimate_to_dict(estimate),
        wall_time=time.perf_counter() - start_time,
    )


# --- Rendering ---
def render_calibrate(report: reports.Report) -> str:
    """Human readable calibration report"""
    config = report.config
    result = report.result
    settings_field = (
        f'{strings.BP} {config["reps"]:,} replicates, seed {config["seed"]}\n'
        f'{strings.BP} gamma = {config["gamma"]}, depth = {functions.format_number(config["depth"])}, '
        f'{config["grid_n"]:,} Simpson intervals\n'
        f'{strings.BP} {config["workers"]} workers'
    )
    result_field = (
        f'{strings.BP} Covariance: {functions.format_number(result["value"])} '
        f'(s.e. {functions.format_number(result["std_error"])}, '
        f'variance {functions.format_number(result["variance"])})\n'
        f'{strings.BP} A1 equivalent: {functions.format_number(result["a1_equivalent"])}\n'
        f'{strings.BP} Redrawn degenerate draws: {result["redraws"]:,}'
    )
    return '\n\n'.join([
        strings.TITLE_CALIBRATE,
        f'SETTINGS\n{settings_field}',
        f'RESULT\n{result_field}',
        f'Done in {functions.format_wall_time(report.wall_time)}',
    ])
