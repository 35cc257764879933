# experiment.py
"""Contains the experiment command"""

import time
from typing import List, Optional

from core import sims
from data import reports
from resources import functions, strings


# --- Commands ---
def command_experiment(spec_path: str, workers: Optional[int] = None) -> List[reports.Report]:
    """Experiment command. Runs every spec of the file, one report per spec."""
    specs = reports.parse_spec_file(spec_path)
    experiment_reports = []
    for spec in specs:
        start_time = time.perf_counter()
        experiment = sims.run_experiment(spec, workers=workers)
        warnings = []
        if experiment.reps_failed:
            warnings.append(strings.WARNING_FAILED_REPS.format(failed=experiment.reps_failed, reps=spec.reps))
        experiment_reports.append(
            reports.Report(
                command='experiment',
                config=spec.to_dict(),
                result=reports.experiment_to_dict(experiment),
                warnings=warnings,
                wall_time=time.perf_counter() - start_time,
            )
        )
    return experiment_reports


# --- Rendering ---
def render_experiment(report: reports.Report) -> str:
    """Human readable report of one experiment"""
    config = report.config
    result = report.result
    truth = config['truth']
    if truth == 'sin':
        truth = f'{config["c"]} * sin({config["alpha"]} * pi * x)'
    elif truth in ('power', 'neg_power'):
        sign = '-' if truth == 'neg_power' else ''
        truth = f'{sign}{config["c"]} * (x - {config["x0"]})^{config["p"]}'
    gamma = f'known ({config["gamma"]})' if config['gamma_mode'] == 'known' else f'estimated, k = {config["k"]}'
    settings_field = (
        f'{strings.BP} n = {config["n"]:,}, h = {config["h"]}, h1 = {config["h1"]}, level = {config["level"]}\n'
        f'{strings.BP} Frontier: {truth}\n'
        f'{strings.BP} Errors: {config["errors"]}, gamma {gamma}\n'
        f'{strings.BP} {config["reps"]:,} replicates, seed {config["seed"]}'
    )
    result_field = (
        f'{strings.BP} phi1 rejection rate: {functions.format_number(result["rejection_rate_phi1"])} '
        f'(+/- {functions.format_number(result["binom_ci_halfwidth_phi1"])})\n'
        f'{strings.BP} phi2 rejection rate: {functions.format_number(result["rejection_rate_phi2"])} '
        f'(+/- {functions.format_number(result["binom_ci_halfwidth"])})\n'
        f'{strings.BP} Replicates done: {result["reps_done"]:,}, failed: {result["reps_failed"]:,}\n'
        f'{strings.BP} Mean T: {functions.format_number(result["mean_T"])}, '
        f'mean gamma: {functions.format_number(result["mean_gamma"])}'
    )
    title = f'{strings.TITLE_EXPERIMENT} {config["label"]}'.strip()
    sections = [title, f'SETTINGS\n{settings_field}', f'RESULT\n{result_field}']
    if report.warnings:
        sections.append('WARNINGS\n' + '\n'.join(f'{strings.BP} {warning}' for warning in report.warnings))
    sections.append(f'Done in {functions.format_wall_time(report.wall_time)}')
    return '\n\n'.join(sections)
