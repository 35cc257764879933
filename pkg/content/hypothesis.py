# hypothesis.py
"""Contains the test command"""

import time
from typing import Optional

from core import decision
from data import reports, series
from resources import functions, strings


# --- Commands ---
def command_test(data: str, h: float, h1: float, k: int, level: float, gamma: Optional[float] = None,
                 a1: Optional[float] = None, cx: Optional[float] = None) -> reports.Report:
    """Test command. Reads the series, runs both tests and returns the report."""
    start_time = time.perf_counter()
    config_kwargs = dict(h=h, h1=h1, k=k, level=level, gamma=gamma, cx=cx)
    if a1 is not None:
        config_kwargs['a1'] = a1
    config = decision.GofConfig(**config_kwargs)
    series_file = series.read_series(data)
    sample = series.series_sample(series_file, config.h)
    outcome = decision.run_test(sample, config)

    warnings = []
    if series_file.skipped_count:
        warnings.append(strings.WARNING_SKIPPED_ROWS.format(count=series_file.skipped_count))
    warnings.extend(outcome.warnings)
    if outcome.cx_mode == 'auto' and outcome.n_stat != sample.n_points:
        warnings.append(strings.WARNING_CX_NORMALIZER.format(n_stat=outcome.n_stat, n_all=sample.n_points))

    result = reports.outcome_to_dict(outcome)
    result['rows_parsed'] = series_file.parsed_count
    result['rows_skipped'] = series_file.skipped_count
    return reports.Report(
        command='test',
        config={
            'data': data,
            'h': config.h,
            'h1': config.h1,
            'k': config.k,
            'level': config.level,
            'gamma': config.gamma,
            'a1': config.a1,
            'cx': config.cx,
        },
        result=result,
        warnings=warnings,
        wall_time=time.perf_counter() - start_time,
    )


# --- Rendering ---
def _decision_text(reject: bool) -> str:
    return 'reject' if reject else 'accept'


def render_test(report: reports.Report) -> str:
    """Human readable test report"""
    config = report.config
    result = report.result
    gamma_source = 'known' if config['gamma'] is not None else f'estimated with k = {config["k"]}'
    settings_field = (
        f'{strings.BP} Data: {config["data"]} ({result["rows_parsed"]:,} rows, {result["rows_skipped"]:,} skipped)\n'
        f'{strings.BP} h = {config["h"]}, h1 = {config["h1"]}, level = {config["level"]}\n'
        f'{strings.BP} A1 = {config["a1"]}, C_x {result["cx_mode"]}'
    )
    statistic_field = (
        f'{strings.BP} T = {functions.format_number(result["T"])}\n'
        f'{strings.BP} T1 = {functions.format_number(result["breakdown_T1"])}\n'
        f'{strings.BP} gamma = {functions.format_number(result["gamma_used"])} ({gamma_source})\n'
        f'{strings.BP} C_x = {functions.format_number(result["cx"])}\n'
        f'{strings.BP} n = {result["n_formula"]:,} ({result["n_stat"]:,} points in [0, 1])'
    )
    tests_field = (
        f'{strings.BP} phi1: critical value {functions.format_number(result["crit1"])}, '
        f'p = {functions.format_number(result["p1"])}, {_decision_text(result["reject1"])}\n'
        f'{strings.BP} phi2: critical value {functions.format_number(result["crit2"])}, '
        f'p = {functions.format_number(result["p2"])}, {_decision_text(result["reject2"])}'
    )
    sections = [
        strings.TITLE_TEST,
        f'SETTINGS\n{settings_field}',
        f'STATISTIC\n{statistic_field}',
        f'TESTS\n{tests_field}',
    ]
    if report.warnings:
        sections.append('WARNINGS\n' + '\n'.join(f'{strings.BP} {warning}' for warning in report.warnings))
    sections.append(f'Done in {functions.format_wall_time(report.wall_time)}')
    return '\n\n'.join(sections)
