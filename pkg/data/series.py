# series.py
"""Reads observed series from delimited text files"""

import csv
from dataclasses import dataclass
import math
from typing import Optional, Tuple

import numpy as np
import pandas as pd

from core import frontier
from resources import exceptions, logs, settings, strings


DELIMITERS = ',;\t'
SNIFF_SIZE = 4096


# Containers
@dataclass(frozen=True)
class SeriesFile():
    """Usable rows of a series file. Labels are strictly increasing.

    skipped_count counts blank rows and rows with a missing label or value.
    """
    path: str
    labels: np.ndarray
    values: np.ndarray
    parsed_count: int
    skipped_count: int
    delimiter: str
    header: Optional[Tuple[str, str]] = None


# Miscellaneous functions
def _parse_number(token: str) -> Optional[float]:
    """Returns the number in token, None if token is not a finite decimal number"""
    try:
        number = float(token)
    except ValueError:
        return None
    return number if math.isfinite(number) else None


def _is_missing(token: str) -> bool:
    return token.strip().lower() in settings.MISSING_TOKENS


def _sniff_delimiter(path: str) -> str:
    """Detects the delimiter among comma, semicolon and tab.

    Raises
    ------
    ParseError if no delimiter can be detected.
    """
    with open(path, 'r', encoding='utf-8', newline='') as series_file:
        sample = series_file.read(SNIFF_SIZE)
    try:
        return csv.Sniffer().sniff(sample, delimiters=DELIMITERS).delimiter
    except csv.Error as error:
        raise exceptions.ParseError(
            strings.ERROR_PARSE.format(row=1, reason=f'no comma, semicolon or tab delimiter found ({error})'), row=1
        ) from error


# Reading
def read_series(path: str) -> SeriesFile:
    """Reads a two column series (label, value). A header row is optional, missing cells are empty or
    one of settings.MISSING_TOKENS. Only the decimal point is accepted.

    Raises
    ------
    OSError if the file can't be read.
    ParseError with the 1-based row number of the first bad row.
    TooFewRowsError if less than settings.MIN_SERIES_ROWS rows are usable.
    """
    delimiter = _sniff_delimiter(path)
    try:
        frame = pd.read_csv(path, sep=delimiter, header=None, dtype=str, keep_default_na=False,
                            skip_blank_lines=False, engine='python', encoding='utf-8')
    except pd.errors.ParserError as error:
        raise exceptions.ParseError(strings.ERROR_PARSE.format(row='?', reason=error)) from error
    except pd.errors.EmptyDataError as error:
        raise exceptions.TooFewRowsError(
            strings.ERROR_TOO_FEW_ROWS.format(minimum=settings.MIN_SERIES_ROWS, count=0, path=path)
        ) from error
    if frame.shape[1] < 2:
        raise exceptions.ParseError(strings.ERROR_PARSE.format(row=1, reason='expected two columns'), row=1)

    header = None
    labels = []
    values = []
    skipped_count = 0
    for index, cells in enumerate(frame.itertuples(index=False, name=None)):
        row = index + 1
        tokens = [cell.strip() if isinstance(cell, str) else '' for cell in cells]
        if any(tokens[2:]):
            raise exceptions.ParseError(
                strings.ERROR_PARSE.format(row=row, reason=f'expected two columns, got {len(tokens)}'), row=row
            )
        label_token, value_token = tokens[0], tokens[1]
        if _is_missing(label_token) or _is_missing(value_token):
            skipped_count += 1
            continue
        label = _parse_number(label_token)
        value = _parse_number(value_token)
        if row == 1 and label is None and value is None:
            header = (label_token, value_token)
            continue
        if label is None or value is None:
            bad_token = label_token if label is None else value_token
            raise exceptions.ParseError(
                strings.ERROR_PARSE.format(row=row, reason=f'{bad_token!r} is not a decimal number'), row=row
            )
        if labels and label <= labels[-1]:
            raise exceptions.ParseError(
                strings.ERROR_PARSE.format(row=row, reason=f'label {label_token} is not larger than the one before'),
                row=row
            )
        labels.append(label)
        values.append(value)

    if len(labels) < settings.MIN_SERIES_ROWS:
        raise exceptions.TooFewRowsError(
            strings.ERROR_TOO_FEW_ROWS.format(minimum=settings.MIN_SERIES_ROWS, count=len(labels), path=path)
        )
    logs.logger.info(f'Read {len(labels)} rows from {path}, skipped {skipped_count}.')
    return SeriesFile(path=path, labels=np.array(labels), values=np.array(values), parsed_count=len(labels),
                      skipped_count=skipped_count, delimiter=delimiter, header=header)


def rescale_labels(labels: np.ndarray, h: float) -> np.ndarray:
    """Maps the labels affinely so that the first becomes -h and the last 1 + h"""
    if not h > 0:
        raise exceptions.DomainError(strings.ERROR_DOMAIN.format(name='h', condition='> 0', value=h))
    first, last = labels[0], labels[-1]
    return -h + (1 + 2 * h) * (labels - first) / (last - first)


def series_sample(series: SeriesFile, h: float) -> frontier.Sample:
    """Returns the sample of a series on the rescaled axis. Points mapped into [0, 1] are statistic eligible.
    Parity is assigned after missing rows were dropped."""
    xs = rescale_labels(series.labels, h)
    return frontier.Sample.from_points(xs, series.values, settings.ELIGIBLE_INTERVAL)


def load_series(path: str, h: float) -> frontier.Sample:
    """Reads a series file and returns its sample at bandwidth h. See read_series for errors."""
    return series_sample(read_series(path), h)
