# errors.py
"""Writes errors to the logfile"""

from datetime import datetime, timezone
import traceback
from typing import Optional, Union

from resources import logs


def format_error(error: Union[Exception, str]) -> str:
    """Returns the error message followed by the failed stage, the exception type and the traceback.
    Strings are returned as they are."""
    if isinstance(error, str):
        return error
    sections = [str(error) or error.__class__.__name__]
    stage = getattr(error, 'stage', None)
    if stage is not None:
        sections.append(f'Stage:\n{stage}')
    sections.append(f'Exception type:\n{error.__class__.__module__}.{error.__class__.__qualname__}')
    if error.__traceback__ is not None:
        sections.append('Traceback:\n' + ''.join(traceback.format_tb(error.__traceback__)))
    else:
        sections.append('Traceback:\nN/A')
    return '\n\n'.join(sections)


def log_error(error: Union[Exception, str], command: Optional[str] = None) -> str:
    """Logs an error to the logfile

    Arguments
    ---------
    error: Exception or a simple string.
    command: Command line that was running, "N/A" if unknown.

    Returns
    -------
    The logged message.
    """
    date_time = datetime.now(timezone.utc)
    error_message = format_error(error)
    logs.logger.error(f'Time: {date_time}. Command: {command or "N/A"}. Error: {error_message}')
    return error_message
