# reports.py
"""Command reports: containers, flat JSON serialization and experiment spec files"""

from dataclasses import asdict, dataclass, field
import json
import math
from typing import Any, Dict, List, Optional

from core import decision, poisson_mc, sims
from resources import exceptions, settings, strings


CONFIG_PREFIX = 'config_'
RESULT_PREFIX = 'result_'
TOP_LEVEL_KEYS = ('schema_version', 'command', 'warnings', 'wall_time')


# Containers
@dataclass
class Report():
    """Result of one command run. config and result only hold JSON values (numbers, strings, booleans, None)."""
    command: str
    config: Dict[str, Any] = field(default_factory=dict)
    result: Dict[str, Any] = field(default_factory=dict)
    warnings: List[str] = field(default_factory=list)
    wall_time: float = 0.0
    schema_version: int = settings.SCHEMA_VERSION

    def to_dict(self) -> Dict[str, Any]:
        """Returns the flat object with snake_case keys"""
        flat = {
            'schema_version': self.schema_version,
            'command': self.command,
            'warnings': list(self.warnings),
            'wall_time': self.wall_time,
        }
        flat.update({f'{CONFIG_PREFIX}{key}': value for key, value in self.config.items()})
        flat.update({f'{RESULT_PREFIX}{key}': value for key, value in self.result.items()})
        return flat

    @classmethod
    def from_dict(cls, flat: Dict[str, Any]) -> 'Report':
        """Inverse of to_dict.

        Raises
        ------
        ParseError on missing or unknown keys.
        """
        missing = [key for key in TOP_LEVEL_KEYS if key not in flat]
        if missing:
            raise exceptions.ParseError(strings.ERROR_PARSE.format(row=1, reason=f'missing keys {missing}'), row=1)
        config = {}
        result = {}
        for key, value in flat.items():
            if key in TOP_LEVEL_KEYS:
                continue
            if key.startswith(CONFIG_PREFIX):
                config[key[len(CONFIG_PREFIX):]] = value
            elif key.startswith(RESULT_PREFIX):
                result[key[len(RESULT_PREFIX):]] = value
            else:
                raise exceptions.ParseError(strings.ERROR_PARSE.format(row=1, reason=f'unknown key {key}'), row=1)
        return cls(command=flat['command'], config=config, result=result, warnings=list(flat['warnings']),
                   wall_time=flat['wall_time'], schema_version=flat['schema_version'])

    def to_json(self) -> str:
        """Returns standard JSON, undefined numbers are null"""
        return json.dumps(self.to_dict(), allow_nan=False)

    @classmethod
    def from_json(cls, text: str) -> 'Report':
        try:
            flat = json.loads(text)
        except json.JSONDecodeError as error:
            raise exceptions.ParseError(strings.ERROR_PARSE.format(row=error.lineno, reason=error.msg),
                                        row=error.lineno) from error
        if not isinstance(flat, dict):
            raise exceptions.ParseError(strings.ERROR_PARSE.format(row=1, reason='expected a JSON object'), row=1)
        return cls.from_dict(flat)


# Result conversion
def outcome_to_dict(outcome: decision.GofOutcome) -> Dict[str, Any]:
    """Returns the flat result of a test run"""
    result = {
        'T': outcome.T,
        'gamma_used': outcome.gamma_used,
        'cx': outcome.cx,
        'crit1': outcome.crit1,
        'crit2': outcome.crit2,
        'reject1': outcome.reject1,
        'reject2': outcome.reject2,
        'p1': outcome.p1,
        'p2': outcome.p2,
        'n_stat': outcome.n_stat,
        'n_formula': outcome.n_formula,
        'cx_mode': outcome.cx_mode,
        'regularity': outcome.regularity if math.isfinite(outcome.regularity) else None,
    }
    breakdown = asdict(outcome.breakdown)
    slope, intercept = breakdown.pop('reference')
    breakdown['reference_slope'] = slope
    breakdown['reference_intercept'] = intercept
    result.update({f'breakdown_{key}': value for key, value in breakdown.items()})
    if outcome.gamma_estimate is not None:
        result['gamma_k'] = outcome.gamma_estimate.k
        result['gamma_denominator'] = outcome.gamma_estimate.denominator
        result['gamma_residuals'] = outcome.gamma_estimate.m
    return result


def estimate_to_dict(estimate: poisson_mc.A1Estimate) -> Dict[str, Any]:
    """Returns the flat result of a calibration run"""
    result = asdict(estimate)
    result['a1_equivalent'] = estimate.a1_equivalent
    return result


def experiment_to_dict(report: sims.ExperimentReport) -> Dict[str, Any]:
    """Returns the flat result of an experiment. The spec belongs into the report config."""
    result = asdict(report)
    result.pop('spec')
    return result


# Spec files
def parse_spec_text(text: str) -> List[Dict[str, Any]]:
    """Parses experiment specs.

    Accepted are a JSON object, a JSON list of objects or blocks of key = value lines separated by
    blank lines. Lines starting with # are comments.

    Raises
    ------
    ParseError with the row of a malformed line.
    InvalidSpecError if there is no spec.
    """
    stripped = text.strip()
    if stripped.startswith('{') or stripped.startswith('['):
        try:
            parsed = json.loads(stripped)
        except json.JSONDecodeError as error:
            raise exceptions.ParseError(strings.ERROR_PARSE.format(row=error.lineno, reason=error.msg),
                                        row=error.lineno) from error
        specs = [parsed] if isinstance(parsed, dict) else parsed
        if not isinstance(specs, list) or not all(isinstance(spec, dict) for spec in specs):
            raise exceptions.InvalidSpecError(strings.ERROR_INVALID_SPEC.format(reason='expected JSON objects'))
    else:
        specs = []
        block: Optional[Dict[str, Any]] = None
        for row, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if line.startswith('#'):
                continue
            if not line:
                block = None
                continue
            key, separator, value = line.partition('=')
            if not separator or not key.strip():
                raise exceptions.ParseError(
                    strings.ERROR_PARSE.format(row=row, reason=f'expected key = value, got {line!r}'), row=row
                )
            if block is None:
                block = {}
                specs.append(block)
            block[key.strip()] = value.strip()
    if not specs:
        raise exceptions.InvalidSpecError(strings.ERROR_INVALID_SPEC.format(reason='no spec found'))
    return specs


def parse_spec_file(path: str) -> List[sims.ExperimentSpec]:
    """Reads and validates the experiment specs of a file. See parse_spec_text."""
    with open(path, 'r', encoding='utf-8') as spec_file:
        text = spec_file.read()
    return [sims.ExperimentSpec.from_dict(values) for values in parse_spec_text(text)]
