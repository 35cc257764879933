# strings.py
"""Contains global strings"""

# --- Error messages ---
MSG_ERROR = 'Error: {error}'
MSG_ERROR_STAGE = 'Error in stage "{stage}": {error}'


# --- Internal error messages ---
ERROR_EMPTY_WINDOW = 'No estimation point within bandwidth {h} of x = {x}.'
ERROR_EMPTY_SIDE = (
    'No estimation point at or {side} of x = {x} within bandwidth {h}. '
    'The design needs buffer observations outside the statistic interval.'
)
ERROR_FIT_GRID = 'Frontier fit failed at abscissa x = {x}: {error}'
ERROR_ZERO_DENOMINATOR = (
    'Top residual order statistic and the one {k} places below coincide ({value}). '
    'Supply a known gamma for degenerate residuals.'
)
ERROR_BAD_K = 'k must satisfy 1 <= k < {m}, got k = {k}.'
ERROR_GAMMA = 'gamma must be > 0, got {gamma}.'
ERROR_DEGENERATE_DESIGN = 'Statistic abscissae have no spread (R*m - S^2 = {denom}).'
ERROR_EMPTY_DESIGN = 'The design has no points.'
ERROR_LENGTH = '{first} and {second} must have the same length ({len_first} != {len_second}).'
ERROR_DOMAIN = '{name} must be {condition}, got {value}.'
ERROR_DEGENERATE_DRAW = 'Degenerate Poisson draw: {error}'
ERROR_TOO_FEW_REPS = 'At least 2 replicates are needed, got {reps}.'
ERROR_DEPTH_TOO_SHALLOW = (
    '{redraws} redraws for {reps} replicates exceed the {rate:.0%} limit. '
    'The truncation depth {depth} is too shallow for gamma = {gamma}.'
)
ERROR_INVALID_SPEC = 'Invalid experiment spec: {reason}'
ERROR_PARSE = 'Row {row}: {reason}'
ERROR_TOO_FEW_ROWS = 'Need at least {minimum} usable rows, found {count} in {path}.'


# --- Warnings ---
WARNING_DROPPED_LAST = 'Odd number of points; dropped the last point at x = {x}.'
WARNING_MERGED = 'Merged {count} duplicate abscissae keeping the maximal response.'
WARNING_IRREGULAR_DESIGN = (
    'Irregular design: half-bandwidth window counts vary by a factor of {ratio:.3g} (> {limit}). '
    'The regularity assumption behind phi2 is doubtful; prefer phi1.'
)
WARNING_CX_NORMALIZER = (
    'C_x is normalized by the {n_stat} points inside [0, 1], not by all {n_all} loaded points.'
)
WARNING_SKIPPED_ROWS = 'Skipped {count} rows with missing values; parity was assigned after dropping them.'
WARNING_FAILED_REPS = '{failed} of {reps} replicates failed and are not counted in the rates.'


# --- Report labels ---
BP = '•'

TITLE_TEST = 'AFFINE FRONTIER TEST'
TITLE_CALIBRATE = 'A1 CALIBRATION'
TITLE_EXPERIMENT = 'EXPERIMENT'

SUBCOMMANDS = {
    'test': 'Test whether the frontier of a data series is affine',
    'calibrate': 'Estimate the calibration constant A1 by Poisson simulation',
    'experiment': 'Run size and power Monte Carlo experiments',
}
