# settings.py
"""Contains global settings"""

import os
from typing import NamedTuple

from dotenv import load_dotenv
import psutil


load_dotenv()
DEBUG_MODE = True if os.getenv('DEBUG_MODE') == 'ON' else False

PROJECT_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
LOG_FILE = os.path.join(PROJECT_DIR, os.getenv('GOF_LOG_FILE') or 'logs/gof.log')

SEED_DEFAULT = int(os.getenv('GOF_SEED') or 0)
WORKERS_DEFAULT = int(os.getenv('GOF_WORKERS') or 0) or psutil.cpu_count(logical=False) or 1

# Test defaults
H_DEFAULT = 0.2
K_DEFAULT = 20
LEVEL_DEFAULT = 0.05
A1_DEFAULT = 13.7

# Poisson calibration
GRID_N_DEFAULT = 2048
DEPTH_FACTOR = 40 # Depth M = DEPTH_FACTOR / gamma
MAX_DEGENERATE_RATE = 0.01
MAX_REDRAWS = 25
A1_REPS_DEFAULT = 100_000

# Experiments
REPS_DEFAULT = 1000

# Designs
ELIGIBLE_INTERVAL = (0.0, 1.0)
ELIGIBILITY_TOLERANCE = 1e-9
WINDOW_TOLERANCE = 1e-9 # Relative to the bandwidth, window ends closer than this to a point hit it
IRREGULAR_DESIGN_RATIO = 3
MIN_SERIES_ROWS = 4
MISSING_TOKENS = ('', 'na', 'nan', 'n/a', '-', '.', 'missing', 'null')

SCHEMA_VERSION = 1

class ExitCode(NamedTuple):
    """Exit codes of the command line tool"""
    accepted: int = 0
    rejected: int = 1
    error: int = 2

EXIT_CODES = ExitCode()
