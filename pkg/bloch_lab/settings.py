"""Default values shared by the library and the command line.

Values are plain module constants; the command line overrides the grid and
thread settings per invocation.
"""

import os

# Points closer than this to the unit circle are rejected.
BOUNDARY_MARGIN = 1e-12

# Supremum search grid
N_RADIAL = 64
N_ANGULAR = 128
R_MAX = 1.0 - 1e-9
REFINE_TOP = 5
REFINE_TOL = 1e-8
REFINE_MAXITER = 400

# Generators
MAX_DEGREE = 64
QUASIREGULAR_MAX_ATTEMPTS = 100
# min |h'| on the boundary circle must reach this share of max |h'|
DERIVATIVE_FLOOR_RATIO = 0.1

# Campaigns
DEFAULT_SEED = 42
NEAR_VIOLATION_RATIO = 0.95
SLACK_FACTOR = 10.0
HISTOGRAM_BINS = 50
STRATUM_THRESHOLD = 1.0 / 3.0

THEOREM_A_CONSTANT = 3.31


def env_threads() -> int:
    """Worker count from BLOCH_LAB_THREADS, 0 (auto) when unset."""
    value = os.environ.get("BLOCH_LAB_THREADS", "0")
    try:
        threads = int(value)
    except ValueError:
        raise ValueError(
            f"BLOCH_LAB_THREADS must be an integer, got {value!r}"
        )
    if threads < 0:
        raise ValueError("BLOCH_LAB_THREADS must be non-negative")
    return threads


def env_log_level() -> str:
    return os.environ.get("BLOCH_LAB_LOG_LEVEL", "WARNING").upper()
