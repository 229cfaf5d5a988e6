"""Constants module - engine names, output formats and rendering policy."""

import math
from enum import Enum


class Engine(str, Enum):
    """Correlation engines."""
    EXACT = "exact"
    SERIES = "series"
    ANALYTIC = "analytic"
    COMPARE = "compare"


class OutputFormat(str, Enum):
    """Supported table encodings."""
    CSV = "csv"
    JSON = "json"


class Command(str, Enum):
    """CLI subcommands."""
    CORRELATE = "correlate"
    FRONT = "front"
    VELOCITY = "velocity"
    LEADING = "leading"


# Literal token written wherever a pair has no leading order
UNREACHABLE_TOKEN = "unreachable"

# Snapshot values above 10**clip are dropped
DEFAULT_CLIP_LOG10 = -2.0

# Significant digits for every rendered number (CSV and JSON agree)
SIGNIFICANT_DIGITS = 17

TIME_CONVENTION = "dimensionless t/tau with tau = pi*hbar/gamma; energies in units of gamma"

# Process exit statuses
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE_ERROR = 2
EXIT_LIMIT_REFUSED = 3
EXIT_ENGINE_MISMATCH = 4

# Relative agreement demanded between symbolic and closed-form prefactors
LEADING_MATCH_RTOL = 1e-9

E_PI = math.e * math.pi

# Exact crossings below this level come from the series, not diagonalization
DENSE_FLOOR = 1e-10

# Orders summed past the leading one for crossings below the dense floor
CROSSING_EXTRA_ORDERS = 6
CROSSING_MAX_EXTRA_ORDERS = 16
CROSSING_SERIES_RTOL = 1e-8
