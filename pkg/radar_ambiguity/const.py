"""Constants for the radar ambiguity toolkit."""

from fractions import Fraction

DOMAIN = "radar_ambiguity"

# Scalar modes
MODE_EXACT = "exact"
MODE_FLOAT = "float"
MODES = (MODE_EXACT, MODE_FLOAT)

# Tolerances
# Float equality: |x - y| <= tol * max(1, |x|, |y|)
DEFAULT_TOL = 1e-9
# Root separation used by the genericity predicate
DEFAULT_GENERIC_TOL = 1e-6
# Coefficient tolerance when certifying float candidates of the partner scan
DEFAULT_CERT_TOL = 1e-8
# Quarter-turn angles closer than this snap to the exact units 1, i, -1, -i
QUARTER_TURN_SNAP = 1e-12

# Size caps
MAX_BSET_SIZE = 32
MAX_SCAN_DEGREE = 12
MAX_DENSE_N = 64

# Strange partner search
DEFAULT_SEED = 0
DEFAULT_RESTARTS = 1000
DEFAULT_SEARCH_TOL = 1e-10
# Trivial-partner tolerance applied to numerically converged candidates
SEARCH_TRIVIAL_TOL = 1e-6
SEARCH_MAX_NFEV = 2000
SEARCH_PERTURBATION = 1e-2
SELFTEST_SEARCH_RESTARTS = 16
# Largest denominator tried during rational reconstruction
MAX_DENOMINATOR = 10**6
# Candidates closer than this (after phase canonicalization) are duplicates
DEDUPE_TOL = 1e-6
STATUS_CERTIFIED = "certified"
STATUS_NUMERIC_ONLY = "numeric-only"

# Pulse trains
MAX_PULSE_WIDTH = Fraction(1, 2)
# Widths above this are outside the regime where pulse partners are known to be unique
PULSE_UNIQUENESS_WIDTH = Fraction(1, 3)
# Below this |y| the box factor uses its two-term series
SMALL_Y = 1e-4
DEFAULT_PULSE_SAMPLES = 50
DEFAULT_PULSE_TOL = 1e-6
PULSE_REGIME_FLAG = "outside pulse-uniqueness regime (eta > 1/3)"

# Hermite functions
DEFAULT_HERMITE_NODES = 120
# Closed-form check: grid on [-span, span]^2, relative error bound
LAGUERRE_SPAN = 2.0
LAGUERRE_TOL = 1e-8
DEFAULT_LAGUERRE_JMAX = 4

# B_k sets
ORIENTATION_DIRECT = "direct"
ORIENTATION_REFLECTED = "reflected"

# Iterated products
FLIP_MODULATE = "modulate"
FLIP_SWAP = "swap"

# CSV grid export
CSV_HEADER = "x,y,abs,re,im"
CSV_FORMAT = "%.17g"

# Exit codes
EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_USAGE = 2

# JSON document keys
KEY_OFFSET = "offset"
KEY_COEFFS = "coeffs"
KEY_ALPHAS = "alphas"
KEY_SUPPORT = "support"
KEY_VALUES = "values"
KEY_ETA = "eta"
KEY_DECORATIONS = "decorations"
KEY_PHASE = "phase"
KEY_MODULATION = "modulation"
KEY_SHIFT = "shift"
KEY_REFLECTION = "reflection"

# Run configuration keys
CONF_MODE = "mode"
CONF_TOL = "tol"
CONF_SEED = "seed"
CONF_WORKERS = "workers"
CONF_VERBOSE = "verbose"
