"""Central Configuration."""

import os

# Global Option which enables all internal assertions.
ASSERTIONS = bool(int(os.environ.get("DISKNORM_ASSERTIONS", 0)))

# Sums cancelling below this fraction of their operands evaluate to zero.
# Literal divisors smaller than it are not folded.
EPS_POLE = float(os.environ.get("DISKNORM_EPS_POLE", 1e-14))

# A dilatation with |omega| >= 1 - EPS_BOUNDARY is treated as degenerate.
EPS_BOUNDARY = float(os.environ.get("DISKNORM_EPS_BOUNDARY", 1e-9))

# Default truncation order of Taylor expansions.
TAYLOR_ORDER = int(os.environ.get("DISKNORM_TAYLOR_ORDER", 64))

# Slack on h(0) = g(0) = h'(0) = 1 for the normalized transforms.
NORMALIZATION_TOL = float(os.environ.get("DISKNORM_NORMALIZATION_TOL", 1e-10))

# Absolute tolerance of the radial continuation of logarithms.
BRANCH_TOL = float(os.environ.get("DISKNORM_BRANCH_TOL", 1e-11))

# Validation grid used for the flags of a map. Heuristic, not a proof.
VALIDATION_RADII = 32
VALIDATION_ANGLES = 64
VALIDATION_RMAX = 0.999
