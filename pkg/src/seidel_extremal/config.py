"""Pinned numerical constants and limits shared by the library, CLI and tests."""

MAX_ORDER = 64
ISOMORPHISM_MAX_ORDER = 8
ENUMERATION_MAX_ORDER = 8

# Jacobi eigensolver
JACOBI_REL_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
EIGEN_CLUSTER_TOL = 1e-7

# smallest |x_i| still counted as a signed entry
ZERO_ENTRY_TOL = 1e-12

# bisection for the smallest root of g(y) = 4t(n-1-t) - y(n-y)^2
XI_TOL = 1e-12
XI_MAX_ITER = 200
XI_BRACKET_WIDEN = 1e-15

# exhaustive search
MAXIMIZER_TOL = 1e-7
EXACT_RECHECK_WINDOW = 1e-4
SCAN_CHUNK = 16384

# randomized acceptance and property suites
ACCEPTANCE_SEED = 20191104
PROPERTY_CASES = 1000

FLOAT_DIGITS = 12
