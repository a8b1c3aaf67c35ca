"""Canonical conventions, tolerances, caps and reference values.

LABELING CONVENTIONS:
- Vertices are dense 0-based integers 0..n-1.
- Adjacency is stored per vertex as an integer bitmask: bit j of adjacency[i] is set
  iff vertices i and j are adjacent.
- Constructors place the distinguished (apex / star centre) vertex at label 0.
- graph6 bit order is the upper triangle column by column: (0,1), (0,2), (1,2), (0,3), ...

EXACTNESS:
- Distances, transmissions, the Wiener index and the gap n*D_max - 2W are exact integers.
- Spectral radii and the measures sigma = D_max - radius(D), tau = 2*D_max - radius(Q) are
  binary64 floats.

MEASURES:
- "sigma": D_max - largest eigenvalue of the distance matrix D(G).
- "tau": 2*D_max - largest eigenvalue of Q(G) = D(G) + diag(D_1, ..., D_n).
"""

from typing import Literal

Measure = Literal["sigma", "tau"]
GraphClass = Literal["connected", "trees", "stream"]
OutputFormat = Literal["json", "csv", "plain"]
ErrorPolicy = Literal["skip", "abort"]

MEASURE_SIGMA = "sigma"
MEASURE_TAU = "tau"

# Report schema tag
SCHEMA_VERSION = "transit-spectra/1"
FLOAT_FORMAT = ".17g"

# Order caps
MAX_ORDER = 64
GRAPH6_MAX_ORDER = 62
CANONICAL_MAX_ORDER = 16
CONNECTED_MAX_ORDER = 9
CONNECTED_EXTENDED_MAX_ORDER = 10
TREE_MAX_ORDER = 18
THEOREM1_MIN_ORDER = 4
THEOREM1_MAX_ORDER = 9
THEOREM2_MIN_ORDER = 3
THEOREM2_MAX_ORDER = 14
BOUNDS_MIN_ORDER = 3
BOUNDS_MAX_ORDER = 10**6
TRENDS_MIN_ORDER = 6

# Tolerances
PERRON_TOLERANCE = 1e-12
TIE_TOLERANCE = 1e-8
BOUND_TOLERANCE = 1e-8
STRUCTURE_TOLERANCE = 1e-7
EQUITABLE_TOLERANCE = 1e-9
RESIDUAL_TOLERANCE = 1e-12


def perron_iteration_cap(order: int) -> int:
    """Iteration cap for the shifted power method on an order-n matrix."""
    return 200 * order + 10000


# Exit codes
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2

# Published isomorph-free counts, indexed by order
CONNECTED_GRAPH_COUNTS = {
    1: 1,
    2: 1,
    3: 2,
    4: 6,
    5: 21,
    6: 112,
    7: 853,
    8: 11117,
    9: 261080,
    10: 11716571,
}
FREE_TREE_COUNTS = {
    1: 1,
    2: 1,
    3: 1,
    4: 2,
    5: 3,
    6: 6,
    7: 11,
    8: 23,
    9: 47,
    10: 106,
    11: 235,
    12: 551,
    13: 1301,
    14: 3159,
    15: 7741,
    16: 19320,
    17: 48629,
    18: 123867,
}
