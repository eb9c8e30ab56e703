"""Real higher spin structures on hyperbolic Klein surfaces.

Topological types of real m-Arf functions, canonical values on symmetric
generating sets, and the numbers N(t) of functions of each type, computed
both in closed form and by exhaustive enumeration.
"""

from .arf_types import (
    ArfTopologicalType,
    NonSepEvenType,
    OddType,
    SepEvenType,
    enumerate_arf_types,
    global_arf_invariant,
    normalize_swap,
    validate_arf_type,
)
from .counting import (
    CensusReport,
    CountResult,
    census,
    closed_count,
    count_even_arf_pairs,
    oracle_count,
    swap_corrected_count,
    verify_sweep,
)
from .errors import (
    InvalidTypeError,
    KleinSpinError,
    MalformedTypeError,
    NonHyperbolicError,
    OracleBudgetExceeded,
    OutOfScopeError,
)
from .klein_surface import (
    DecompositionParams,
    SurfaceType,
    decomposition_choices,
    enumerate_surface_types,
    geometric_genus,
    has_positive_geometric_genus,
    validate_surface_type,
)
from .value_tuples import (
    ValueTuple,
    arf_invariant_sum,
    canonical_tuple,
    extract_type,
    half_surface_invariant,
    similarity_partition,
    validate_tuple,
)

__version__ = "0.1.0"
