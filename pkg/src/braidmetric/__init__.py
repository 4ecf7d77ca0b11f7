"""Combinatorial distance between braid words.

Crossing names, exact distances by breadth-first search, inversion lower
bounds and optimality certificates for derivations.
"""

from .derivation import (
    Certificate,
    SeparatrixReport,
    family_word,
    grid_derivation,
    lcm_derivation,
    optimality_certificate,
    separatrix_report,
    validate_derivation,
)
from .errors import (
    BraidError,
    ConsistencyError,
    DataError,
    DerivationError,
    MoveError,
    PreconditionError,
)
from .metric import (
    DistanceResult,
    LowerBoundReport,
    SearchLimits,
    Unknown,
    equivalent,
    exact_distance,
    exact_distance_general,
    lower_bound,
    random_equivalent_pair,
)
from .naming import (
    MoveDelta,
    NameEntry,
    NameSequence,
    move_delta,
    name_multiset,
    name_sequence,
    parse_name,
    signed_name_sequence,
)
from .render import RenderOptions, render_braid_diagram, render_derivation_chart
from .words import (
    BraidWord,
    Derivation,
    Move,
    applicable_moves,
    apply_move,
    format_word,
    parse_word,
    permutation_of,
    strand_trace,
)

__version__ = "0.1.0"
