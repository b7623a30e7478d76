"""Search for grid diagrams of fibered knots with a unique perfect grid state."""

__version__ = "0.1.0"

from .detect import DetectionReport, Status, detect_unique_perfect, find_loop, new_perfect_state, reduce_pass
from .grid import (
    ConsistencyError,
    GridError,
    MarkerList,
    h_to_v,
    parse_grid_notation,
    parse_vertlist,
    rev,
    to_vertlist,
    v_to_h,
)
from .moves import c_move, can_commute, canonical_key, x_nw
from .search import SearchLimits, SearchOutcome, gridstate_finder_commute, gridstate_finder_stab, try_permutations
from .winding import a_grading, alexander_constant, bounds, w_matrix, winding_value
