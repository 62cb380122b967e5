"""Connected swarms on graphs: valid movements, Wilson groups and reachability."""

from .config import Configuration, empties_in_direction, is_saturated, is_similar, make_config
from .graph import (
    Graph,
    biconnected_components,
    block_tree,
    direction_component,
    edge_blocks,
    find_bridges,
)
from .moves import (
    ElementaryMove,
    MoveKind,
    MoveSequence,
    apply_move,
    apply_sequence,
    enumerate_moves,
    induced_permutation,
    is_valid,
)
from .perm import GroupDescriptor, Kind, Parity, VertexPermutation, compose, contains, order, parity
from .wilson import (
    analyze_nonsaturated,
    analyze_saturated,
    compute_c_sets,
    decide_reachable,
    merge_c_sets,
    orbits,
    weakness,
    wilson_group,
)

__version__ = "0.1.0"
