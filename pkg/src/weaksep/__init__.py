"""Weakly separated collections over the cyclic ground set [n].

Separation predicates, pure-domain verification by exact clique search,
circle partitions with closed-form ranks and cluster distances, necklaces and
decorated permutations, square-move mutation graphs, and the four-interval
lattice projection.
"""

from .cliques import (
    Collection,
    CompatGraph,
    PurityReport,
    build_compat_graph,
    complete_to_maximal,
    enumerate_maximal_cliques,
    max_clique_size,
    purity_report,
)
from .domains import (
    ChainNotFound,
    CirclePartition,
    ClusterDistance,
    ElementProfile,
    LRChain,
    PairContext,
    ProfileNotFound,
    UnbalancedBound,
    boundary_intervals,
    build_domain_AIJ,
    characterize_element,
    chord_chain,
    circle_partition,
    cluster_distance,
    is_balanced,
    lr_chain,
    lr_domain,
    lr_labels,
    lr_subset,
    rank_formula,
    reduce_pair,
    unbalanced_witness,
)
from .ground import (
    CyclicOrder,
    GroundSetMismatch,
    Subset,
    cyclic_interval,
    cyclically_ordered,
    gale_leq,
    is_chord_separated,
    is_cyclic_interval,
    is_weakly_separated,
    surrounds,
    transform,
)
from .mutations import (
    BigInstance,
    DistanceResult,
    MutationGraph,
    NotMaximal,
    SquareMove,
    apply_square_move,
    explore_mutation_graph,
    find_square_moves,
    mutation_distance,
    node_key,
)
from .necklaces import (
    AlignmentLength,
    DecoratedPermutation,
    GrassmannNecklace,
    SimpleCyclicPattern,
    block_reversal_permutation,
    canonical_permutation,
    domain_in_for_necklace,
    is_generalized_cyclic_pattern,
    length_of,
    necklace_from_perm,
    perm_from_necklace,
    positroid_contains,
    simple_pattern_split,
    tau_kn,
)
from .octahedron import (
    LatticeVec4,
    MoveProjection,
    NoInteriorVerdict,
    P4Counts,
    PyramidFrame,
    check_no_interior,
    decompose_in_pyramid,
    move_projection_effect,
    normalize_p4,
    p4_counts,
    phi,
    phi_subset,
    pyramid_position,
)

__version__ = "0.1.0"
