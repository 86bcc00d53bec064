"""Untangling straight-line circular drawings of outerplanar graphs.

A drawing is a clockwise cyclic vertex order; untangling moves as few
vertices as possible to make all chords crossing-free.  The package provides
the combinatorial model, guaranteed-bound and minimum untanglers, brute-force
oracles, hardness-reduction instance builders, and a small CLI.
"""

from .almost_planar import (
    SidePartition,
    SplitDecomposition,
    classify_split_components,
    edge_fixed_untangle,
    min_untangle,
    move_connecting,
    move_non_connecting,
    one_side_untangle,
    side_partition,
    unwrap_linearizations,
)
from .blocks import Block, BlockDecomposition, block_decomposition, hamiltonian_cycle_of_block, planar_circular_order
from .errors import (
    ConstructionFailed,
    FormatError,
    GenerationFailed,
    InvalidInstance,
    InvalidN,
    NotAlmostPlanar,
    NotAWitness,
    NotDistinct,
    NotOuterplanar,
    PropertyViolation,
    StructuralAssertionFailed,
    TooLarge,
    UnknownEdge,
    UnknownVertex,
    Unsupported,
    UntanglingError,
)
from .general import gen_tight_general, general_bound, untangle_general
from .generators import cycle_graph, enumerate_almost_planar_instances, gen_fig5, gen_random, path_graph
from .model import (
    ALMOST_PLANAR,
    NOT_ALMOST_PLANAR,
    PLANAR,
    AlmostPlanarClassification,
    CircularDrawing,
    CrossingSet,
    Graph,
    Untangling,
    VerificationReport,
    VertexMove,
    apply_untangling,
    classify,
    crossings,
    empty_untangling,
    is_crossing_free,
    is_planar_drawing,
    moves_to_reach,
    verify_untangling,
)
from .oracle import (
    DistIcorAnswer,
    ExactUntangleResult,
    best_chunk_arrangement,
    enumerate_planar_orders,
    exact_3partition,
    exact_disticor,
    exact_min_untangle,
    exact_min_untangle_edge_fixed,
    naive_planar_orders,
)
from .reductions import (
    ChunkPropertyReport,
    DistIcorInstance,
    PartitionWitness,
    ReducedDistIcor,
    ThreePartitionInstance,
    chunk_property_check,
    reduce_3p_to_disticor,
    reduce_disticor_to_cu,
    witness_3p_to_disticor,
)
from .render import render_svg
from .seqs import CyclicSequence, RankedSequence, es_tight_cyclic, lccs, lics, lis, moves_between

__all__ = [name for name in dir() if not name.startswith("_")]
