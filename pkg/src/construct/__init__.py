from src.construct.certificates import (
    HamiltonCycleCert,
    InternalInvariantBreach,
    KTreeCert,
    NoAttachment,
    SmallVerdict,
    ViolationWitness,
    WitnessKind,
    cycle_problems,
    tree_leaf_count,
    tree_problems,
    verify_cycle,
    verify_tree,
    verify_witness,
    witness_problems,
)
from src.construct.engine import (
    ClosedCycle,
    EngineStats,
    LongerPath,
    PathState,
    Stuck,
    absorb_into_cycle,
    extend_to_maximal,
    find_crossing_chord,
    grow_maximal_path,
    is_maximal,
    path_problems,
    run_path_engine,
    try_rotate_or_close,
)
from src.construct.hamilton import disconnected_witness, extract_witness, find_hamilton_cycle, small_verdict
from src.construct.trees import build_k_ended_tree, path_to_spanning_tree
