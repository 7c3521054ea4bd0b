"""Graph decompositions into an independent set plus a low-degeneracy part,
colouring-reconfiguration paths, and the matching hardness-gadget generators."""

from .graph import (
    Decomposition,
    ForbiddenCliqueError,
    Graph,
    GraphFormatError,
    InternalInvariantError,
    PartitionError,
    VertexOrder,
    components,
    components_and_forbidden_clique_check,
    load_colouring,
    load_graph,
    max_back_degree,
    order_of,
    peel_degeneracy,
    reverse_bfs_order,
    serialize_colouring,
    serialize_graph,
    verify_decomposition,
)
from .cubic import (
    RuleRecord,
    apply_first_rule,
    decompose_subcubic,
    reduce_to_empty,
    undo_and_extend,
)
from .kdegen import (
    LockWitness,
    PairWitness,
    StructuralCase,
    decompose_k,
    greedy_from_order,
    maximalize_a,
    probe_pair,
    refine_pair,
    via_clique,
    via_lock,
    via_quasiclique,
    via_strong_pair,
)
from .recolour import (
    Colouring,
    StatusReport,
    classify,
    compact,
    find_path,
    is_frozen,
    kempe_component,
    reverse_path,
    swap_via_spare,
    validate_path,
)
from .gadgets import (
    CnfInstance,
    GadgetGraph,
    audit_observations,
    build_block,
    build_reduction,
    build_tower,
    load_cnf,
    serialize_cnf,
)
from .oracles import (
    BudgetExceededError,
    OracleBudget,
    brute_1_in_k_sat,
    brute_decompose,
    brute_reconfig_path,
    gen_random_colouring,
    gen_random_connected_max_degree,
    gen_random_max_degree,
    gen_random_regular,
    gen_random_subcubic,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
