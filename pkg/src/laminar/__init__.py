"""Exact cut hierarchies, strength, arboricity, and ideal edge loads."""

from .arboricity import (
    ArboricityResult,
    compute_arboricity,
    fractional_arboricity,
    global_directed_min_cut,
    t_bar_mincut,
)
from .densecore import FindStarResult, find_star, find_star_full, probe, verify_core
from .dircut import (
    Arborescence,
    ArborescencePacking,
    PipelineConfig,
    SparsifierParams,
    find_small_cut,
    min_cost_arborescence,
    one_respecting_mincut,
    pack_arborescences,
    size_bounded_t_mincut,
    sparsify,
)
from .flow import (
    INF,
    DirectedNetwork,
    FlowResult,
    STCut,
    max_flow,
    min_st_cut,
    residual,
    t_mincut_exhaustive,
)
from .goldberg import (
    GoldbergNetwork,
    ModifiedNetwork,
    build_goldberg,
    build_modified,
    build_rooted,
    goldberg_min_cut_side,
)
from .graph import (
    ContractionMap,
    MultiwayCut,
    Rational,
    WeightedGraph,
    connected_components,
    contract,
    cut_ratio,
    induced_subgraph,
    parse_edge_list,
    rank,
    skew_density,
)
from .hierarchy import (
    HierarchyNode,
    HierarchyTree,
    build_hierarchy,
    maximal_min_ratio_cut,
    node_sigma,
    strength,
    validate_hierarchy,
)
from .loads import (
    DualCertificate,
    IdealLoads,
    entropy_certificate,
    entropy_value,
    ideal_loads,
    min_max_loads,
)
from .oracle import (
    FrankWolfeResult,
    SizeGuardError,
    brute_dense_core,
    brute_hierarchy,
    brute_max_skew_density,
    brute_min_ratio_cut,
    brute_one_respecting,
    brute_t_mincut,
    frank_wolfe_entropy,
)

__all__ = [name for name in dir() if not name.startswith("_")]
