from src.graph.core import (
    Graph,
    GraphError,
    Pair,
    VertexSubset,
    build_graph,
    connected_components,
    degree_sum,
    from_networkx,
    induced_subgraph,
    make_subset,
    mask_to_list,
    nonadjacent_pairs,
    subset_mask,
    validate_subset,
)
