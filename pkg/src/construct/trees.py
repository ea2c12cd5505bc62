from collections import deque
from typing import Optional, Union

from src.conditions.checker import Precondition, tree_threshold
from src.construct.certificates import KTreeCert, ViolationWitness, WitnessKind, tree_leaf_count
from src.construct.engine import ClosedCycle, EngineStats, PathState, run_path_engine
from src.construct.hamilton import extract_witness
from src.graph.core import Graph, GraphError
from src.utils.logger import logger

TreeResult = Union[KTreeCert, ViolationWitness]


def path_to_spanning_tree(G: Graph, path: PathState) -> KTreeCert:
    """
    Spanning tree containing every edge of `path`; off-path vertices are
    attached breadth-first from V(P). Only x_1, x_p and off-path vertices
    can be leaves, so leaf_count <= n - p + 2.
    """
    if not path.vertices:
        raise GraphError("Cannot grow a spanning tree from an empty path")
    if not G.is_connected():
        raise GraphError("Graph is disconnected; no spanning tree exists")

    edges = path.edges()
    reached = path.mask()
    queue = deque(path.vertices)
    while queue:
        u = queue.popleft()
        for v in G.neighbors(u):
            if reached >> v & 1:
                continue
            reached |= 1 << v
            edges.append((min(u, v), max(u, v)))
            queue.append(v)

    edges = tuple(sorted(edges))
    return KTreeCert(edges=edges, leaf_count=tree_leaf_count(G.n, edges), vertex_count=G.n)


def build_k_ended_tree(G: Graph, k: int, stats: Optional[EngineStats] = None) -> TreeResult:
    """
    Spanning tree with at most k leaves, or a witness that the
    pattern-restricted condition d(x) + d(y) >= n - k + 1 fails.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    threshold = tree_threshold(G.n, k)
    if not G.is_connected():
        return ViolationWitness(kind=WitnessKind.PRECONDITION, threshold=threshold, label=Precondition.DISCONNECTED)

    outcome = run_path_engine(G, start=0, stats=stats)
    if isinstance(outcome, ClosedCycle):
        # a spanning cycle minus its closing edge is a Hamilton path
        return path_to_spanning_tree(G, PathState(outcome.sequence))

    path = outcome.path
    if path.order >= G.n - k + 2:
        logger.debug(f"Completing path of order {path.order} into a tree (bound {G.n - path.order + 2})")
        return path_to_spanning_tree(G, path)
    return extract_witness(G, path, threshold=threshold)
