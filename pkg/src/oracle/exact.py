from functools import lru_cache
from typing import Optional

from src.construct.engine import PathState
from src.graph.core import Graph, mask_to_list
from src.utils.config import OracleBudget
from src.utils.logger import logger

DEFAULT_BUDGET = OracleBudget()


class BudgetExceeded(ValueError):
    def __init__(self, operation: str, n: int, limit: int):
        super().__init__(f"{operation} is limited to n <= {limit}, got n = {n}")
        self.operation = operation
        self.n = n
        self.limit = limit


def _check_budget(operation: str, n: int, limit: int):
    if n > limit:
        raise BudgetExceeded(operation, n, limit)


def _path_reach(G: Graph, sources: int) -> list[int]:
    """
    reach[mask] = set of vertices v (as a bitset) such that some path
    starting in `sources` visits exactly `mask` and ends at v.
    """
    n = G.n
    reach = [0] * (1 << n)
    for v in mask_to_list(sources):
        reach[1 << v] |= 1 << v
    for mask in range(1, 1 << n):
        ends = reach[mask]
        while ends:
            low = ends & -ends
            v = low.bit_length() - 1
            ends ^= low
            free = G.neighbor_mask(v) & ~mask
            while free:
                w_bit = free & -free
                free ^= w_bit
                reach[mask | w_bit] |= w_bit
    return reach


def _walk_back(G: Graph, reach: list[int], mask: int, end: int) -> list[int]:
    seq = [end]
    while mask & (mask - 1):
        mask ^= 1 << end
        candidates = reach[mask] & G.neighbor_mask(end)
        end = (candidates & -candidates).bit_length() - 1
        seq.append(end)
    return seq[::-1]


def hamiltonian_exact(G: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> Optional[tuple[int, ...]]:
    """
    Hamilton cycle by subset dynamic programming, or None. A single vertex
    is a cycle of order 1 and an edge a cycle of order 2.
    """
    n = G.n
    _check_budget("hamiltonian_exact", n, budget.hamiltonian)
    if n == 0:
        return None
    if n == 1:
        return (0,)
    reach = _path_reach(G, 1)
    full = (1 << n) - 1
    closing = reach[full] & G.neighbor_mask(0)
    if not closing:
        return None
    end = (closing & -closing).bit_length() - 1
    return tuple(_walk_back(G, reach, full, end))


def hamiltonian_path_exact(G: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> Optional[tuple[int, ...]]:
    n = G.n
    _check_budget("hamiltonian_path_exact", n, budget.longest_path)
    if n == 0:
        return None
    reach = _path_reach(G, (1 << n) - 1)
    full = (1 << n) - 1
    if not reach[full]:
        return None
    end = (reach[full] & -reach[full]).bit_length() - 1
    return tuple(_walk_back(G, reach, full, end))


def longest_path_exact(G: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> PathState:
    n = G.n
    _check_budget("longest_path_exact", n, budget.longest_path)
    if n == 0:
        return PathState(())
    reach = _path_reach(G, (1 << n) - 1)
    best_mask = max((mask for mask in range(1, 1 << n) if reach[mask]), key=lambda m: (m.bit_count(), -m))
    end = (reach[best_mask] & -reach[best_mask]).bit_length() - 1
    return PathState(tuple(_walk_back(G, reach, best_mask, end)))


def min_leaf_spanning_tree_exact(G: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> Optional[tuple[int, tuple]]:
    """
    (minimum leaf count, one optimal tree's edges), or None if G is
    disconnected. Results are cached per graph.
    """
    _check_budget("min_leaf_spanning_tree_exact", G.n, budget.min_leaf_tree)
    return _min_leaf_cached(G)


@lru_cache(maxsize=4096)
def _min_leaf_cached(G: Graph) -> Optional[tuple[int, tuple]]:
    n = G.n
    if not G.is_connected():
        return None
    if n == 1:
        return 0, ()

    # a Hamilton path reaches the global minimum of 2 leaves
    path = hamiltonian_path_exact(G, OracleBudget(longest_path=n))
    if path is not None:
        return 2, tuple(sorted((min(a, b), max(a, b)) for a, b in zip(path, path[1:])))

    forced = sum(1 for d in G.degrees() if d == 1)
    lower = max(3, forced)
    best = _branch_and_bound(G, lower)
    logger.debug(f"min-leaf search on n={n}: {best[0]} leaves (lower bound {lower})")
    return best


def _branch_and_bound(G: Graph, lower: int) -> tuple[int, tuple]:
    """
    Include/exclude each edge in turn; prune branches that close a cycle
    or can no longer connect the graph; stop once `lower` is reached.
    """
    n = G.n
    edges = G.edges()
    best = [n + 1, ()]

    def find(parent, x):
        while parent[x] != x:
            x = parent[x]
        return x

    def can_connect(parent, start: int) -> bool:
        roots = {find(parent, v) for v in range(n)}
        if len(roots) == 1:
            return True
        merged = list(parent)
        for u, v in edges[start:]:
            ru, rv = find(merged, u), find(merged, v)
            if ru != rv:
                merged[ru] = rv
        return len({find(merged, v) for v in range(n)}) == 1

    def search(index: int, parent: list, chosen: list, degree: list):
        if best[0] <= lower:
            return
        if len(chosen) == n - 1:
            leaves = sum(1 for d in degree if d == 1)
            if leaves < best[0]:
                best[0], best[1] = leaves, tuple(chosen)
            return
        if index == len(edges) or len(edges) - index < n - 1 - len(chosen):
            return
        if not can_connect(parent, index):
            return

        u, v = edges[index]
        ru, rv = find(parent, u), find(parent, v)
        if ru != rv:
            merged = list(parent)
            merged[ru] = rv
            degree[u] += 1
            degree[v] += 1
            chosen.append((u, v))
            search(index + 1, merged, chosen, degree)
            chosen.pop()
            degree[u] -= 1
            degree[v] -= 1
        search(index + 1, parent, chosen, degree)

    search(0, list(range(n)), [], [0] * n)
    return best[0], best[1]
