from dataclasses import dataclass
from enum import Enum
from typing import Optional

from src.conditions.checker import Precondition
from src.graph.core import Graph, GraphError, Pair, VertexSubset, degree_sum, induced_subgraph, validate_subset
from src.patterns.catalog import PatternId, classify_quadruple


class NoAttachment(Exception):
    """No edge leaves the cycle: it spans its component."""


class InternalInvariantBreach(RuntimeError):
    """A proof step produced a configuration the argument rules out."""


@dataclass(frozen=True)
class HamiltonCycleCert:
    sequence: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.sequence)


@dataclass(frozen=True)
class KTreeCert:
    edges: tuple[Pair, ...]
    leaf_count: int
    vertex_count: int


class WitnessKind(Enum):
    PATTERN_PAIR = "PATTERN_PAIR"
    DISCONNECTED_PATTERN = "DISCONNECTED_PATTERN"
    PRECONDITION = "PRECONDITION"


@dataclass(frozen=True)
class ViolationWitness:
    """
    A refutation of the degree-sum hypothesis: an induced pattern on
    `subset` in which the nonadjacent `pair` has degree sum below
    `threshold`. PRECONDITION witnesses carry only `label`.
    """
    kind: WitnessKind
    threshold: int
    subset: VertexSubset = ()
    pattern: Optional[PatternId] = None
    pair: Optional[Pair] = None
    degree_sum: Optional[int] = None
    label: Optional[Precondition] = None


@dataclass(frozen=True)
class SmallVerdict:
    """Exhaustive answer for n <= 3, where patterns cannot occur."""
    n: int
    certificate: Optional[HamiltonCycleCert]

    @property
    def hamiltonian(self) -> bool:
        return self.certificate is not None


def tree_leaf_count(n: int, edges) -> int:
    degree = [0] * n
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    return sum(1 for d in degree if d == 1)


def cycle_problems(G: Graph, cert: HamiltonCycleCert) -> list[str]:
    seq = cert.sequence
    problems = []
    if sorted(seq) != list(range(G.n)):
        problems.append("sequence does not cover every vertex exactly once")
        return problems
    if G.n == 0:
        problems.append("empty graph has no cycle")
    for a, b in zip(seq, seq[1:]):
        if not G.has_edge(a, b):
            problems.append(f"consecutive vertices {a},{b} not adjacent")
    # order 1 needs no edge; order 2 reuses its single edge
    if len(seq) >= 3 and not G.has_edge(seq[-1], seq[0]):
        problems.append(f"closing vertices {seq[-1]},{seq[0]} not adjacent")
    return problems


def tree_problems(G: Graph, cert: KTreeCert, k: Optional[int] = None) -> list[str]:
    problems = []
    n = G.n
    if cert.vertex_count != n:
        problems.append(f"tree spans {cert.vertex_count} vertices, graph has {n}")
    if n == 0:
        problems.append("empty graph has no spanning tree")
        return problems
    if len(cert.edges) != n - 1:
        problems.append(f"tree has {len(cert.edges)} edges, expected {n - 1}")
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in cert.edges:
        if not (0 <= u < n and 0 <= v < n) or not G.has_edge(u, v):
            problems.append(f"tree edge {u},{v} not in graph")
            continue
        ru, rv = find(u), find(v)
        if ru == rv:
            problems.append(f"tree edge {u},{v} closes a cycle")
        parent[ru] = rv
    if len({find(v) for v in range(n)}) != 1:
        problems.append("tree is not connected")
    actual = tree_leaf_count(n, cert.edges)
    if actual != cert.leaf_count:
        problems.append(f"leaf_count {cert.leaf_count} but tree has {actual} leaves")
    if k is not None and actual > k:
        problems.append(f"{actual} leaves exceeds k={k}")
    return problems


def witness_problems(G: Graph, witness: ViolationWitness) -> list[str]:
    if witness.kind == WitnessKind.PRECONDITION:
        return [] if witness.label is not None else ["precondition witness without label"]

    problems = []
    if len(witness.subset) != 4:
        return [f"subset {witness.subset} does not have 4 vertices"]
    try:
        validate_subset(G, witness.subset)
    except GraphError as e:
        return [str(e)]
    H, _ = induced_subgraph(G, witness.subset)
    if classify_quadruple(H) is not witness.pattern:
        problems.append(f"subset induces {classify_quadruple(H)}, not {witness.pattern}")
    if witness.pair is None:
        return problems + ["pattern witness without pair"]
    x, y = witness.pair
    if x not in witness.subset or y not in witness.subset:
        problems.append(f"pair {witness.pair} not inside subset")
    if G.has_edge(x, y):
        problems.append(f"pair {witness.pair} is adjacent")
    if witness.degree_sum != degree_sum(G, x, y):
        problems.append(f"degree_sum {witness.degree_sum} but d(x)+d(y) = {degree_sum(G, x, y)}")
    if degree_sum(G, x, y) >= witness.threshold:
        problems.append(f"degree sum {degree_sum(G, x, y)} meets threshold {witness.threshold}")
    return problems


def verify_cycle(G: Graph, cert: HamiltonCycleCert) -> bool:
    return not cycle_problems(G, cert)


def verify_tree(G: Graph, cert: KTreeCert, k: Optional[int] = None) -> bool:
    return not tree_problems(G, cert, k)


def verify_witness(G: Graph, witness: ViolationWitness) -> bool:
    return not witness_problems(G, witness)
