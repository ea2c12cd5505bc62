from typing import Optional

from src.graph.core import Graph, GraphError, build_graph


class EdgeListError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def _ints(text: str, line_no: int, expected: int) -> list[int]:
    parts = text.split()
    if len(parts) != expected:
        raise EdgeListError(f"expected {expected} integers, got {text!r}", line_no)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise EdgeListError(f"non-integer token in {text!r}", line_no)


def parse_edge_list(text: str) -> Graph:
    """
    Format: a header line "n m", then m lines "u v" with 0-based ids.
    Blank lines are ignored.
    """
    lines = [(no, line.strip()) for no, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if not lines:
        raise EdgeListError("missing header line 'n m'", 1)

    header_no, header = lines[0]
    n, m = _ints(header, header_no, 2)
    if n < 0 or m < 0:
        raise EdgeListError(f"negative count in header {header!r}", header_no)
    body = lines[1:]
    if len(body) != m:
        raise EdgeListError(f"header announces {m} edges, found {len(body)}", header_no)

    edges = []
    for line_no, line in body:
        u, v = _ints(line, line_no, 2)
        if u == v:
            raise EdgeListError(f"loop at vertex {u}", line_no)
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"edge ({u}, {v}) out of range for n={n}", line_no)
        edges.append((u, v))
    try:
        return build_graph(n, edges)
    except GraphError as e:
        raise EdgeListError(str(e))


def write_edge_list(G: Graph) -> str:
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"
