from typing import Iterator, Optional, Union

from src.graph.core import Graph

GRAPH6_OFFSET = 63
MAX_SHORT_N = 62


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: Optional[int] = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def pair_order(n: int) -> Iterator[tuple[int, int]]:
    """Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ..."""
    for v in range(1, n):
        for u in range(v):
            yield u, v


def parse_graph6(line: Union[str, bytes]) -> Graph:
    """
    Strict single-byte-header graph6 decoder. Any malformed length,
    byte outside 63..126, or nonzero padding bit raises Graph6Error.
    """
    # characters beyond latin-1 clamp to 255 so they fail the range check
    data = bytes(min(ord(c), 255) for c in line) if isinstance(line, str) else bytes(line)
    data = data.rstrip(b"\r\n")
    if not data:
        raise Graph6Error("Empty graph6 string", 0)
    for offset, byte in enumerate(data):
        if not GRAPH6_OFFSET <= byte <= 126:
            raise Graph6Error(f"Byte value {byte} outside 63..126", offset)
    if data[0] == 126:
        raise Graph6Error("Multi-byte graph6 header (n > 62) is not supported", 0)

    n = data[0] - GRAPH6_OFFSET
    bit_count = n * (n - 1) // 2
    expected = 1 + (bit_count + 5) // 6
    if len(data) != expected:
        raise Graph6Error(f"Expected {expected} bytes for n={n}, got {len(data)}", min(len(data), expected))

    rows = [0] * n
    for k, (u, v) in enumerate(pair_order(n)):
        chunk = data[1 + k // 6] - GRAPH6_OFFSET
        if chunk >> (5 - k % 6) & 1:
            rows[u] |= 1 << v
            rows[v] |= 1 << u

    pad = (6 - bit_count % 6) % 6
    if pad and (data[-1] - GRAPH6_OFFSET) & ((1 << pad) - 1):
        raise Graph6Error("Nonzero padding bits", len(data) - 1)
    return Graph(n, rows)


def write_graph6(G: Graph) -> str:
    if G.n > MAX_SHORT_N:
        raise Graph6Error(f"graph6 short header supports n <= {MAX_SHORT_N}, got {G.n}")
    bits = [1 if G.has_edge(u, v) else 0 for u, v in pair_order(G.n)]
    bits += [0] * ((6 - len(bits) % 6) % 6)
    out = [chr(G.n + GRAPH6_OFFSET)]
    for i in range(0, len(bits), 6):
        value = 0
        for bit in bits[i:i + 6]:
            value = value << 1 | bit
        out.append(chr(value + GRAPH6_OFFSET))
    return "".join(out)


def read_graph6_lines(text: str) -> Iterator[Graph]:
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            yield parse_graph6(line)
        except Graph6Error as e:
            err = Graph6Error(f"line {line_no}: {e}")
            err.offset = e.offset
            raise err from e


def looks_like_graph6(text: str) -> bool:
    """First non-blank line made only of bytes 63..126 and no spaces."""
    for line in text.splitlines():
        line = line.strip()
        if line:
            return all(63 <= ord(c) <= 126 for c in line)
    return False
