"""graph6 encoding and the one-edge-per-line text format.

Only the short graph6 form is supported (n <= 62, single length byte):
byte n+63, then the upper triangle of the adjacency matrix column by column,
six bits per byte, each byte offset by 63.  Parsing is strict; malformed
input is rejected with the byte offset of the problem.
"""

from __future__ import annotations

from .graph import Graph

__all__ = ["Graph6Error", "parse_graph6", "emit_graph6", "parse_edge_list", "read_graph_text"]


class Graph6Error(ValueError):
    def __init__(self, offset: int, reason: str):
        self.offset = offset
        super().__init__(f"graph6: {reason} (byte {offset})")


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a graph on vertices 0..n-1."""
    s = text.rstrip("\n")
    if not s:
        raise Graph6Error(0, "empty input")
    for off, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(off, f"byte {ord(ch)} outside graph6 range")
    n = ord(s[0]) - 63
    if n > 62:
        raise Graph6Error(0, "only single-byte sizes (n <= 62) are supported")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - 1 != nbytes:
        raise Graph6Error(
            min(len(s), 1 + nbytes), f"expected {nbytes} adjacency bytes, got {len(s) - 1}"
        )
    bits: list[int] = []
    for off, ch in enumerate(s[1:], start=1):
        val = ord(ch) - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    for idx in range(nbits, len(bits)):
        if bits[idx]:
            raise Graph6Error(1 + idx // 6, "nonzero padding bits")
    edges = [pair for pair, bit in zip(_pairs(n), bits) if bit]
    return Graph(range(n), edges)


def emit_graph6(g: Graph) -> str:
    """Encode a graph; vertex ids map to positions 0..n-1 in sorted order."""
    n = g.n
    if n > 62:
        raise Graph6Error(0, "only graphs with n <= 62 can be emitted")
    vs = g.vertices
    bits = [1 if g.has_edge(vs[i], vs[j]) else 0 for i, j in _pairs(n)]
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for at in range(0, len(bits), 6):
        val = 0
        for b in bits[at : at + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Parse 'u v' pairs, one per line, 0-based ids; blank lines ignored.

    The vertex set is the union of the endpoints, so isolated vertices are
    not expressible in this format.  Use graph6 for those.
    """
    edges = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens:
            continue
        if len(tokens) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer vertex id in {line!r}") from None
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: vertex ids must be nonnegative")
        if u == v:
            raise ValueError(f"line {lineno}: self-loop at {u}")
        edges.append((u, v))
    verts = {v for e in edges for v in e}
    return Graph(verts, edges)


def read_graph_text(text: str) -> Graph:
    """Auto-detect the input format.

    Lines with two whitespace-separated tokens are an edge list (whitespace
    can never occur inside graph6); otherwise the first nonblank line is
    taken as graph6.
    """
    stripped = [ln for ln in text.splitlines() if ln.strip()]
    if not stripped:
        raise ValueError("no graph in input")
    if len(stripped[0].split()) == 2:
        return parse_edge_list(text)
    return parse_graph6(stripped[0])
