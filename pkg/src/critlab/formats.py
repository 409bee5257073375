"""graph6 and edge-list text serialization.

graph6 layout: header byte n+63 for n <= 62 (or '~' plus three bytes of an
18-bit n for larger graphs), then the upper-triangle bits x(0,1), x(0,2),
x(1,2), x(0,3), ... packed big-endian into 6-bit groups, each offset by 63.
Padding bits must be zero.  Parse errors carry the offending byte offset.
"""

from __future__ import annotations

from .graphs import MAX_VERTICES, Graph, from_edges

_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


def parse_graph6(text: str) -> Graph:
    """Decode a single graph6 line into a Graph."""
    line = text.rstrip("\n\r")
    base = 0
    if line.startswith(_HEADER):
        line = line[len(_HEADER):]
        base = len(_HEADER)
    if not line:
        raise Graph6Error("empty graph6 string", base)

    data = [ord(ch) for ch in line]
    for i, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte!r} outside graph6 range 63..126", base + i)

    if data[0] == 126:  # long form: '~' then 18-bit n
        if len(data) < 4:
            raise Graph6Error("truncated long-form vertex count", base + len(data) - 1)
        if data[1] == 126:
            raise Graph6Error("8-byte vertex counts exceed the 64-vertex cap", base + 1)
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    else:
        n = data[0] - 63
        pos = 1
    if n > MAX_VERTICES:
        raise Graph6Error(f"decoded vertex count {n} exceeds cap {MAX_VERTICES}", base)

    nbits = n * (n - 1) // 2
    ngroups = (nbits + 5) // 6
    if len(data) - pos < ngroups:
        raise Graph6Error(
            f"need {ngroups} adjacency bytes, found {len(data) - pos}",
            base + len(data) - 1 if data else base,
        )
    if len(data) - pos > ngroups:
        raise Graph6Error("trailing bytes after adjacency data", base + pos + ngroups)

    rows = [0] * n
    idx = 0
    for gi in range(ngroups):
        group = data[pos + gi] - 63
        for b in range(5, -1, -1):
            bit = group >> b & 1
            if idx < nbits:
                if bit:
                    i, j = _pair_of_index(idx)
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
            elif bit:
                raise Graph6Error("nonzero padding bits", base + pos + gi)
            idx += 1
    return Graph(n, tuple(rows))


def _pair_of_index(idx: int) -> tuple[int, int]:
    # bits run column-wise: (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
    j = 1
    while j * (j - 1) // 2 + j <= idx:
        j += 1
    return idx - j * (j - 1) // 2, j


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + chr((n >> 12 & 63) + 63) + chr((n >> 6 & 63) + 63) + chr((n & 63) + 63)
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(g.adj[i] >> j & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for gi in range(0, len(bits), 6):
        val = 0
        for b in bits[gi:gi + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return head + "".join(chars)


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Parse "u v" lines (0-based); n defaults to max vertex + 1."""
    edges = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 2:
            raise ValueError(f"edge-list line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ValueError(f"edge-list line {lineno}: non-integer vertex") from exc
        if u < 0 or v < 0:
            raise ValueError(f"edge-list line {lineno}: negative vertex")
        edges.append((u, v))
        top = max(top, u, v)
    if n is None:
        n = top + 1
    return from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    return "\n".join(f"{u} {v}" for u, v in g.edges())
