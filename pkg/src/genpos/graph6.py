"""graph6 reader/writer, short form only (n <= 62).

Format: header byte n+63, then the upper triangle of the adjacency matrix in
column-major order, packed MSB-first into 6-bit groups, each group +63,
zero-padded.  One graph per line.
"""

from __future__ import annotations

from .errors import CapacityError, Graph6Error
from .graphs import Graph

MAX_ORDER = 62


def parse_graph6(text: str) -> Graph:
    line = text.rstrip("\n")
    if not line:
        raise Graph6Error("empty graph6 line", 0)
    header = ord(line[0])
    if header == 126:
        raise Graph6Error("long-form graph6 (n > 62) is not supported", 0)
    n = header - 63
    if n < 1 or n > MAX_ORDER:
        raise Graph6Error(f"bad header byte {line[0]!r}", 0)
    nbits = n * (n - 1) // 2
    nsymbols = (nbits + 5) // 6
    payload = line[1:]
    if len(payload) < nsymbols:
        raise Graph6Error(f"truncated payload: expected {nsymbols} symbols", len(line))
    if len(payload) > nsymbols:
        raise Graph6Error("trailing garbage after payload", 1 + nsymbols)
    bits = 0
    for i, ch in enumerate(payload):
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise Graph6Error(f"payload symbol {ch!r} out of range", 1 + i)
        bits = bits << 6 | val
    total = nsymbols * 6
    pad = total - nbits
    if bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", len(line) - 1)
    rows = [0] * n
    pos = total - 1
    for col in range(1, n):
        for row in range(col):
            if bits >> pos & 1:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            pos -= 1
    return Graph(n, tuple(rows))


def write_graph6(g: Graph) -> str:
    if g.n > MAX_ORDER:
        raise CapacityError(f"graph6 short form supports n <= {MAX_ORDER}, got {g.n}")
    bits = 0
    nbits = 0
    for col in range(1, g.n):
        for row in range(col):
            bits = bits << 1 | (g.adj[row] >> col & 1)
            nbits += 1
    pad = (-nbits) % 6
    bits <<= pad
    nbits += pad
    out = [chr(g.n + 63)]
    for pos in range(nbits - 6, -1, -6):
        out.append(chr((bits >> pos & 63) + 63))
    return "".join(out)
