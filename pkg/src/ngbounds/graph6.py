"""graph6 encoding for orders up to 62 (single-byte size field only)."""

from __future__ import annotations

from typing import Iterator, TextIO

from .graph import Graph, GraphError

HEADER = ">>graph6<<"
MAX_G6_ORDER = 62


class Graph6Error(GraphError):
    pass


def _pairs(n: int) -> Iterator[tuple[int, int]]:
    # Upper triangle in column-major order: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > MAX_G6_ORDER:
        raise Graph6Error(f"order {n} needs an extended graph6 size field")
    bits = [g.adj[i] >> j & 1 for i, j in _pairs(n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} at position {pos} outside 63..126")
    n = ord(s[0]) - 63
    if n == 63:
        raise Graph6Error("extended size fields (order > 62) are not supported")
    if n == 0:
        raise Graph6Error("graph6 order 0 is not supported")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) != nbytes:
        raise Graph6Error(f"order {n} needs {nbytes} data bytes, got {len(body)}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> (5 - t)) & 1 for t in range(6))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    for (i, j), b in zip(_pairs(n), bits):
        if b:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def read_graph6(stream: TextIO) -> Iterator[tuple[int, Graph | Graph6Error]]:
    """Yield ``(line_number, graph_or_error)`` for every non-blank line."""
    for lineno, line in enumerate(stream, start=1):
        s = line.strip()
        if s.startswith(HEADER):
            s = s[len(HEADER):]
        if not s:
            continue
        try:
            yield lineno, from_graph6(s)
        except GraphError as exc:
            yield lineno, Graph6Error(f"line {lineno}: {exc}")
