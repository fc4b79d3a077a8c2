"""graph6 serialization, bit-exact per the header-less small-graph encoding.

One graph per line: an order field (63+n for n <= 62, else a '~'-prefixed
3-byte field), then the upper triangle of the adjacency matrix read column
by column, packed big-endian into 6-bit groups offset by 63, zero padded.
"""

from __future__ import annotations

from .graphs import MAX_ORDER, Graph


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = [
            "~",
            chr(63 + ((n >> 12) & 63)),
            chr(63 + ((n >> 6) & 63)),
            chr(63 + (n & 63)),
        ]
    acc = 0
    nbits = 0
    for v in range(1, n):
        col = g.adj[v]
        for u in range(v):
            acc = (acc << 1) | ((col >> u) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(63 + acc))
    return "".join(out)


def parse_graph6(text: str, max_order: int = MAX_ORDER) -> Graph:
    s = text.rstrip("\n")
    if not s:
        raise Graph6Error("empty graph6 line")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside graph6 range")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise Graph6Error("8-byte order field not supported (order over cap)")
        if len(s) < 4:
            raise Graph6Error("truncated order field")
        n = (
            ((ord(s[1]) - 63) << 12)
            | ((ord(s[2]) - 63) << 6)
            | (ord(s[3]) - 63)
        )
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n > max_order:
        raise Graph6Error(f"order {n} over cap {max_order}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(
            f"body length {len(body)} does not match order {n}"
        )
    rows = [0] * n
    bit = 0
    for ch in body:
        group = ord(ch) - 63
        for shift in range(5, -1, -1):
            b = (group >> shift) & 1
            if bit < nbits:
                if b:
                    u, v = _bit_position(bit)
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
            elif b:
                raise Graph6Error("nonzero padding bits")
            bit += 1
    return Graph(n, rows)


def _bit_position(bit: int) -> tuple[int, int]:
    """Map a bit index in the column-major upper triangle to its (u, v)."""
    v = 1
    while bit >= v:
        bit -= v
        v += 1
    return bit, v
