"""Bit-exact graph6 encoder/decoder.

Layout: a size header (``chr(n+63)`` for n <= 62, else ``chr(126)``
followed by three bytes carrying n in big-endian 6-bit groups), then
the upper triangle of the adjacency matrix read column by column
(x(0,1), x(0,2), x(1,2), x(0,3), ...), packed big-endian into 6-bit
groups, zero-padded, each group offset by 63.  One graph per line.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from platykit.graph import Graph, MAX_VERTICES


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = chr(126) + "".join(chr(((n >> s) & 0x3F) + 63) for s in (12, 6, 0))
    bits = 0
    nbits = n * (n - 1) // 2
    for j in range(1, n):
        col = g.rows[j] & ((1 << j) - 1)
        rev = 0  # stream wants x(0,j) first, i.e. at the high end of the chunk
        k = col
        while k:
            low = k & -k
            rev |= 1 << (j - 1 - (low.bit_length() - 1))
            k ^= low
        bits = (bits << j) | rev
    out = []
    ngroups = (nbits + 5) // 6
    bits <<= ngroups * 6 - nbits
    for k in range(ngroups - 1, -1, -1):
        out.append(chr(((bits >> (6 * k)) & 0x3F) + 63))
    return head + "".join(out)


def decode_graph6(s: str) -> Graph:
    s = s.rstrip("\n")
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range 63..126")
    if ord(s[0]) == 126:
        if len(s) < 4:
            raise Graph6Error("truncated size header")
        if ord(s[1]) == 126:
            raise Graph6Error("8-byte size header: graph too large")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n < 1:
        raise Graph6Error("graph6 order must be at least 1")
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph6 order {n} exceeds supported maximum {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    ngroups = (nbits + 5) // 6
    if len(body) != ngroups:
        raise Graph6Error(
            f"bit section has {len(body)} characters, expected {ngroups} for n={n}"
        )
    bits = 0
    for ch in body:
        bits = (bits << 6) | (ord(ch) - 63)
    pad = ngroups * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    bits >>= pad
    rows = [0] * n
    pos = nbits
    for j in range(1, n):
        pos -= j
        chunk = (bits >> pos) & ((1 << j) - 1)
        while chunk:
            low = chunk & -chunk
            i = j - 1 - (low.bit_length() - 1)
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            chunk ^= low
    return Graph(n, rows)


def iter_graph6(stream: TextIO) -> Iterator[Graph]:
    """Decode a one-graph-per-line stream, skipping blank lines."""
    for line in stream:
        line = line.strip()
        if line:
            yield decode_graph6(line)


def write_graph6(stream: TextIO, graphs: Iterable[Graph]) -> int:
    count = 0
    for g in graphs:
        stream.write(encode_graph6(g) + "\n")
        count += 1
    return count
