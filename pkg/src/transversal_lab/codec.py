"""graph6 / digraph6 text encoding.

Bit layout follows the published format description exactly:

* N(n): for n <= 62 a single byte n+63; for 63 <= n <= 258047 the byte '~'
  followed by three bytes holding n in 18 big-endian bits; for larger n
  (up to 2^36 - 1) two '~' bytes followed by six bytes holding 36 bits.
* graph6: N(n) followed by the upper triangle of the adjacency matrix in
  column order (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...), packed into
  6-bit groups, zero-padded, each group + 63.
* digraph6: '&' then N(n) followed by all n*n adjacency bits in row-major
  order (bit i*n+j set iff arc i->j), packed the same way.

Decoding accepts the optional ">>graph6<<" / ">>digraph6<<" headers and is
strict about length and padding.
"""

from __future__ import annotations

from .errors import MalformedInput
from .graphs import BitDigraph, UGraph

_GRAPH6_HEADER = ">>graph6<<"
_DIGRAPH6_HEADER = ">>digraph6<<"


def _encode_order(n: int) -> str:
    if n < 0:
        raise MalformedInput("negative order")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise MalformedInput(f"order {n} exceeds format range")


def _decode_order(data: str) -> tuple[int, str]:
    if not data:
        raise MalformedInput("empty input")
    if data[0] != "~":
        n = ord(data[0]) - 63
        if not 0 <= n <= 62:
            raise MalformedInput(f"bad order byte {data[0]!r}")
        return n, data[1:]
    if len(data) >= 2 and data[1] != "~":
        if len(data) < 4:
            raise MalformedInput("truncated 3-byte order")
        n = 0
        for ch in data[1:4]:
            v = ord(ch) - 63
            if not 0 <= v <= 63:
                raise MalformedInput(f"bad order byte {ch!r}")
            n = (n << 6) | v
        return n, data[4:]
    if len(data) < 8:
        raise MalformedInput("truncated 6-byte order")
    n = 0
    for ch in data[2:8]:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise MalformedInput(f"bad order byte {ch!r}")
        n = (n << 6) | v
    return n, data[8:]


def _pack_bits(bits_seq: list[int]) -> str:
    out = []
    for i in range(0, len(bits_seq), 6):
        group = bits_seq[i : i + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def _unpack_bits(data: str, nbits: int) -> list[int]:
    need = (nbits + 5) // 6
    if len(data) != need:
        raise MalformedInput(f"expected {need} data bytes, got {len(data)}")
    bits_seq: list[int] = []
    for ch in data:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise MalformedInput(f"bad data byte {ch!r}")
        for s in range(5, -1, -1):
            bits_seq.append((v >> s) & 1)
    for b in bits_seq[nbits:]:
        if b:
            raise MalformedInput("nonzero padding bits")
    return bits_seq[:nbits]


def encode_graph6(g: UGraph) -> str:
    n = g.order
    bits_seq = []
    for j in range(1, n):
        for i in range(j):
            bits_seq.append((g.adj[i] >> j) & 1)
    return _encode_order(n) + _pack_bits(bits_seq)


def decode_graph6(line: str) -> UGraph:
    data = line.strip()
    if data.startswith(_GRAPH6_HEADER):
        data = data[len(_GRAPH6_HEADER) :]
    n, rest = _decode_order(data)
    nbits = n * (n - 1) // 2
    bits_seq = _unpack_bits(rest, nbits)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits_seq[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return UGraph(n, adj)


def encode_digraph6(d: BitDigraph) -> str:
    n = d.order
    bits_seq = []
    for i in range(n):
        for j in range(n):
            bits_seq.append((d.out[i] >> j) & 1)
    return "&" + _encode_order(n) + _pack_bits(bits_seq)


def decode_digraph6(line: str) -> BitDigraph:
    data = line.strip()
    if data.startswith(_DIGRAPH6_HEADER):
        data = data[len(_DIGRAPH6_HEADER) :]
    if not data.startswith("&"):
        raise MalformedInput("digraph6 line must start with '&'")
    n, rest = _decode_order(data[1:])
    bits_seq = _unpack_bits(rest, n * n)
    out = [0] * n
    for i in range(n):
        for j in range(n):
            if bits_seq[i * n + j]:
                if i == j:
                    raise MalformedInput(f"self-loop at vertex {i}")
                out[i] |= 1 << j
    return BitDigraph(n, out)
