"""graph6 encoding and decoding.

Only the 1-byte (n <= 62) and 4-byte (n <= 258047) size headers are
supported; the 8-byte form is rejected as an unsupported size.
"""

from __future__ import annotations

from .graph import Graph

HEADER = b">>graph6<<"
MAX_N = 258047


class Graph6ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class UnsupportedSizeError(ValueError):
    pass


def _size_header(n: int) -> bytes:
    if n < 0 or n > MAX_N:
        raise UnsupportedSizeError(f"graph6 supports 0 <= n <= {MAX_N}, got {n}")
    if n <= 62:
        return bytes([63 + n])
    return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])


def encode_graph6(g: Graph) -> bytes:
    n = g.n
    header = _size_header(n)
    # x(i, j) for i < j, column by column; bit i of rows[j] is x(i, j).
    bits = "".join(
        format(g.rows[j] & ((1 << j) - 1), f"0{j}b")[::-1] for j in range(1, n)
    )
    bits += "0" * (-len(bits) % 6)
    body = bytes(63 + int(bits[k:k + 6], 2) for k in range(0, len(bits), 6))
    return header + body


def parse_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("latin-1")
    start = len(HEADER) if data.startswith(HEADER) else 0
    end = len(data)
    if data.endswith(b"\n"):
        end -= 1
    for off in range(start, end):
        if not 63 <= data[off] <= 126:
            raise Graph6ParseError(f"byte value {data[off]} outside 63..126", off)
    if start >= end:
        raise Graph6ParseError("missing size header", start)

    pos = start
    if data[pos] < 126:
        n = data[pos] - 63
        pos += 1
    else:
        if pos + 1 < end and data[pos + 1] == 126:
            raise UnsupportedSizeError(f"8-byte size header at offset {pos}; n > {MAX_N} unsupported")
        if pos + 4 > end:
            raise Graph6ParseError("truncated 4-byte size header", end)
        a, b, c = (x - 63 for x in data[pos + 1:pos + 4])
        n = a << 12 | b << 6 | c
        if n <= 62:
            raise Graph6ParseError(f"4-byte size header encodes n={n}, which needs the short form", pos)
        pos += 4

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if end - pos < nbytes:
        raise Graph6ParseError(f"payload has {end - pos} bytes, expected {nbytes}", end)
    if end - pos > nbytes:
        raise Graph6ParseError("trailing bytes after payload", pos + nbytes)

    payload = data[pos:pos + nbytes]
    bits = "".join(format(x - 63, "06b") for x in payload)
    if "1" in bits[nbits:]:
        raise Graph6ParseError("nonzero padding bits", pos + nbytes - 1)

    rows = [0] * n
    k = 0
    for j in range(1, n):
        col = bits[k:k + j]
        k += j
        if "1" not in col:
            continue
        lower = int(col[::-1], 2)
        rows[j] = lower
        i = 0
        while lower:
            if lower & 1:
                rows[i] |= 1 << j
            lower >>= 1
            i += 1
    return Graph(n, rows)
