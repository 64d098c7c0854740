"""graph6 and edge-list readers/writers."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .errors import MalformedEdgeList, MalformedGraph6
from .graph import Graph


def _n_header(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    return bytes([126, 126] + [63 + (n >> s & 63) for s in (30, 24, 18, 12, 6, 0)])


def encode_graph6(g: Graph) -> bytes:
    """graph6 encoding: upper triangle read column by column, 6 bits per byte."""
    out = bytearray(_n_header(g.n))
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def decode_graph6(line: bytes | str) -> Graph:
    data = line.encode("ascii") if isinstance(line, str) else bytes(line)
    data = data.rstrip(b"\r\n")
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise MalformedGraph6("empty record", 0)
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise MalformedGraph6(f"byte {b!r} outside 63..126", pos)
    if data[0] < 126:
        n, body_at = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise MalformedGraph6("truncated 8-byte header", len(data))
        n = 0
        for b in data[2:8]:
            n = n << 6 | (b - 63)
        body_at = 8
    else:
        if len(data) < 4:
            raise MalformedGraph6("truncated 4-byte header", len(data))
        n = 0
        for b in data[1:4]:
            n = n << 6 | (b - 63)
        body_at = 4
    body = data[body_at:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise MalformedGraph6(
            f"expected {need} body bytes for n={n}, got {len(body)}", body_at + min(len(body), need)
        )
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    total = n * (n - 1) // 2
    if total % 6 and (body[-1] - 63) & ((1 << (6 - total % 6)) - 1):
        raise MalformedGraph6("nonzero padding bits", body_at + len(body) - 1)
    return Graph._from_adj(adj)


def parse_edge_list(text: str) -> Graph:
    """One ``u v`` pair per line, 0-based, ``#`` comments.

    A line holding a single integer fixes the vertex count (otherwise it is
    one more than the largest id), which lets isolated vertices be stated.
    """
    edges = []
    n = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise MalformedEdgeList(f"line {lineno}: not integers: {raw!r}") from None
        if len(nums) == 1:
            n = nums[0]
        elif len(nums) == 2:
            edges.append((nums[0], nums[1]))
        else:
            raise MalformedEdgeList(f"line {lineno}: expected 'u v', got {raw!r}")
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph.from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def iter_graph6(lines: Iterable[bytes | str]) -> Iterator[Graph]:
    """Decode one graph per line, skipping blank lines and ``#`` comments."""
    for lineno, line in enumerate(lines, 1):
        s = line.strip()
        if not s or s[:1] in (b"#", "#"):
            continue
        try:
            yield decode_graph6(s)
        except MalformedGraph6 as exc:
            raise MalformedGraph6(f"line {lineno}: {exc.detail}", exc.position) from None


def read_graphs(path: str | Path, fmt: str = "graph6") -> list[Graph]:
    p = Path(path)
    if fmt == "graph6":
        with p.open("rb") as fh:
            return list(iter_graph6(fh))
    if fmt == "edges":
        return [parse_edge_list(p.read_text())]
    raise ValueError(f"unknown format {fmt!r}")
