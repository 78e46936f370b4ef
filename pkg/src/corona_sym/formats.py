"""graph6 (short form, n <= 62) and edge-list text formats."""

from __future__ import annotations

from .graphs import Graph, GraphError, make_graph

GRAPH6_HEADER = ">>graph6<<"


class FormatError(ValueError):
    """Malformed graph text."""


def encode_graph6(g: Graph) -> str:
    """Standard short-form graph6: size byte, then column-major
    upper-triangle adjacency bits in 6-bit groups offset by 63."""
    if g.n > 62:
        raise FormatError("long-form graph6 (n > 62) not supported")
    out = [chr(63 + g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (1 if g.has_edge(i, j) else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc, nbits = 0, 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one short-form graph6 line."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    if not s:
        raise FormatError("empty graph6 line")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"character {ch!r} outside graph6 range")
    if s[0] == "~":
        raise FormatError("long-form graph6 size prefix not supported")
    n = ord(s[0]) - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    data = s[1:]
    if len(data) != need:
        raise FormatError(f"expected {need} data characters for n={n}, got {len(data)}")
    bits = []
    for ch in data:
        bits.extend((ord(ch) - 63) >> (5 - b) & 1 for b in range(6))
    if any(bits[nbits:]):
        raise FormatError("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return make_graph(n, edges)


def parse_edge_list(text: str) -> Graph:
    """Edge-list format: header line 'n <count>', then 'u v' lines with
    0-based ids; '#' starts a comment."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise FormatError("empty edge list")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise FormatError(f"bad header line {lines[0]!r}; expected 'n <count>'")
    try:
        n = int(head[1])
    except ValueError:
        raise FormatError(f"bad vertex count {head[1]!r}") from None
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"bad edge line {line!r}") from None
        edges.append((u, v))
    try:
        return make_graph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def looks_like_graph6(text: str) -> bool:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        return True
    return bool(s) and "\n" not in s and " " not in s and all(
        63 <= ord(c) <= 126 for c in s
    )


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    """Parse graph6 or edge-list input; autodetect by charset by default."""
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt != "auto":
        raise FormatError(f"unknown input format {fmt!r}")
    return parse_graph6(text) if looks_like_graph6(text) else parse_edge_list(text)
