"""Reading and writing graphs: graph6, DIMACS edge format, plain edge lists."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .graph import Graph, GraphError

FORMATS = ("graph6", "dimacs-col", "edge-list")


class ParseError(GraphError):
    """Malformed graph text."""


@dataclass(frozen=True)
class ParsedGraph:
    graph: Graph
    # original token for each vertex when the input used non-numeric ids
    labels: tuple[str, ...] | None = None


def parse(text: str, fmt: str) -> Graph:
    return parse_with_labels(text, fmt).graph


def parse_with_labels(text: str, fmt: str) -> ParsedGraph:
    if fmt == "graph6":
        return ParsedGraph(_parse_graph6(text))
    if fmt == "dimacs-col":
        return ParsedGraph(_parse_dimacs(text))
    if fmt == "edge-list":
        return _parse_edge_list(text)
    raise ParseError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def emit(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return _emit_graph6(g) + "\n"
    if fmt == "dimacs-col":
        lines = [f"p edge {g.n} {g.m}"] + [f"e {u + 1} {v + 1}" for u, v in g.edges]
        return "\n".join(lines) + "\n"
    if fmt == "edge-list":
        lines = [f"# n {g.n}"] + [f"{u} {v}" for u, v in g.edges]
        return "\n".join(lines) + "\n"
    raise ParseError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def guess_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix in (".g6", ".graph6"):
        return "graph6"
    if suffix in (".col", ".dimacs"):
        return "dimacs-col"
    return "edge-list"


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    fmt = fmt or guess_format(path)
    return parse(Path(path).read_text(), fmt)


def to_graph6(g: Graph) -> str:
    return _emit_graph6(g)


def from_graph6(s: str) -> Graph:
    return _parse_graph6(s)


# graph6


def _emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [63 + n]
    elif n <= 258047:
        head = [126] + [63 + ((n >> s) & 63) for s in (12, 6, 0)]
    else:
        head = [126, 126] + [63 + ((n >> s) & 63) for s in (30, 24, 18, 12, 6, 0)]
    bits = []
    masks = g.masks
    for j in range(1, n):
        for i in range(j):
            bits.append(masks[i] >> j & 1)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(63 + val)
    return bytes(head + body).decode("ascii")


def _parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= x <= 63 for x in data):
        raise ParseError("graph6 characters must lie in the range '?'..'~'")
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) >= 4 and data[1] < 63:
        n, pos = (data[1] << 12) | (data[2] << 6) | data[3], 4
    elif len(data) >= 8:
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        pos = 8
    else:
        raise ParseError("truncated graph6 size header")
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


# DIMACS


def _parse_dimacs(text: str) -> Graph:
    n = m = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if n is not None:
                raise ParseError(f"line {lineno}: second problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ParseError(f"line {lineno}: expected 'p edge <n> <m>'")
            n, m = _ints(parts[2:], lineno)
            if n < 0 or m < 0:
                raise ParseError(f"line {lineno}: negative size in header")
        elif parts[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: expected 'e <u> <v>'")
            u, v = _ints(parts[1:], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"line {lineno}: vertex out of range 1..{n}")
            if u == v:
                raise ParseError(f"line {lineno}: loop at vertex {u}")
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise ParseError("missing problem line 'p edge <n> <m>'")
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


# edge lists


def _parse_edge_list(text: str) -> ParsedGraph:
    declared_n = None
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line, _, comment = raw.partition("#")
        head = comment.split()
        if len(head) == 2 and head[0] == "n" and not line.strip():
            declared_n = _ints(head[1:], lineno)[0]
            continue
        parts = line.split()
        if not parts:
            continue
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two vertex ids, got {line.strip()!r}")
        pairs.append((parts[0], parts[1]))

    tokens = [t for p in pairs for t in p]
    numeric = all(t.isdigit() for t in tokens)
    labels: tuple[str, ...] | None = None
    if numeric:
        ids = [(int(a), int(b)) for a, b in pairs]
        n = max((max(p) for p in ids), default=-1) + 1
        if declared_n is not None:
            if declared_n < n:
                raise ParseError(f"vertex id {n - 1} out of range for declared n={declared_n}")
            n = declared_n
    else:
        index: dict[str, int] = {}
        for t in tokens:
            index.setdefault(t, len(index))
        ids = [(index[a], index[b]) for a, b in pairs]
        n = len(index)
        labels = tuple(index)

    seen = set()
    edges = []
    for u, v in ids:
        if u == v:
            raise ParseError(f"loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key not in seen:
            seen.add(key)
            edges.append((u, v))
    return ParsedGraph(Graph(n, edges), labels)
