"""Small simple graphs: graph6 I/O, biconnectivity, isomorph-free enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from . import kernels
from .matroid import GraphicMatroid, MAX_GROUND

MAX_ORDER = 10
MAX_G6_ORDER = 62
ENUMERATION_ORDERS = range(3, 8)
G6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class SimpleGraph:
    """Simple graph on ``range(vertex_count)``; edges ``(u, v)`` with ``u < v``, sorted."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not 0 <= self.vertex_count <= MAX_ORDER:
            raise GraphError(f"order {self.vertex_count} outside [0, {MAX_ORDER}]")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphError(f"edge ({u}, {v}) references a missing vertex")
            e = (min(u, v), max(u, v))
            if e in norm:
                raise GraphError(f"repeated edge {e}")
            norm.add(e)
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "SimpleGraph":
        """Decode an edge mask in graph6 column order."""
        pairs = kernels.edge_pairs(n)
        return cls(n, tuple(pairs[e] for e in range(len(pairs)) if mask >> e & 1))

    @property
    def mask(self) -> int:
        out = 0
        for u, v in self.edges:
            out |= 1 << kernels.edge_index(u, v)
        return out

    def neighbours(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def to_graph6(self) -> str:
        return to_graph6(self)


def parse_graph6(line: str) -> SimpleGraph:
    """Decode one graph6 record (trailing newline allowed)."""
    text = line.rstrip("\r\n")
    if text.startswith(G6_HEADER):
        text = text[len(G6_HEADER):]
    if not text:
        raise GraphError("empty graph6 record")
    data = text.encode("latin-1")
    for b in data:
        if not 63 <= b <= 126:
            raise GraphError(f"byte {b} outside the graph6 range [63, 126]")
    n = data[0] - 63
    if n > MAX_G6_ORDER:
        raise GraphError("graphs with more than 62 vertices are not supported")
    if n > MAX_ORDER:
        raise GraphError(f"order {n} exceeds the supported maximum {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) < nbytes:
        raise GraphError("truncated graph6 bit stream")
    if len(body) > nbytes:
        raise GraphError("trailing bytes after graph6 bit stream")
    bits = []
    for b in body:
        v = b - 63
        bits.extend((v >> (5 - i)) & 1 for i in range(6))
    pairs = kernels.edge_pairs(n)
    return SimpleGraph(n, tuple(pairs[k] for k in range(nbits) if bits[k]))


def to_graph6(g: SimpleGraph) -> str:
    n = g.vertex_count
    nbits = n * (n - 1) // 2
    mask = g.mask
    bits = [(mask >> k) & 1 for k in range(nbits)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + n)]
    for i in range(0, len(bits), 6):
        v = 0
        for b in bits[i:i + 6]:
            v = (v << 1) | b
        out.append(chr(63 + v))
    return "".join(out)


def read_graph6_file(path: str | Path) -> Iterator[SimpleGraph]:
    """Yield graphs from a graph6 file, skipping blank lines and the optional header."""
    with open(path, encoding="latin-1") as fh:
        for line in fh:
            line = line.strip()
            if line.startswith(G6_HEADER):
                line = line[len(G6_HEADER):]
            if line:
                yield parse_graph6(line)


def is_biconnected(g: SimpleGraph) -> bool:
    """Connected, at least three vertices, and no articulation vertex.

    Lowpoint depth-first search from vertex 0.
    """
    n = g.vertex_count
    if n < 3:
        return False
    adj = g.neighbours()
    disc = [-1] * n
    low = [0] * n
    timer = 0
    # iterative DFS: (vertex, parent, neighbour iterator)
    disc[0] = low[0] = timer
    timer += 1
    stack = [(0, -1, iter(adj[0]))]
    root_children = 0
    while stack:
        v, parent, it = stack[-1]
        w = next(it, None)
        if w is None:
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if stack[-1][1] != -1 and low[v] >= disc[u]:
                    return False
            continue
        if w == parent:
            continue
        if disc[w] == -1:
            disc[w] = low[w] = timer
            timer += 1
            if v == 0:
                root_children += 1
            stack.append((w, v, iter(adj[w])))
        else:
            low[v] = min(low[v], disc[w])
    if any(d == -1 for d in disc):
        return False
    return root_children < 2


def is_connected_graph(g: SimpleGraph) -> bool:
    n = g.vertex_count
    if n == 0:
        return False
    adj = g.neighbours()
    seen = {0}
    todo = [0]
    while todo:
        v = todo.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == n


def _check_order(n: int, allowed) -> None:
    if n not in allowed:
        raise GraphError(f"order {n} outside [{allowed.start}, {allowed.stop - 1}]")


def enumerate_biconnected(n: int) -> list[SimpleGraph]:
    """Biconnected graphs on ``n`` vertices up to isomorphism, by ascending canonical mask."""
    _check_order(n, ENUMERATION_ORDERS)
    graphs = (SimpleGraph.from_mask(n, m) for m in kernels.canonical_reps(n, 2))
    return [g for g in graphs if is_biconnected(g)]


def enumerate_connected(n: int) -> list[SimpleGraph]:
    """Connected graphs on ``n`` vertices up to isomorphism (``1 <= n <= 7``)."""
    _check_order(n, range(1, 8))
    graphs = (SimpleGraph.from_mask(n, m) for m in kernels.canonical_reps(n, 1 if n > 1 else 0))
    return [g for g in graphs if is_connected_graph(g)]


def oracle_biconnected_count(n: int) -> int:
    """Independent count: filter every labelled graph, then dedupe by a
    different canonical form (maximum over degree-descending labellings)."""
    _check_order(n, ENUMERATION_ORDERS)
    return len(kernels.oracle_forms(n, "biconnected"))


def cycle_matroid(g: SimpleGraph) -> GraphicMatroid:
    if len(g.edges) > MAX_GROUND:
        raise GraphError(f"{len(g.edges)} edges exceed the matroid cap of {MAX_GROUND}")
    return GraphicMatroid(g.vertex_count, g.edges)


def cycle(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple((i, j) for j in range(n) for i in range(j)))


def path(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple((i, i + 1) for i in range(n - 1)))
