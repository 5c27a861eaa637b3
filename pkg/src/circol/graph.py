"""Immutable simple undirected graphs on dense vertex ids ``0..n-1``.

Every operation that "changes" a graph returns a new :class:`Graph` together
with an explicit id-map, so callers can move colours between a graph and the
graphs derived from it.
"""

from __future__ import annotations

from array import array
from pathlib import Path
from typing import Iterable, Sequence

from .errors import GraphFormatError, PreconditionError

__all__ = [
    "Graph",
    "vertex_set",
    "from_edge_list",
    "to_edge_list",
    "read_edge_list",
    "write_edge_list",
    "induced_subgraph",
    "delete_vertices",
    "add_edge",
    "contract_edge",
]


class Graph:
    """Simple undirected graph with sorted adjacency tuples.

    >>> g = Graph(3, [(0, 1), (1, 2)])
    >>> g.neighbours(1)
    (0, 2)
    """

    __slots__ = ("n", "_adj", "_sets", "_csr")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            sets[u].add(v)
            sets[v].add(u)
        self.n = n
        self._adj = tuple(tuple(sorted(s)) for s in sets)
        self._sets = tuple(frozenset(s) for s in sets)
        self._csr = None

    @classmethod
    def _from_sets(cls, sets: Sequence[Iterable[int]]) -> "Graph":
        g = cls.__new__(cls)
        g.n = len(sets)
        g._adj = tuple(tuple(sorted(s)) for s in sets)
        g._sets = tuple(frozenset(a) for a in g._adj)
        g._csr = None
        return g

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbour_set(self, v: int) -> frozenset[int]:
        return self._sets[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def csr(self) -> tuple[array, array]:
        """Compressed adjacency ``(indptr, indices)`` as int32 arrays."""
        if self._csr is None:
            indptr = array("i", [0])
            indices = array("i")
            for a in self._adj:
                indices.extend(a)
                indptr.append(len(indices))
            self._csr = (indptr, indices)
        return self._csr

    def validate(self) -> None:
        """Raise ``AssertionError`` if an internal invariant is broken."""
        for v, a in enumerate(self._adj):
            assert list(a) == sorted(set(a)), f"adjacency of {v} not strictly sorted"
            for w in a:
                assert 0 <= w < self.n, f"neighbour {w} of {v} out of range"
                assert w != v, f"self-loop at {v}"
                assert v in self._sets[w], f"asymmetric edge {v}-{w}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def vertex_set(G: Graph, vertices: Iterable[int]) -> tuple[int, ...]:
    """Sorted tuple of distinct ids, checked against ``G``."""
    vs = tuple(sorted(set(vertices)))
    for v in vs:
        if not 0 <= v < G.n:
            raise PreconditionError(f"vertex {v} out of range for n={G.n}")
    return vs


# ---------------------------------------------------------------- edge lists


def from_edge_list(text: str | bytes) -> Graph:
    """Parse the edge-list format: header ``n m`` then ``m`` lines ``u v``.

    Lines starting with ``#`` and blank lines are skipped. Duplicate edges
    collapse to one.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise GraphFormatError("missing header line 'n m'")
    lineno, header = rows[0]
    n, m = _two_ints(header, lineno)
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {lineno}: negative header value")
    body = rows[1:]
    if len(body) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(body)} edge lines follow")
    edges = []
    for lineno, parts in body:
        u, v = _two_ints(parts, lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex id out of range 0..{n - 1}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop {u} {v}")
        edges.append((u, v))
    return Graph(n, edges)


def _two_ints(parts: list[str], lineno: int) -> tuple[int, int]:
    if len(parts) != 2:
        raise GraphFormatError(f"line {lineno}: expected two integers")
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected two integers") from None
    return a, b


def to_edge_list(G: Graph) -> str:
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path: str | Path) -> Graph:
    return from_edge_list(Path(path).read_bytes())


def write_edge_list(G: Graph, path: str | Path) -> None:
    Path(path).write_bytes(to_edge_list(G).encode("utf-8"))


# ---------------------------------------------------------------- operations


def induced_subgraph(G: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``keep`` with its order-preserving relabelling."""
    kept = vertex_set(G, keep)
    idmap = {v: i for i, v in enumerate(kept)}
    sets = [[idmap[w] for w in G.neighbours(v) if w in idmap] for v in kept]
    return Graph._from_sets(sets), idmap


def delete_vertices(G: Graph, removed: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """``G - removed``; shorthand for inducing on the complement."""
    gone = set(vertex_set(G, removed))
    return induced_subgraph(G, (v for v in range(G.n) if v not in gone))


def add_edge(G: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise PreconditionError(f"cannot add self-loop at {u}")
    vertex_set(G, (u, v))
    if G.has_edge(u, v):
        return G
    sets = [set(a) for a in G.adjacency()]
    sets[u].add(v)
    sets[v].add(u)
    return Graph._from_sets(sets)


def contract_edge(G: Graph, u: int, v: int) -> tuple[Graph, list[int]]:
    """Merge the ends of edge ``uv`` into one vertex.

    The merged vertex takes the place of ``min(u, v)``; ids above
    ``max(u, v)`` shift down by one. Returns the contracted graph and a list
    sending each old id to its new id.
    """
    vertex_set(G, (u, v))
    if not G.has_edge(u, v):
        raise PreconditionError(f"{u}-{v} is not an edge")
    keep, drop = min(u, v), max(u, v)
    idmap = [x if x < drop else x - 1 for x in range(G.n)]
    idmap[drop] = idmap[keep]
    sets: list[set[int]] = [set() for _ in range(G.n - 1)]
    for a, b in G.edges():
        x, y = idmap[a], idmap[b]
        if x != y:
            sets[x].add(y)
            sets[y].add(x)
    return Graph._from_sets(sets), idmap
