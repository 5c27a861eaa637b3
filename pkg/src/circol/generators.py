"""Deterministic labelled test graphs."""

from __future__ import annotations

import random

from .graph import Graph

__all__ = [
    "cycle",
    "path",
    "complete",
    "star",
    "complete_bipartite",
    "wheel",
    "petersen",
    "random_cactus",
    "random_graph",
    "tree_closure",
]


def _positive(**params: int) -> None:
    for name, value in params.items():
        if value < 1:
            raise ValueError(f"{name} must be >= 1, got {value}")


def cycle(m: int) -> Graph:
    if m < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {m}")
    return Graph(m, [(i, (i + 1) % m) for i in range(m)])


def path(m: int) -> Graph:
    _positive(m=m)
    return Graph(m, [(i, i + 1) for i in range(m - 1)])


def complete(m: int) -> Graph:
    _positive(m=m)
    return Graph(m, [(i, j) for i in range(m) for j in range(i + 1, m)])


def star(d: int) -> Graph:
    """K_{1,d} with centre 0."""
    _positive(d=d)
    return Graph(d + 1, [(0, i) for i in range(1, d + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    _positive(a=a, b=b)
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def wheel(m: int) -> Graph:
    """Hub 0 joined to a rim cycle on ``1..m-1`` (``m`` vertices in total)."""
    if m < 4:
        raise ValueError(f"a wheel needs at least 4 vertices, got {m}")
    rim = m - 1
    edges = [(0, i) for i in range(1, m)]
    edges += [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    return Graph(m, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def random_cactus(m: int, seed: int, max_cycle: int = 7) -> Graph:
    """Random connected cactus on ``m`` vertices.

    Blocks are bridges or cycles of length at most ``max_cycle``, so the
    circumference is at most ``max(max_cycle, 2)``. The same ``seed`` always
    yields the same graph.
    """
    _positive(m=m)
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    count = 1
    while count < m:
        anchor = rng.randrange(count)
        room = m - count
        longest = min(max_cycle, room + 1)
        if longest < 3 or rng.random() < 0.25:
            edges.append((anchor, count))
            count += 1
            continue
        length = rng.randint(3, longest)
        ring = [anchor] + list(range(count, count + length - 1))
        edges.extend((ring[i], ring[(i + 1) % length]) for i in range(length))
        count += length - 1
    return Graph(m, edges)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p) with a private RNG."""
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def tree_closure(depth: int, branching: int) -> Graph:
    """Closure of the complete ``branching``-ary tree of height ``depth``.

    Vertices are numbered breadth-first from the root 0; every
    ancestor-descendant pair is adjacent. ``tree_closure(2, 2)`` has 7
    vertices.
    """
    _positive(depth=depth, branching=branching)
    ancestors: list[list[int]] = [[]]
    frontier = [0]
    for _ in range(depth):
        nxt = []
        for v in frontier:
            for _ in range(branching):
                ancestors.append(ancestors[v] + [v])
                nxt.append(len(ancestors) - 1)
        frontier = nxt
    edges = [(a, v) for v, anc in enumerate(ancestors) for a in anc]
    return Graph(len(ancestors), edges)
