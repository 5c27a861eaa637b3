"""Brute-force optimal colour counts for small graphs.

Ground truth for the constructive colouring: the fewest colours such that
every monochromatic component has at most ``d`` vertices (fragment mode), or
every vertex has at most ``d`` neighbours of its own colour (defective mode).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from .errors import InfeasibleError
from .graph import Graph

__all__ = [
    "ORACLE_LIMIT",
    "search_colouring",
    "optimal_colouring",
    "min_fragmentation_colours",
    "min_defective_colours",
]

ORACLE_LIMIT = 16


def _order(G: Graph) -> list[int]:
    """Breadth-first from vertex 0, then from each next unreached vertex."""
    seen = [False] * G.n
    order = []
    for r in range(G.n):
        if seen[r]:
            continue
        seen[r] = True
        start = len(order)
        order.append(r)
        while start < len(order):
            v = order[start]
            start += 1
            for w in G.neighbours(v):
                if not seen[w]:
                    seen[w] = True
                    order.append(w)
    return order


def search_colouring(G: Graph, c: int, d: int, mode: str = "fragment") -> list[int] | None:
    """Some ``c``-colouring meeting the ``mode`` constraint with bound ``d``, or ``None``.

    Backtracking in breadth-first vertex order. The first vertex gets colour
    0 and a new colour is only opened after all smaller ones are in use.
    """
    if mode not in ("fragment", "defective"):
        raise ValueError(f"unknown mode {mode!r}")
    order = _order(G)
    col = [-1] * G.n
    mdeg = [0] * G.n

    def component_too_big(v: int) -> bool:
        seen = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for w in G.neighbours(x):
                if w not in seen and col[w] == col[v]:
                    seen.add(w)
                    if len(seen) > d:
                        return True
                    stack.append(w)
        return len(seen) > d

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for colour in range(min(used + 1, c)):
            col[v] = colour
            if mode == "fragment":
                ok = not component_too_big(v)
                if ok and place(i + 1, max(used, colour + 1)):
                    return True
            else:
                same = [w for w in G.neighbours(v) if col[w] == colour]
                for w in same:
                    mdeg[w] += 1
                mdeg[v] = len(same)
                ok = mdeg[v] <= d and all(mdeg[w] <= d for w in same)
                if ok and place(i + 1, max(used, colour + 1)):
                    return True
                for w in same:
                    mdeg[w] -= 1
                mdeg[v] = 0
            col[v] = -1
        return False

    return list(col) if place(0, 0) else None


def _feasible(args):
    G, c, d, mode = args
    return c, search_colouring(G, c, d, mode)


def optimal_colouring(G: Graph, d: int, mode: str = "fragment",
                      jobs: int = 1) -> tuple[int, list[int]]:
    """Fewest colours and a witness colouring for the ``mode`` constraint."""
    if G.n > ORACLE_LIMIT:
        raise InfeasibleError(f"oracle limited to {ORACLE_LIMIT} vertices, got {G.n}")
    if mode == "fragment" and d < 1:
        raise ValueError("component order bound must be >= 1")
    if d < 0:
        raise ValueError("degree bound must be >= 0")
    if G.n == 0:
        return 0, []
    candidates = list(range(1, G.n + 1))
    if jobs <= 1:
        for c in candidates:
            found = search_colouring(G, c, d, mode)
            if found is not None:
                return c, found
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for start in range(0, len(candidates), jobs):
                batch = [(G, c, d, mode) for c in candidates[start:start + jobs]]
                for c, found in pool.map(_feasible, batch):
                    if found is not None:
                        return c, found
    raise AssertionError("n colours always suffice")


def min_fragmentation_colours(G: Graph, d: int, jobs: int = 1) -> int:
    """Fewest colours with every monochromatic component of order at most ``d``."""
    return optimal_colouring(G, d, "fragment", jobs)[0]


def min_defective_colours(G: Graph, d: int, jobs: int = 1) -> int:
    """Fewest colours with every monochromatic degree at most ``d``."""
    return optimal_colouring(G, d, "defective", jobs)[0]
