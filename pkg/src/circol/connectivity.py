"""Cut vertices, blocks and separations of order at most two."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import PreconditionError
from .graph import Graph

__all__ = [
    "Separation",
    "connected_components",
    "articulation_points",
    "biconnected_components",
    "find_separation",
    "is_three_connected",
    "check_separation",
]


@dataclass(frozen=True)
class Separation:
    """Two sides covering the graph and meeting exactly in ``separator``."""

    separator: tuple[int, ...]
    side1: tuple[int, ...]
    side2: tuple[int, ...]


def connected_components(G: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Components of ``G - removed``, each sorted, ordered by least vertex."""
    gone = set(removed)
    seen = [False] * G.n
    comps = []
    for r in range(G.n):
        if seen[r] or r in gone:
            continue
        seen[r] = True
        comp = [r]
        for v in comp:
            for w in G.neighbours(v):
                if not seen[w] and w not in gone:
                    seen[w] = True
                    comp.append(w)
        comps.append(sorted(comp))
    return comps


def _lowpoint_dfs(G: Graph, removed: frozenset[int] | set[int]):
    """Iterative low-point DFS over ``G - removed``.

    Yields ``(parent, child, low_child, disc_parent)`` each time a tree edge
    is finished, together with the root flag of ``parent``; callers derive cut
    vertices and blocks from these events.
    """
    n = G.n
    disc = [-1] * n
    low = [0] * n
    counter = 0
    for root in range(n):
        if disc[root] >= 0 or root in removed:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, iter(G.neighbours(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w in removed:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(G.neighbours(w))))
                    advanced = True
                    break
                if w != parent and disc[w] < low[v]:
                    low[v] = disc[w]
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                if low[v] < low[parent]:
                    low[parent] = low[v]
                yield parent, v, low[v], disc[parent], parent == root


def articulation_points(G: Graph, removed: Iterable[int] = ()) -> tuple[int, ...]:
    """Cut vertices of ``G - removed`` in ascending order."""
    gone = frozenset(removed)
    cut = set()
    root_children: dict[int, int] = {}
    for parent, _child, low_child, disc_parent, at_root in _lowpoint_dfs(G, gone):
        if at_root:
            root_children[parent] = root_children.get(parent, 0) + 1
        elif low_child >= disc_parent:
            cut.add(parent)
    cut.update(r for r, c in root_children.items() if c >= 2)
    return tuple(sorted(cut))


def biconnected_components(G: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the blocks with at least two vertices (bridges included).

    Sorted by their vertex tuples. Isolated vertices belong to no block.
    """
    n = G.n
    disc = [-1] * n
    low = [0] * n
    blocks = []
    counter = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = counter
        counter += 1
        vstack = [root]
        stack = [(root, -1, iter(G.neighbours(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = counter
                    counter += 1
                    vstack.append(w)
                    stack.append((w, v, iter(G.neighbours(w))))
                    advanced = True
                    break
                if w != parent and disc[w] < low[v]:
                    low[v] = disc[w]
            if advanced:
                continue
            stack.pop()
            if parent < 0:
                continue
            if low[v] < low[parent]:
                low[parent] = low[v]
            if low[v] >= disc[parent]:
                block = [parent]
                while True:
                    x = vstack.pop()
                    block.append(x)
                    if x == v:
                        break
                blocks.append(tuple(sorted(block)))
    return sorted(blocks)


def _split(G: Graph, separator: tuple[int, ...]) -> Separation:
    comps = connected_components(G, separator)
    first = comps[0]
    rest = [v for comp in comps[1:] for v in comp]
    return Separation(
        separator=separator,
        side1=tuple(sorted(first + list(separator))),
        side2=tuple(sorted(rest + list(separator))),
    )


def find_separation(G: Graph) -> Separation | None:
    """A separation of order at most 2, or ``None`` if ``G`` is 3-connected.

    Smaller separators win, then the lexicographically least separator.
    ``side1`` is the component of ``G - S`` holding the least vertex, plus
    ``S``; ``side2`` is everything else plus ``S``.
    """
    if G.n <= 3:
        raise PreconditionError("find_separation needs at least 4 vertices")
    if len(connected_components(G)) > 1:
        return _split(G, ())
    cut = articulation_points(G)
    if cut:
        return _split(G, (cut[0],))
    for a in range(G.n):
        later = [b for b in articulation_points(G, (a,)) if b > a]
        if later:
            return _split(G, (a, later[0]))
    return None


def is_three_connected(G: Graph) -> bool:
    if G.n <= 3:
        raise PreconditionError("3-connectivity is defined here for at least 4 vertices")
    return find_separation(G) is None


def check_separation(G: Graph, sep: Separation) -> list[str]:
    """Problems with ``sep`` as a minimal separation of ``G``; empty if valid."""
    problems = []
    S = set(sep.separator)
    one, two = set(sep.side1), set(sep.side2)
    if len(S) > 2:
        problems.append("separator has more than 2 vertices")
    if one | two != set(range(G.n)):
        problems.append("sides do not cover V(G)")
    if one & two != S:
        problems.append("sides do not meet exactly in the separator")
    if one == S or two == S:
        problems.append("a side equals the separator")
    for u in one - S:
        for w in G.neighbours(u):
            if w in two - S:
                problems.append(f"edge {u}-{w} crosses the separation")
    if len(S) == 2:
        a, b = sorted(S)
        for name, side in (("side1", one), ("side2", two)):
            if not _path_avoiding_edge(G, side, a, b):
                problems.append(f"{name} has no {a}-{b} path of its own")
    return problems


def _path_avoiding_edge(G: Graph, side: set[int], a: int, b: int) -> bool:
    # a path through an interior vertex of the side; the edge ab itself
    # belongs to at most one side and does not count as a witness
    seen = {a}
    frontier = [w for w in G.neighbours(a) if w in side and w != b]
    seen.update(frontier)
    while frontier:
        v = frontier.pop()
        for w in G.neighbours(v):
            if w == b:
                return True
            if w in side and w not in seen:
                seen.add(w)
                frontier.append(w)
    return False
