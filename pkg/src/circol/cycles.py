"""Exact circumference, longest cycles and longest paths.

The searches run per biconnected block (every cycle lives inside one block)
through the kernel backend chosen in :mod:`circol.kernels`.
"""

from __future__ import annotations

from .connectivity import biconnected_components, find_separation
from .errors import InfeasibleError
from .graph import Graph, add_edge, induced_subgraph
from . import kernels

__all__ = [
    "circumference",
    "longest_cycle",
    "has_cycle_at_least",
    "longest_path_order",
    "circumference_subset_dp",
    "check_cycle",
    "canonical_cycle",
    "SUBSET_DP_LIMIT",
]

SUBSET_DP_LIMIT = 15


# blocks up to this order go straight to the kernel
DIRECT_LIMIT = 20


def _blocks(G: Graph):
    for block in biconnected_components(G):
        if len(block) >= 3:
            sub, _ = induced_subgraph(G, block)
            yield block, sub


def canonical_cycle(cyc: list[int]) -> list[int]:
    """Rotate to start at the least vertex, heading toward its smaller neighbour."""
    i = cyc.index(min(cyc))
    rot = cyc[i:] + cyc[:i]
    if rot[1] > rot[-1]:
        rot = [rot[0]] + rot[:0:-1]
    return rot


def _better(a: list[int] | None, b: list[int] | None) -> bool:
    """Is ``a`` preferred over ``b``: longer, then lexicographically smaller."""
    if a is None:
        return False
    if b is None:
        return True
    return len(a) > len(b) or (len(a) == len(b) and a < b)


def _block_longest(B: Graph, k) -> list[int] | None:
    """Longest cycle of a 2-connected graph ``B``.

    Large blocks are split at a 2-cut {a, b}: a longest cycle either stays in
    one side (with the edge ab added) or runs a-b through each side, so
    ``max(side1 + ab, side2 + ab, LP1 + LP2 - 2)`` with ``LPi`` the longest
    a-b path through side i. A cycle using an added ab is always beaten by
    the crossing term, so the winner is a real cycle of ``B``.
    """
    sep = None
    if B.n > DIRECT_LIMIT:
        sep = find_separation(B)
    if sep is None:
        indptr, indices = B.csr()
        return k.longest_cycle(B.n, indptr, indices, 0)
    a, b = sep.separator
    best = None
    paths = []
    for side in (sep.side1, sep.side2):
        sub, idmap = induced_subgraph(B, side)
        sub = add_edge(sub, idmap[a], idmap[b])
        inner = _block_longest(sub, k)
        if inner is not None:
            cand = canonical_cycle([side[i] for i in inner])
            if _better(cand, best):
                best = cand
        paths.append(_longest_ab_path(B, side, a, b, k))
    p1, p2 = paths
    cross = canonical_cycle(p1 + p2[::-1][1:-1])
    return cross if _better(cross, best) else best


def _longest_ab_path(B: Graph, side: tuple[int, ...], a: int, b: int, k) -> list[int]:
    """Longest a-b path inside ``side`` with at least one interior vertex.

    Searches the cycles through an auxiliary vertex 0 joined to a and b, in
    ``B[side]`` with the edge ab removed.
    """
    pos = {v: i + 1 for i, v in enumerate(side)}
    edges = [(0, pos[a]), (0, pos[b])]
    for u in side:
        for w in B.neighbours(u):
            if u < w and w in pos and {u, w} != {a, b}:
                edges.append((pos[u], pos[w]))
    H = Graph(len(side) + 1, edges)
    indptr, indices = H.csr()
    cyc = k.longest_cycle(H.n, indptr, indices, 0, 1)
    path = [side[i - 1] for i in cyc[1:]]
    return path if path[0] == a else path[::-1]


def longest_cycle(G: Graph, backend=None) -> list[int] | None:
    """A longest cycle of ``G`` in canonical form, or ``None`` for a forest.

    Canonical form starts at the least vertex and continues toward its
    smaller cycle neighbour. Ties between longest cycles go to the
    lexicographically least canonical form among the candidates examined
    (the global minimum for blocks of up to ``DIRECT_LIMIT`` vertices).
    """
    k = backend or kernels.active
    best: list[int] | None = None
    for block, sub in _blocks(G):
        if best is not None and len(block) < len(best):
            continue
        found = _block_longest(sub, k)
        if found is None:
            continue
        cyc = [block[i] for i in found]
        if _better(cyc, best):
            best = cyc
    return best


def circumference(G: Graph, backend=None) -> int:
    """Length of a longest cycle; 2 when ``G`` has no cycle."""
    cyc = longest_cycle(G, backend)
    return 2 if cyc is None else len(cyc)


def has_cycle_at_least(G: Graph, length: int, backend=None) -> bool:
    """True iff ``G`` has a cycle with at least ``length`` vertices; stops early."""
    if length < 3:
        raise ValueError("cycle lengths start at 3")
    k = backend or kernels.active
    for block, sub in _blocks(G):
        if len(block) < length:
            continue
        indptr, indices = sub.csr()
        if k.longest_cycle(sub.n, indptr, indices, length) is not None:
            return True
    return False


def longest_path_order(G: Graph, backend=None) -> int:
    """Most vertices on a simple path of ``G``."""
    k = backend or kernels.active
    indptr, indices = G.csr()
    return k.longest_path_order(G.n, indptr, indices)


def circumference_subset_dp(G: Graph, backend=None) -> int:
    """Circumference by dynamic programming over vertex subsets.

    Independent of the block decomposition and path search used by
    :func:`circumference`; limited to ``SUBSET_DP_LIMIT`` vertices.
    """
    if G.n > SUBSET_DP_LIMIT:
        raise InfeasibleError(f"subset DP limited to {SUBSET_DP_LIMIT} vertices, got {G.n}")
    k = backend or kernels.active
    masks = [sum(1 << w for w in G.neighbours(v)) for v in range(G.n)]
    return k.circumference_subset_dp(G.n, masks)


def check_cycle(G: Graph, cyc: list[int]) -> None:
    """Raise ``AssertionError`` unless ``cyc`` is a cycle of ``G``."""
    assert len(cyc) >= 3, "a cycle has at least 3 vertices"
    assert len(set(cyc)) == len(cyc), "repeated vertex"
    for i, v in enumerate(cyc):
        w = cyc[(i + 1) % len(cyc)]
        assert G.has_edge(v, w), f"{v}-{w} is not an edge"
