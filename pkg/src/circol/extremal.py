"""The lower-bound family G_{k,d} and exhaustive checks of its properties.

G_{1,d} is the star K_{1,d}; G_{k,d} is d disjoint copies of G_{k-1,d} plus
one vertex adjacent to everything. It has circumference at most 2**k, no
path on 2**(k+1) vertices, and every k-colouring has a vertex with at least
d neighbours of its own colour.
"""

from __future__ import annotations

import itertools
from array import array
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import kernels
from .cycles import circumference, longest_path_order
from .errors import InfeasibleError
from .graph import Graph

__all__ = [
    "ExtremalSpec",
    "extremal_order",
    "build_extremal",
    "StructuralReport",
    "verify_structural",
    "ForcedDegreeResult",
    "forced_degree",
    "check_forced_degree",
    "ORDER_CAP",
    "STRUCTURAL_CAP",
    "ENUMERATION_CAP",
]

ORDER_CAP = 10**4
STRUCTURAL_CAP = 64
ENUMERATION_CAP = 10**8


def extremal_order(k: int, d: int) -> int:
    if k < 1 or d < 1:
        raise ValueError("k and d must be >= 1")
    n = d + 1
    for _ in range(k - 1):
        n = d * n + 1
    return n


@dataclass(frozen=True)
class ExtremalSpec:
    k: int
    d: int

    @property
    def expected_order(self) -> int:
        return extremal_order(self.k, self.d)


def build_extremal(k: int, d: int, cap: int = ORDER_CAP) -> Graph:
    """G_{k,d}: copies laid out contiguously, the dominating vertex last."""
    n = extremal_order(k, d)
    if n > cap:
        raise InfeasibleError(f"G_{{{k},{d}}} has {n} vertices, above the cap of {cap}")
    edges = [(i, d) for i in range(d)]
    size = d + 1
    for _ in range(k - 1):
        edges = [(u + c * size, v + c * size) for c in range(d) for u, v in edges]
        hub = d * size
        edges += [(u, hub) for u in range(hub)]
        size = hub + 1
    return Graph(size, edges)


@dataclass(frozen=True)
class StructuralReport:
    k: int
    d: int
    order: int
    circumference: int
    longest_path_order: int

    @property
    def circumference_ok(self) -> bool:
        return self.circumference <= 2**self.k

    @property
    def path_ok(self) -> bool:
        return self.longest_path_order < 2 ** (self.k + 1)

    @property
    def ok(self) -> bool:
        return self.circumference_ok and self.path_ok

    def lines(self) -> list[str]:
        mark = {True: "PASS", False: "FAIL"}
        return [
            f"structural circumference={self.circumference} limit<={2**self.k} "
            f"{mark[self.circumference_ok]}",
            f"structural longest_path_order={self.longest_path_order} limit<{2**(self.k + 1)} "
            f"{mark[self.path_ok]}",
        ]


def verify_structural(k: int, d: int, backend=None) -> StructuralReport:
    n = extremal_order(k, d)
    if n > STRUCTURAL_CAP:
        raise InfeasibleError(f"{n} vertices is too large for exact cycle and path search")
    G = build_extremal(k, d)
    return StructuralReport(k, d, n, circumference(G, backend), longest_path_order(G, backend))


@dataclass(frozen=True)
class ForcedDegreeResult:
    holds: bool
    counterexample: list[int] | None = None


def _search(args):
    n, indptr, indices, colours, d, fixed, backend_name = args
    k = kernels.available()[backend_name]
    return k.low_degree_colouring(n, indptr, indices, colours, d, fixed)


def forced_degree(G: Graph, colours: int, d: int, anchor: int = 0, jobs: int = 1,
                  backend=None) -> ForcedDegreeResult:
    """Does every ``colours``-colouring of ``G`` have a vertex of monochromatic degree >= d?

    The colour of ``anchor`` is fixed to 0 (colour names are interchangeable).
    The other vertices are searched in ascending id order over colours
    ``0..colours-1``, cutting off any partial colouring that already has a
    vertex of monochromatic degree ``d``; the lexicographically first
    colouring that avoids this is reported as a counterexample.
    """
    if colours < 1 or d < 1:
        raise ValueError("colours and d must be >= 1")
    if G.n == 0:
        return ForcedDegreeResult(False, [])
    if colours ** (G.n - 1) > ENUMERATION_CAP:
        raise InfeasibleError(f"enumeration infeasible: {colours}^{G.n - 1} colourings")
    k = backend or kernels.active
    indptr, indices = G.csr()
    fixed = [-1] * G.n
    fixed[anchor] = 0
    free = [v for v in range(G.n) if v != anchor]

    if jobs <= 1 or not free:
        found = k.low_degree_colouring(G.n, indptr, indices, colours, d, fixed)
        return ForcedDegreeResult(found is None, found)

    width = 1
    while colours**width < 4 * jobs and width < len(free):
        width += 1
    tasks = []
    for prefix in itertools.product(range(colours), repeat=width):
        pinned = list(fixed)
        for v, c in zip(free, prefix):
            pinned[v] = c
        tasks.append((G.n, array("i", indptr), array("i", indices), colours, d, pinned, k.NAME))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for found in pool.map(_search, tasks):
            if found is not None:
                return ForcedDegreeResult(False, found)
    return ForcedDegreeResult(True, None)


def check_forced_degree(k: int, d: int, jobs: int = 1, backend=None) -> ForcedDegreeResult:
    """Exhaustive check that every k-colouring of G_{k,d} forces monochromatic degree d."""
    n = extremal_order(k, d)
    if k ** (n - 1) > ENUMERATION_CAP:
        raise InfeasibleError(f"enumeration infeasible: {k}^{n - 1} colourings")
    G = build_extremal(k, d)
    return forced_degree(G, k, d, anchor=G.n - 1, jobs=jobs, backend=backend)
