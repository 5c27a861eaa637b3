"""Independent checks of the properties a fragment colouring must have.

Nothing here calls into the colouring engine; components are recomputed
from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .bounds import theorem1_bound
from .graph import Graph

__all__ = ["VerifyReport", "monochromatic_components", "mono_degree", "verify_fragmentation",
           "colour_budget"]

RULES = {
    "R1": "component order <= k",
    "R2": "components meeting C lie inside C",
    "R3": "colour budget",
    "R4": "C keeps its colours",
}


def _check_total(G: Graph, col: Sequence[int]) -> None:
    if len(col) != G.n:
        raise ValueError(f"colouring covers {len(col)} vertices, graph has {G.n}")
    if any(c is None or c < 0 for c in col):
        raise ValueError("colouring is partial")


def monochromatic_components(G: Graph, col: Sequence[int]) -> list[tuple[int, ...]]:
    """Connected pieces of each colour class, each sorted, ordered by least vertex."""
    _check_total(G, col)
    label = [-1] * G.n
    parts = []
    for r in range(G.n):
        if label[r] >= 0:
            continue
        label[r] = len(parts)
        queue = [r]
        for v in queue:
            for w in G.neighbours(v):
                if label[w] < 0 and col[w] == col[r]:
                    label[w] = label[r]
                    queue.append(w)
        parts.append(tuple(sorted(queue)))
    return parts


def mono_degree(G: Graph, col: Sequence[int], v: int) -> int:
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} out of range")
    return sum(1 for w in G.neighbours(v) if col[w] == col[v])


def colour_budget(k: int, clique_colours: int = 0) -> int:
    """Allowed number of colours: floor(3 log2 k), or for k = 2 the forest budget."""
    if k == 2:
        return max(2, clique_colours + 1)
    return theorem1_bound(k)


@dataclass
class VerifyReport:
    colours_used: int
    max_component_order: int
    component_partition: list[tuple[int, ...]]
    c_containment_ok: bool
    max_mono_degree: int
    budget: int
    violations: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def failed(self, rule: str) -> bool:
        return any(r == rule for r, _ in self.violations)

    def to_text(self) -> str:
        lines = []
        for rule in RULES:
            witnesses = [w for r, w in self.violations if r == rule]
            if not witnesses:
                lines.append(f"{rule} PASS")
            for w in witnesses:
                lines.append(f"{rule} FAIL witness " + ",".join(map(str, w)))
        lines.append(f"# colours={self.colours_used} budget={self.budget} "
                     f"maxcomp={self.max_component_order} maxmonodeg={self.max_mono_degree}")
        return "\n".join(lines) + "\n"


def verify_fragmentation(G: Graph, col: Sequence[int], k: int,
                         C: Mapping[int, int] | None = None) -> VerifyReport:
    """Check a colouring against the four rules.

    R1 every monochromatic component has at most ``k`` vertices; R2 every
    component meeting ``C`` is contained in ``C``; R3 the number of colours
    is within :func:`colour_budget`; R4 the vertices of ``C`` carry their
    given colours. ``C`` maps vertex to required colour.
    """
    C = dict(C or {})
    parts = monochromatic_components(G, col)
    colours = len(set(col))
    budget = colour_budget(k, len(set(C.values())))
    violations: list[tuple[str, tuple[int, ...]]] = []

    for part in parts:
        if len(part) > k:
            violations.append(("R1", part))
    inside = True
    for part in parts:
        if any(v in C for v in part) and not set(part) <= set(C):
            inside = False
            violations.append(("R2", part))
    if colours > budget:
        violations.append(("R3", tuple(sorted(set(col)))))
    wrong = tuple(sorted(v for v, c in C.items() if col[v] != c))
    if wrong:
        violations.append(("R4", wrong))

    return VerifyReport(
        colours_used=colours,
        max_component_order=max((len(p) for p in parts), default=0),
        component_partition=parts,
        c_containment_ok=inside,
        max_mono_degree=max((mono_degree(G, col, v) for v in range(G.n)), default=0),
        budget=budget,
        violations=violations,
    )
