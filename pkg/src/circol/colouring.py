"""Colour graphs of bounded circumference with small monochromatic components.

:func:`fragment_colour` takes a graph whose circumference is at most ``k``
and an optional precoloured clique ``C`` of at most two vertices. It returns
a colouring with at most ``floor(3 log2 k)`` colours (``C``'s colours
included) in which every monochromatic component has at most ``k`` vertices
and any monochromatic component meeting ``C`` lies inside ``C``.

The recursion picks the first case that applies:

* at most two vertices: colour directly;
* ``k == 2``: the graph is a forest, so 2-colour it properly (contracting
  ``C`` first when its two vertices share a colour);
* three vertices: one fresh colour on ``V - C``;
* a separation of order <= 2 exists: colour the side holding ``C``, then
  the other side with the separator precoloured;
* 3-connected: shrink ``k`` to the circumference, give a longest cycle
  ``Q`` one fresh colour, and colour ``G - V(Q) - C`` with parameter
  ``max(2, k // 2)`` from a disjoint palette.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from . import bounds
from .connectivity import connected_components, find_separation
from .cycles import circumference, longest_cycle
from .errors import PreconditionError
from .graph import Graph, add_edge, contract_edge, induced_subgraph

__all__ = [
    "PrecolouredClique",
    "Options",
    "TraceNode",
    "fragment_colour",
    "colour_bounded_circumference",
    "canonical_relabel",
    "colour_count",
]


@dataclass(frozen=True)
class PrecolouredClique:
    """At most two pairwise adjacent vertices with fixed colours."""

    vertices: tuple[int, ...] = ()
    colours: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "colours", tuple(self.colours))
        if len(self.vertices) != len(self.colours):
            raise PreconditionError("precoloured vertices and colours differ in length")
        if len(self.vertices) > 2:
            raise PreconditionError("a precoloured clique has at most 2 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise PreconditionError("repeated precoloured vertex")
        if any(c < 0 for c in self.colours):
            raise PreconditionError("colours are non-negative integers")

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> "PrecolouredClique":
        items = sorted(mapping.items())
        return cls(tuple(v for v, _ in items), tuple(c for _, c in items))

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.vertices, self.colours))

    def check(self, G: Graph) -> None:
        for v in self.vertices:
            if not 0 <= v < G.n:
                raise PreconditionError(f"precoloured vertex {v} out of range")
        if len(self.vertices) == 2 and not G.has_edge(*self.vertices):
            raise PreconditionError(f"precoloured vertices {self.vertices} are not adjacent")


@dataclass(frozen=True)
class Options:
    recompute_circumference: bool = True
    assert_circumference: bool = False
    emit_trace: bool = False


@dataclass
class TraceNode:
    """One step of the recursion. ``separator`` and ``cycle`` use top-level ids."""

    branch: str  # base | separation | k-reduction | cycle-deletion
    k: int
    n: int
    separator: tuple[int, ...] = ()
    cycle: tuple[int, ...] = ()
    palettes: dict = field(default_factory=dict)
    children: list["TraceNode"] = field(default_factory=list)

    def walk(self, depth: int = 0):
        yield depth, self
        for child in self.children:
            yield from child.walk(depth + 1)

    def lines(self) -> list[str]:
        out = []
        for depth, node in self.walk():
            sep = ",".join(map(str, node.separator)) or "-"
            out.append(f"{depth} {node.branch} k={node.k} n={node.n} S={sep} Q={len(node.cycle)}")
        return out


def colour_count(col: Iterable[int]) -> int:
    return len(set(col))


def canonical_relabel(col: list[int]) -> list[int]:
    """Rename colours to 0, 1, ... in order of first appearance."""
    names: dict[int, int] = {}
    return [names.setdefault(c, len(names)) for c in col]


def _smallest_free(taken: Iterable[int]) -> int:
    taken = set(taken)
    c = 0
    while c in taken:
        c += 1
    return c


def _fresh_ids(count: int, taken: Iterable[int]) -> list[int]:
    """The ``count`` smallest ids outside ``taken``."""
    taken = set(taken)
    out = []
    c = 0
    while len(out) < count:
        if c not in taken:
            out.append(c)
        c += 1
    return out


def fragment_colour(G: Graph, k: int, C: PrecolouredClique | None = None,
                    opts: Options | None = None) -> tuple[list[int], TraceNode | None]:
    """Colour ``G`` (circumference at most ``k``) honouring the clique ``C``.

    Returns the colouring as a list indexed by vertex and, when
    ``opts.emit_trace`` is set, the recursion tree. Colours of ``C`` are kept;
    with ``C`` empty the result is relabelled to ``0..c-1`` by first
    appearance.

    Raises :class:`PreconditionError` if ``C`` is not a clique of ``G`` or the
    circumference turns out to exceed ``k``.
    """
    if k < 2:
        raise PreconditionError(f"k must be at least 2, got {k}")
    C = C or PrecolouredClique()
    opts = opts or Options()
    C.check(G)
    if opts.assert_circumference and circumference(G) > k:
        raise PreconditionError(f"circumference of G exceeds k={k}")
    col, trace = _colour(G, k, C.as_dict(), opts, tuple(range(G.n)))
    if not C.vertices:
        col = canonical_relabel(col)
    return col, trace


def colour_bounded_circumference(G: Graph, opts: Options | None = None) -> tuple[list[int], int]:
    """Colour ``G`` with ``k = max(circumference(G), 2)``; returns ``(colouring, k)``."""
    k = max(circumference(G), 2)
    col, _ = fragment_colour(G, k, None, opts)
    return col, k


def _colour(G: Graph, k: int, pre: dict[int, int], opts: Options,
            labels: tuple[int, ...]) -> tuple[list[int], TraceNode | None]:
    node = TraceNode("base", k, G.n) if opts.emit_trace else None
    if G.n <= 2:
        return _colour_tiny(G, pre), node
    if k == 2:
        return _colour_forest(G, pre), node
    if G.n == 3:
        fresh = _smallest_free(pre.values())
        return [pre.get(v, fresh) for v in range(3)], node
    sep = find_separation(G)
    if sep is not None:
        if node:
            node.branch = "separation"
            node.separator = tuple(labels[v] for v in sep.separator)
        return _colour_separation(G, k, pre, opts, labels, sep, node), node
    return _colour_three_connected(G, k, pre, opts, labels, node)


def _colour_tiny(G: Graph, pre: dict[int, int]) -> list[int]:
    col = [-1] * G.n
    for v, c in pre.items():
        col[v] = c
    for v in range(G.n):
        if col[v] < 0:
            col[v] = _smallest_free(pre[w] for w in G.neighbours(v) if w in pre)
    return col


def _colour_forest(G: Graph, pre: dict[int, int]) -> list[int]:
    if G.m != G.n - len(connected_components(G)):
        raise PreconditionError("k = 2 but the graph has a cycle")
    if len(pre) == 2 and len(set(pre.values())) == 1:
        u, v = sorted(pre)
        shade = pre[u]
        H, idmap = contract_edge(G, u, v)
        small = _two_colour(H, {idmap[u]: shade}, (shade, _smallest_free([shade])))
        return [small[idmap[x]] for x in range(G.n)]
    given = list(dict.fromkeys(pre[v] for v in sorted(pre)))
    if len(given) == 2:
        palette = (given[0], given[1])
    elif len(given) == 1:
        palette = (given[0], _smallest_free(given))
    else:
        palette = (0, 1)
    return _two_colour(G, pre, palette)


def _two_colour(G: Graph, pre: dict[int, int], palette: tuple[int, int]) -> list[int]:
    """Proper 2-colouring of a forest; each tree is rooted at a precoloured vertex if it has one."""
    col = [-1] * G.n
    for comp in connected_components(G):
        rooted = [v for v in comp if v in pre]
        root = rooted[0] if rooted else comp[0]
        col[root] = pre.get(root, palette[0])
        other = {palette[0]: palette[1], palette[1]: palette[0]}
        stack = [root]
        while stack:
            v = stack.pop()
            for w in G.neighbours(v):
                if col[w] < 0:
                    col[w] = other[col[v]]
                    stack.append(w)
    for v, c in pre.items():
        if col[v] != c:
            raise PreconditionError("precolouring is incompatible with a proper 2-colouring")
    return col


def _colour_separation(G, k, pre, opts, labels, sep, node) -> list[int]:
    S = sep.separator
    first, second = sep.side1, sep.side2
    if not set(pre) <= set(first):
        first, second = second, first

    def side_graph(side):
        H, idmap = induced_subgraph(G, side)
        if len(S) == 2:
            H = add_edge(H, idmap[S[0]], idmap[S[1]])
        return H, idmap

    H1, m1 = side_graph(first)
    col1, t1 = _colour(H1, k, {m1[v]: c for v, c in pre.items()}, opts,
                       tuple(labels[v] for v in first))
    on_s = {v: col1[m1[v]] for v in S}

    H2, m2 = side_graph(second)
    col2, t2 = _colour(H2, k, {m2[v]: c for v, c in on_s.items()}, opts,
                       tuple(labels[v] for v in second))

    # Rename side-2 colours that do not appear on S into side 1's palette
    # (avoiding S's colours), so the total is the larger of the two counts.
    s_colours = set(on_s.values())
    side1_colours = set(col1)
    own = sorted(set(col2) - s_colours)
    spare = sorted(side1_colours - s_colours)[:len(own)]
    extra = _fresh_ids(len(own) - len(spare), side1_colours)
    rename = dict(zip(own, spare + extra))

    col = [-1] * G.n
    for v in first:
        col[v] = col1[m1[v]]
    for v in second:
        c = col2[m2[v]]
        col[v] = rename.get(c, c)
    if node:
        node.children.extend(t for t in (t1, t2) if t is not None)
    return col


def _colour_three_connected(G, k, pre, opts, labels, node):
    Q = longest_cycle(G)
    if Q is None or len(Q) > k:
        raise PreconditionError(f"circumference of G exceeds k={k}")
    top = node
    if opts.recompute_circumference and len(Q) < k:
        k = len(Q)
        if node:
            node.branch = "k-reduction"
            child = TraceNode("base", k, G.n)
            node.children.append(child)
            node = child
    if node:
        node.branch = "cycle-deletion"
        node.cycle = tuple(labels[v] for v in Q)

    on_cycle = set(Q) | set(pre)
    rest = [v for v in range(G.n) if v not in on_cycle]
    sub_k = max(2, k // 2)
    Gp, mp = induced_subgraph(G, rest)
    if opts.assert_circumference:
        limit = sub_k if len(Q) < 9 else min(sub_k, bounds.deletion_bound(len(Q)))
        if circumference(Gp) > limit:
            raise AssertionError(f"G - S has circumference above {limit}")
    colp, tp = _colour(Gp, sub_k, {}, opts, tuple(labels[v] for v in rest)) if rest else ([], None)

    given = set(pre.values())
    fresh = _smallest_free(given)
    own = sorted(set(colp))
    rename = dict(zip(own, _fresh_ids(len(own), given | {fresh})))

    col = [-1] * G.n
    for v in Q:
        col[v] = fresh
    for v, c in pre.items():
        col[v] = c
    for v in rest:
        col[v] = rename[colp[mp[v]]]
    if node:
        node.palettes = {"clique": sorted(given), "cycle": [fresh], "rest": sorted(rename.values())}
        if tp is not None:
            node.children.append(tp)
    return col, top
