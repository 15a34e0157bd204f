"""Partial proper edge colorings and Kempe chains.

Colors are the integers ``1..palette``; ``0`` marks an uncolored edge.
Colorings are immutable; every recoloring returns a new value.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from edgesplit.multigraph import Multigraph

UNCOLORED = 0


class ColoringError(ValueError):
    pass


class StaleChainError(ColoringError):
    """The chain was traced on a different coloring than the one being swapped."""


@dataclass(frozen=True)
class Violation:
    vertex: int
    edge_a: int
    edge_b: int
    color: int

    def __str__(self) -> str:
        return f"edges {self.edge_a} and {self.edge_b} share color {self.color} at vertex {self.vertex}"


@dataclass(frozen=True, eq=False)
class EdgeColoring:
    graph: Multigraph
    palette: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.colors) != self.graph.m:
            raise ColoringError(f"{len(self.colors)} colors for {self.graph.m} edges")
        for e, c in enumerate(self.colors):
            if c != UNCOLORED and not 1 <= c <= self.palette:
                raise ColoringError(f"edge {e}: color {c} outside palette 1..{self.palette}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return (self.graph, self.palette, self.colors) == (other.graph, other.palette, other.colors)

    def __hash__(self) -> int:
        return hash((self.palette, self.colors))

    @classmethod
    def empty(cls, graph: Multigraph, palette: int) -> EdgeColoring:
        return cls(graph, palette, (UNCOLORED,) * graph.m)

    @classmethod
    def from_mapping(cls, graph: Multigraph, palette: int, assignment: Mapping[int, int]) -> EdgeColoring:
        cols = [UNCOLORED] * graph.m
        for e, c in assignment.items():
            cols[e] = c
        return cls(graph, palette, tuple(cols))

    @property
    def full(self) -> frozenset[int]:
        return frozenset(range(1, self.palette + 1))

    def color(self, e: int) -> int:
        return self.colors[e]

    def is_total(self) -> bool:
        return UNCOLORED not in self.colors

    def uncolored(self) -> list[int]:
        return [e for e, c in enumerate(self.colors) if c == UNCOLORED]

    def colored_edges(self) -> list[int]:
        return [e for e, c in enumerate(self.colors) if c != UNCOLORED]

    @cached_property
    def _at(self) -> tuple[dict[int, int], ...]:
        # per vertex: color -> edge carrying it (last writer wins on improper input)
        at: list[dict[int, int]] = [{} for _ in range(self.graph.n)]
        for e, c in enumerate(self.colors):
            if c != UNCOLORED:
                u, v = self.graph.edges[e]
                at[u][c] = e
                at[v][c] = e
        return tuple(at)

    def present(self, v: int) -> frozenset[int]:
        return frozenset(self._at[v])

    def missing(self, v: int) -> frozenset[int]:
        return self.full - self._at[v].keys()

    def edge_with(self, v: int, c: int) -> int | None:
        """The edge at ``v`` colored ``c``, if any."""
        return self._at[v].get(c)

    def color_class(self, alpha: int) -> frozenset[int]:
        if not 1 <= alpha <= self.palette:
            raise ColoringError(f"color {alpha} outside palette 1..{self.palette}")
        return frozenset(e for e, c in enumerate(self.colors) if c == alpha)

    def used_colors(self) -> set[int]:
        return {c for c in self.colors if c != UNCOLORED}

    def colors_of(self, edge_ids: Iterable[int]) -> set[int]:
        return {self.colors[e] for e in edge_ids if self.colors[e] != UNCOLORED}

    def recolor(self, changes: Mapping[int, int]) -> EdgeColoring:
        cols = list(self.colors)
        for e, c in changes.items():
            cols[e] = c
        return EdgeColoring(self.graph, self.palette, tuple(cols))

    def with_palette(self, palette: int) -> EdgeColoring:
        return EdgeColoring(self.graph, palette, self.colors)

    def permute(self, mapping: Mapping[int, int], palette: int | None = None) -> EdgeColoring:
        """Rename colors through ``mapping`` (colors absent from it keep their value)."""
        cols = tuple(mapping.get(c, c) if c != UNCOLORED else UNCOLORED for c in self.colors)
        return EdgeColoring(self.graph, self.palette if palette is None else palette, cols)

    def to_pairs(self) -> list[list[int]]:
        """JSON form: ``[edge_id, color]`` with ``-1`` for uncolored."""
        return [[e, c if c != UNCOLORED else -1] for e, c in enumerate(self.colors)]

    @classmethod
    def from_pairs(cls, graph: Multigraph, palette: int, pairs: Iterable[Iterable[int]]) -> EdgeColoring:
        cols = [UNCOLORED] * graph.m
        seen = set()
        for e, c in pairs:
            if not 0 <= e < graph.m or e in seen:
                raise ColoringError(f"bad or repeated edge id {e} in coloring")
            seen.add(e)
            cols[e] = UNCOLORED if c == -1 else c
        return cls(graph, palette, tuple(cols))

    def __repr__(self) -> str:
        return f"EdgeColoring(K={self.palette}, {list(self.colors)})"


def validate(phi: EdgeColoring) -> Violation | None:
    """Return ``None`` if ``phi`` is proper, else the first conflict found."""
    g = phi.graph
    for v in range(g.n):
        seen: dict[int, int] = {}
        for e in g.incidence[v]:
            c = phi.colors[e]
            if c == UNCOLORED:
                continue
            if c in seen:
                return Violation(v, seen[c], e, c)
            seen[c] = e
    return None


def is_proper(phi: EdgeColoring) -> bool:
    return validate(phi) is None


def missing(phi: EdgeColoring, v: int) -> frozenset[int]:
    return phi.missing(v)


def color_class(phi: EdgeColoring, alpha: int) -> frozenset[int]:
    return phi.color_class(alpha)


@dataclass(frozen=True)
class KempeChain:
    """One component of the subgraph spanned by colors ``alpha`` and ``beta``.

    ``vertices`` and ``edges`` are listed in trace order.  ``closed`` is true
    for an alternating cycle.  ``snapshot`` pins the coloring it was traced on.
    """

    alpha: int
    beta: int
    start: int
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    closed: bool
    snapshot: tuple[int, ...]

    def contains(self, v: int) -> bool:
        return v in self.vertices

    @property
    def ends(self) -> tuple[int, ...]:
        if self.closed:
            return ()
        return (self.vertices[0], self.vertices[-1])


def _walk(phi: EdgeColoring, v: int, first: int, alpha: int, beta: int) -> tuple[list[int], list[int], bool]:
    g = phi.graph
    verts, edges = [v], []
    cur, want = v, first
    start_edge = phi.edge_with(v, first)
    while True:
        e = phi.edge_with(cur, want)
        if e is None:
            return verts, edges, False
        if edges and e == start_edge:
            return verts, edges, True
        edges.append(e)
        cur = g.other(e, cur)
        verts.append(cur)
        want = beta if want == alpha else alpha


def kempe_chain(phi: EdgeColoring, v: int, alpha: int, beta: int) -> KempeChain:
    if alpha == beta:
        raise ColoringError("a Kempe chain needs two distinct colors")
    has_a = phi.edge_with(v, alpha) is not None
    has_b = phi.edge_with(v, beta) is not None
    if not has_a and not has_b:
        return KempeChain(alpha, beta, v, (v,), (), False, phi.colors)
    first = alpha if has_a else beta
    verts, edges, closed = _walk(phi, v, first, alpha, beta)
    if closed:
        # the walk returns to v; drop the repeated start vertex
        return KempeChain(alpha, beta, v, tuple(verts[:-1]), tuple(edges), True, phi.colors)
    if has_a and has_b:
        back_v, back_e, _ = _walk(phi, v, beta, alpha, beta)
        verts = list(reversed(back_v[1:])) + verts
        edges = list(reversed(back_e)) + edges
    return KempeChain(alpha, beta, v, tuple(verts), tuple(edges), False, phi.colors)


def kempe_swap(phi: EdgeColoring, chain: KempeChain) -> EdgeColoring:
    if chain.snapshot != phi.colors:
        raise StaleChainError("chain was computed on a different coloring")
    a, b = chain.alpha, chain.beta
    return phi.recolor({e: (b if phi.colors[e] == a else a) for e in chain.edges})


def partition_relative(phi: EdgeColoring, x: int, y: int) -> tuple[set[int], set[int], set[int], set[int]]:
    """Split the palette by presence at ``x`` and ``y``.

    Returns (missing at both, present only at y, present only at x, present at both).
    """
    if x == y:
        raise ColoringError("partition_relative needs two distinct vertices")
    px, py = phi.present(x), phi.present(y)
    full = phi.full
    c1 = set(full - px - py)
    c2 = set(py - px)
    c3 = set(px - py)
    c4 = set(px & py)
    return c1, c2, c3, c4


def kempe_walk(phi: EdgeColoring, rng, steps: int) -> EdgeColoring:
    """Apply ``steps`` random Kempe swaps; the result has the same palette and is proper."""
    g = phi.graph
    if phi.palette < 2 or g.n == 0:
        return phi
    for _ in range(steps):
        v = rng.randrange(g.n)
        a, b = rng.sample(range(1, phi.palette + 1), 2)
        phi = kempe_swap(phi, kempe_chain(phi, v, a, b))
    return phi
