"""Loopless multigraphs with stable, dense edge identities.

A :class:`Multigraph` is an immutable value.  Edge ``i`` is the ``i``-th
endpoint pair given at construction.  Operations that change the edge set
return a new graph together with an :class:`EdgeMap` recording how old ids
relate to new ones, so callers can translate colorings and edge sets back.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input (loops, bad vertex ids, unknown edges)."""


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[tuple[int, int], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        for i, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {i}: vertex out of range in ({u}, {v}) for n={self.n}")
            if u == v:
                raise GraphError(f"edge {i}: loop at vertex {u}")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident with each vertex, ascending."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(a) for a in inc)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.incidence)

    @cached_property
    def pair_edges(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """Map ``(min, max)`` vertex pair to the ids of the edges joining it."""
        out: dict[tuple[int, int], list[int]] = {}
        for i, (u, v) in enumerate(self.edges):
            out.setdefault((min(u, v), max(u, v)), []).append(i)
        return {k: tuple(v) for k, v in out.items()}

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.degrees[v]

    def other(self, e: int, v: int) -> int:
        """The endpoint of edge ``e`` that is not ``v``."""
        u, w = self.edges[e]
        return w if u == v else u

    def edges_between(self, u: int, v: int) -> tuple[int, ...]:
        return self.pair_edges.get((min(u, v), max(u, v)), ())

    def multiplicity_between(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphError(f"multiplicity of a vertex with itself ({u}) is undefined")
        return len(self.edges_between(u, v))

    @cached_property
    def multiplicity(self) -> int:
        return max((len(v) for v in self.pair_edges.values()), default=0)

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return sorted({self.other(e, v) for e in self.incidence[v]})

    def vertices_of_degree_at_least(self, t: int) -> set[int]:
        return {v for v, d in enumerate(self.degrees) if d >= t}

    @property
    def is_simple(self) -> bool:
        return self.multiplicity <= 1

    @property
    def is_regular(self) -> bool:
        return self.min_degree == self.max_degree

    def remove_edges(self, removed: Iterable[int]) -> tuple[Multigraph, EdgeMap]:
        drop = set(removed)
        for e in drop:
            self._check_edge(e)
        keep = [i for i in range(self.m) if i not in drop]
        g = Multigraph(self.n, tuple(self.edges[i] for i in keep))
        return g, EdgeMap(old_m=self.m, new_to_old=tuple(keep))

    def add_edges(self, pairs: Iterable[Sequence[int]]) -> tuple[Multigraph, EdgeMap]:
        """Append edges; existing ids are preserved, new edges get ids ``m, m+1, ...``."""
        extra = tuple((int(u), int(v)) for u, v in pairs)
        g = Multigraph(self.n, self.edges + extra)
        return g, EdgeMap(old_m=self.m, new_to_old=tuple(range(self.m)) + (None,) * len(extra))

    def subgraph(self, edge_ids: Iterable[int]) -> tuple[Multigraph, EdgeMap]:
        """Spanning subgraph on the given edges (same vertex set)."""
        keep = set(edge_ids)
        return self.remove_edges(i for i in range(self.m) if i not in keep)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def _check_edge(self, e: int) -> None:
        if not 0 <= e < self.m:
            raise GraphError(f"unknown edge id {e} (m={self.m})")

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Multigraph{label} n={self.n} m={self.m}>"


@dataclass(frozen=True)
class EdgeMap:
    """Id translation between a graph and a graph derived from it.

    ``new_to_old[j]`` is the old id of new edge ``j`` (``None`` for an edge
    that did not exist before).
    """

    old_m: int
    new_to_old: tuple[int | None, ...]

    @cached_property
    def old_to_new(self) -> dict[int, int]:
        return {o: j for j, o in enumerate(self.new_to_old) if o is not None}

    def to_old(self, ids: Iterable[int]) -> list[int]:
        return [self.new_to_old[j] for j in ids]  # type: ignore[misc]

    def to_new(self, ids: Iterable[int]) -> list[int]:
        return [self.old_to_new[i] for i in ids]

    def removed(self) -> list[int]:
        kept = set(self.old_to_new)
        return [i for i in range(self.old_m) if i not in kept]


def build(n: int, pairs: Iterable[Sequence[int]], name: str = "") -> Multigraph:
    return Multigraph(n, tuple((int(u), int(v)) for u, v in pairs), name=name)


def multiplicity_scan(g: Multigraph) -> int:
    """Quadratic recount of the multiplicity, independent of the pair index."""
    best = 0
    for u, v in combinations(range(g.n), 2):
        best = max(best, sum(1 for a, b in g.edges if {a, b} == {u, v}))
    return best
