"""Multi-fans, linear sequences and shifting.

All functions take a graph ``G`` and a coloring ``phi`` of ``G`` in which the
anchor edge is uncolored.  Other uncolored edges are ignored by fan growth,
so a partial coloring behaves like a coloring of the subgraph of colored
edges plus the anchor.
"""

from __future__ import annotations

from dataclasses import dataclass

from edgesplit.coloring import UNCOLORED, ColoringError, EdgeColoring
from edgesplit.multigraph import Multigraph


class FanError(ValueError):
    pass


class ContractBreach(RuntimeError):
    """A lemma's conclusion failed; the caller's hypotheses did not hold."""


@dataclass(frozen=True)
class MultiFan:
    center: int
    edges: tuple[int, ...]
    rim: tuple[int, ...]
    # witness[i] = smallest j < i with color(edges[i]) missing at rim[j]; witness[0] = -1
    witness: tuple[int, ...]
    maximal: bool

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def anchor(self) -> int:
        return self.edges[0]

    @property
    def vertices(self) -> list[int]:
        """Distinct rim vertices in order of first appearance."""
        return list(dict.fromkeys(self.rim))

    def multiplicity_to(self, z: int) -> int:
        return sum(1 for y in self.rim if y == z)

    def prefix(self, length: int) -> MultiFan:
        return MultiFan(self.center, self.edges[:length], self.rim[:length],
                        self.witness[:length], maximal=False)


@dataclass(frozen=True)
class LinearSequence:
    center: int
    edges: tuple[int, ...]
    rim: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)


def _witnesses(phi: EdgeColoring, edges: tuple[int, ...], rim: tuple[int, ...]) -> tuple[int, ...]:
    wit = [-1]
    for i in range(1, len(edges)):
        c = phi.colors[edges[i]]
        j = next((j for j in range(i) if c in phi.missing(rim[j])), None)
        if j is None:
            raise FanError(f"fan entry {i} (edge {edges[i]}, color {c}) has no witness")
        wit.append(j)
    return tuple(wit)


def fan_from_edges(g: Multigraph, phi: EdgeColoring, x: int, edges: tuple[int, ...]) -> MultiFan:
    """Re-derive rim and witnesses for a given edge sequence (e.g. after a recoloring)."""
    rim = tuple(g.other(e, x) for e in edges)
    return MultiFan(x, edges, rim, _witnesses(phi, edges, rim), maximal=False)


def build_maximal_multifan(g: Multigraph, phi: EdgeColoring, x: int, e: int) -> MultiFan:
    if x not in g.edges[e]:
        raise FanError(f"vertex {x} is not an endpoint of edge {e}")
    if phi.colors[e] != UNCOLORED:
        raise FanError(f"anchor edge {e} is colored ({phi.colors[e]})")
    edges = [e]
    rim = [g.other(e, x)]
    wit = [-1]
    used = {e}
    seen_missing = set(phi.missing(rim[0]))
    while True:
        for c in sorted(seen_missing):
            f = phi.edge_with(x, c)
            if f is not None and f not in used:
                break
        else:
            break
        y = g.other(f, x)
        wit.append(next(j for j in range(len(rim)) if c in phi.missing(rim[j])))
        edges.append(f)
        rim.append(y)
        used.add(f)
        seen_missing |= phi.missing(y)
    return MultiFan(x, tuple(edges), tuple(rim), tuple(wit), maximal=True)


def fan_equation_residual(g: Multigraph, phi: EdgeColoring, fan: MultiFan, palette: int) -> int:
    """Sum over distinct fan vertices z of ``d(z) + mu_F(x, z) - palette``."""
    return sum(g.degrees[z] + fan.multiplicity_to(z) - palette for z in fan.vertices)


def find_high_degree_fan_vertex(g: Multigraph, phi: EdgeColoring, fan: MultiFan, palette: int, y: int) -> int:
    threshold = palette + 1 - g.multiplicity
    candidates = [z for z in fan.vertices if z != y and g.degrees[z] >= threshold]
    if not candidates:
        raise ContractBreach(
            f"no fan vertex other than {y} has degree >= {threshold}; "
            f"fan rim {fan.rim}, degrees {[g.degrees[z] for z in fan.vertices]}"
        )
    return min(candidates)


def extract_linear_sequence(fan: MultiFan, z: int) -> LinearSequence:
    if z not in fan.rim:
        raise FanError(f"vertex {z} is not on the fan")
    i = fan.rim.index(z)
    path = [i]
    while i > 0:
        i = fan.witness[i]
        path.append(i)
    path.reverse()
    return LinearSequence(fan.center, tuple(fan.edges[j] for j in path), tuple(fan.rim[j] for j in path))


def check_linear_sequence(g: Multigraph, phi: EdgeColoring, seq: LinearSequence) -> str | None:
    """Return a description of the first defect, or ``None`` if valid."""
    x = seq.center
    if len(set(seq.edges)) != len(seq.edges):
        return "repeated edge"
    if len(set(seq.rim)) != len(seq.rim):
        return "repeated vertex"
    for i, (e, y) in enumerate(zip(seq.edges, seq.rim)):
        if set(g.edges[e]) != {x, y}:
            return f"entry {i}: edge {e} does not join {x} and {y}"
    for i in range(1, len(seq)):
        c = phi.colors[seq.edges[i]]
        if c == UNCOLORED or c not in phi.missing(seq.rim[i - 1]):
            return f"entry {i}: color {c} of edge {seq.edges[i]} is not missing at {seq.rim[i - 1]}"
    return None


def shift(g: Multigraph, phi: EdgeColoring, seq: LinearSequence) -> EdgeColoring:
    if phi.colors[seq.edges[0]] != UNCOLORED:
        raise FanError(f"first edge {seq.edges[0]} of the sequence is colored")
    problem = check_linear_sequence(g, phi, seq)
    if problem:
        raise FanError(f"invalid linear sequence: {problem}")
    changes = {seq.edges[t]: phi.colors[seq.edges[t + 1]] for t in range(len(seq) - 1)}
    changes[seq.edges[-1]] = UNCOLORED
    out = phi.recolor(changes)
    return out


__all__ = [
    "ColoringError",
    "ContractBreach",
    "FanError",
    "LinearSequence",
    "MultiFan",
    "build_maximal_multifan",
    "check_linear_sequence",
    "extract_linear_sequence",
    "fan_equation_residual",
    "fan_from_edges",
    "find_high_degree_fan_vertex",
    "shift",
]
