"""Named graph families, the Shannon-triangle detector and the test corpus."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, permutations, product

from edgesplit.multigraph import GraphError, Multigraph


def make_T(r: int, s: int, t: int) -> Multigraph:
    """Triangle x=0, y=1, z=2 with mu(x,y)=r, mu(y,z)=s, mu(x,z)=t."""
    if min(r, s, t) < 1:
        raise GraphError(f"T({r},{s},{t}) needs positive multiplicities")
    edges = [(0, 1)] * r + [(1, 2)] * s + [(0, 2)] * t
    return Multigraph(3, tuple(edges), name=f"T({r},{s},{t})")


def shannon_multiplicities(d: int) -> tuple[int, int, int]:
    return d // 2, d // 2, (d + 1) // 2


def make_shannon(d: int) -> Multigraph:
    if d < 2:
        raise GraphError(f"Shannon graph degree must be >= 2, got {d}")
    g = make_T(*shannon_multiplicities(d))
    return Multigraph(g.n, g.edges, name=f"S_{d}")


def complete_graph(n: int) -> Multigraph:
    return Multigraph(n, tuple(combinations(range(n), 2)), name=f"K{n}")


def petersen() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph(10, tuple(outer + spokes + inner), name="petersen")


def named_graphs() -> list[Multigraph]:
    out = [complete_graph(3), complete_graph(4), petersen()]
    out += [make_shannon(d) for d in range(3, 7)]
    out += [make_T(1, 1, 2), make_T(2, 2, 3)]
    return out


@dataclass(frozen=True)
class ShannonWitness:
    vertices: tuple[int, int, int]
    # edges of the three sides (a,b), (b,c), (a,c), each of the required size
    sides: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    @property
    def edges(self) -> list[int]:
        return sorted(e for side in self.sides for e in side)


def detect_shannon_subgraph(g: Multigraph, d: int) -> ShannonWitness | None:
    if d < 2:
        raise GraphError(f"Shannon graph degree must be >= 2, got {d}")
    need = shannon_multiplicities(d)
    for tri in combinations(range(g.n), 3):
        for a, b, c in permutations(tri):
            sides = (g.edges_between(a, b), g.edges_between(b, c), g.edges_between(a, c))
            if all(len(s) >= k for s, k in zip(sides, need)):
                picked = tuple(s[:k] for s, k in zip(sides, need))
                return ShannonWitness((a, b, c), picked)  # type: ignore[arg-type]
    return None


@dataclass(frozen=True)
class CorpusSpec:
    small_n: int = 4
    small_m: int = 8
    mu_max: int = 3
    random_n: int = 7
    random_m: int = 14
    count: int = 500
    seed: int = 0
    named: bool = True


def small_multigraphs(n_max: int = 4, m_max: int = 8, mu_max: int = 3) -> list[Multigraph]:
    """Every multigraph without isolated vertices, one per sorted edge list."""
    out = []
    for n in range(2, n_max + 1):
        pairs = list(combinations(range(n), 2))
        for mult in product(range(mu_max + 1), repeat=len(pairs)):
            if not 1 <= sum(mult) <= m_max:
                continue
            edges = tuple(p for p, k in zip(pairs, mult) for _ in range(k))
            if len({v for p in edges for v in p}) < n:
                continue
            label = ",".join(f"{u}{v}" for u, v in edges)
            out.append(Multigraph(n, edges, name=f"small:{n}:{label}"))
    return out


def random_multigraph(rng: random.Random, n: int, m: int, mu_max: int, name: str = "") -> Multigraph:
    pairs = list(combinations(range(n), 2))
    mult = dict.fromkeys(pairs, 0)
    cap = min(m, mu_max * len(pairs))
    edges: list[tuple[int, int]] = []
    while len(edges) < cap:
        p = rng.choice(pairs)
        if mult[p] < mu_max:
            mult[p] += 1
            edges.append(p)
    return Multigraph(n, tuple(sorted(edges)), name=name)


def random_corpus(count: int, n_max: int, m_max: int, mu_max: int, seed: int) -> list[Multigraph]:
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(3, n_max)
        m = rng.randint(n - 1, m_max)
        out.append(random_multigraph(rng, n, m, mu_max, name=f"random:{seed}:{i}"))
    return out


def gen_corpus(spec: CorpusSpec = CorpusSpec()) -> list[Multigraph]:
    if min(spec.small_n, spec.small_m, spec.mu_max, spec.random_n, spec.random_m) < 1 or spec.count < 0:
        raise ValueError(f"corpus bounds must be positive: {spec}")
    out = small_multigraphs(spec.small_n, spec.small_m, spec.mu_max)
    out += random_corpus(spec.count, spec.random_n, spec.random_m, spec.mu_max, spec.seed)
    if spec.named:
        out += named_graphs()
    return out
