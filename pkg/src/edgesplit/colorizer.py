"""Producing proper edge colorings.

``color_exact`` decides K-colorability by backtracking; ``color_vizing``
colors any multigraph with Delta + mu colors by multi-fan recoloring.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from edgesplit.budget import Budget, BudgetExhausted, as_budget
from edgesplit.coloring import UNCOLORED, EdgeColoring, kempe_chain, kempe_swap, validate
from edgesplit.fans import (
    MultiFan,
    build_maximal_multifan,
    extract_linear_sequence,
    fan_from_edges,
    shift,
)
from edgesplit.multigraph import Multigraph


class Outcome(str, enum.Enum):
    FOUND = "found"
    INFEASIBLE = "infeasible"
    BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class ExactResult:
    outcome: Outcome
    coloring: EdgeColoring | None
    nodes: int
    reason: str = ""

    @property
    def found(self) -> bool:
        return self.outcome is Outcome.FOUND


def density_lower_bound(g: Multigraph, max_n: int = 14) -> int:
    """Max of Delta and ceil(|E(S)| / floor(|S|/2)) over odd vertex sets S.

    Each color class restricted to S is a matching of at most floor(|S|/2)
    edges.  Only computed exhaustively when ``n <= max_n``.
    """
    best = g.max_degree
    if g.n > max_n:
        return best
    verts_of = [frozenset(p) for p in g.edges]
    for size in range(3, g.n + 1, 2):
        half = size // 2
        for s in combinations(range(g.n), size):
            ss = set(s)
            inside = sum(1 for p in verts_of if p <= ss)
            best = max(best, -(-inside // half))
    return best


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


class _Exact:
    def __init__(self, g: Multigraph, k: int, budget: Budget) -> None:
        self.g = g
        self.k = k
        self.full = (1 << k) - 1
        self.budget = budget
        self.used = [0] * g.n
        self.colors = [0] * g.m
        self.left = [g.degrees[v] for v in range(g.n)]
        self.weight = [g.degrees[u] + g.degrees[v] for u, v in g.edges]
        self.nodes = 0

    def _avail(self, e: int) -> int:
        u, v = self.g.edges[e]
        return self.full & ~(self.used[u] | self.used[v])

    def _pick(self) -> tuple[int, int] | None:
        best = None
        best_key = None
        for e, c in enumerate(self.colors):
            if c:
                continue
            a = self._avail(e)
            key = (a.bit_count(), -self.weight[e], e)
            if best_key is None or key < best_key:
                best, best_key = (e, a), key
                if key[0] == 0:
                    break
        return best

    def _consistent(self, verts: tuple[int, int]) -> bool:
        g = self.g
        for w in verts:
            union, count = 0, 0
            for f in g.incidence[w]:
                if self.colors[f]:
                    continue
                a = self._avail(f)
                if not a:
                    return False
                union |= a
                count += 1
            if union.bit_count() < count:
                return False
        return True

    def run(self, top: int = 0) -> bool:
        pick = self._pick()
        if pick is None:
            return True
        self.budget.tick()
        self.nodes += 1
        e, avail = pick
        # colors above top+1 are interchangeable with top+1
        avail &= (1 << min(top + 1, self.k)) - 1
        u, v = self.g.edges[e]
        for c in _bits(avail):
            bit = 1 << (c - 1)
            self.colors[e] = c
            self.used[u] |= bit
            self.used[v] |= bit
            if self._consistent((u, v)) and self.run(max(top, c)):
                return True
            self.used[u] ^= bit
            self.used[v] ^= bit
            self.colors[e] = 0
        return False


def color_exact(g: Multigraph, k: int, budget: Budget | int | None = None) -> ExactResult:
    """Find a proper coloring with at most ``k`` colors, or prove none exists."""
    budget = as_budget(budget)
    if k < 1 and g.m:
        return ExactResult(Outcome.INFEASIBLE, None, 0, "empty palette")
    if g.max_degree > k:
        return ExactResult(Outcome.INFEASIBLE, None, 0, f"max degree {g.max_degree} > {k}")
    lb = density_lower_bound(g)
    if lb > k:
        return ExactResult(Outcome.INFEASIBLE, None, 0, f"odd-set density bound {lb} > {k}")
    search = _Exact(g, k, budget)
    try:
        ok = search.run()
    except BudgetExhausted:
        return ExactResult(Outcome.BUDGET_EXHAUSTED, None, search.nodes, "budget exhausted")
    if not ok:
        return ExactResult(Outcome.INFEASIBLE, None, search.nodes, "exhaustive search")
    phi = EdgeColoring(g, max(k, 1), tuple(search.colors))
    return ExactResult(Outcome.FOUND, phi, search.nodes)


class VizingFailure(RuntimeError):
    """Fan recoloring made no progress; indicates a bug, carries a dump."""


def _foldable(phi: EdgeColoring, fan: MultiFan, x: int) -> int | None:
    mx = phi.missing(x)
    for i, y in enumerate(fan.rim):
        if phi.missing(y) & mx:
            return i
    return None


def _fold(g: Multigraph, phi: EdgeColoring, fan: MultiFan, x: int, z: int) -> EdgeColoring:
    seq = extract_linear_sequence(fan, z)
    phi = shift(g, phi, seq)
    last = seq.edges[-1]
    common = min(phi.missing(x) & phi.missing(z))
    return phi.recolor({last: common})


def _insert(g: Multigraph, phi: EdgeColoring, e: int) -> EdgeColoring:
    u, v = g.edges[e]
    both = phi.missing(u) & phi.missing(v)
    if both:
        return phi.recolor({e: min(both)})
    x = u
    fan = build_maximal_multifan(g, phi, x, e)
    # earliest prefix that is foldable (rim vertex shares a missing color with x)
    # or reducible (two distinct rim vertices share a missing color)
    mx = phi.missing(x)
    for n_idx, yn in enumerate(fan.rim):
        if phi.missing(yn) & mx:
            return _fold(g, phi, fan.prefix(n_idx + 1), x, yn)
        for i in range(n_idx):
            yi = fan.rim[i]
            if yi != yn and phi.missing(yi) & phi.missing(yn):
                return _reduce(g, phi, fan.prefix(n_idx + 1), x, i)
    raise VizingFailure(
        f"no foldable or reducible prefix inserting edge {e}={g.edges[e]} "
        f"with palette {phi.palette}: fan edges {fan.edges}, rim {fan.rim}, coloring {list(phi.colors)}"
    )


def _reduce(g: Multigraph, phi: EdgeColoring, fan: MultiFan, x: int, i: int) -> EdgeColoring:
    yi, yn = fan.rim[i], fan.rim[-1]
    a = min(phi.missing(yi) & phi.missing(yn))
    b = min(phi.missing(x))
    chain_i = kempe_chain(phi, yi, a, b)
    if not chain_i.contains(x):
        phi = kempe_swap(phi, chain_i)
        sub = fan_from_edges(g, phi, x, fan.edges[: i + 1])
        return _fold(g, phi, sub, x, yi)
    chain_n = kempe_chain(phi, yn, a, b)
    phi = kempe_swap(phi, chain_n)
    sub = fan_from_edges(g, phi, x, fan.edges)
    return _fold(g, phi, sub, x, yn)


def vizing_order(g: Multigraph) -> list[int]:
    return sorted(range(g.m), key=lambda e: (-(g.degrees[g.edges[e][0]] + g.degrees[g.edges[e][1]]), e))


def color_vizing(g: Multigraph) -> EdgeColoring:
    """Proper coloring from the palette ``1..Delta+mu``."""
    palette = max(1, g.max_degree + g.multiplicity)
    phi = EdgeColoring.empty(g, palette)
    for e in vizing_order(g):
        before = sum(1 for c in phi.colors if c != UNCOLORED)
        phi = _insert(g, phi, e)
        bad = validate(phi)
        after = sum(1 for c in phi.colors if c != UNCOLORED)
        if bad is not None or after != before + 1:
            raise VizingFailure(f"inserting edge {e} broke the coloring: {bad}; {phi!r}")
    return phi
