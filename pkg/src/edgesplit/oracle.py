"""Exact ground truth for small multigraphs.

Everything here is exhaustive search under an explicit node budget; running
out of budget is reported as its own outcome and never silently
approximated.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

from edgesplit.budget import Budget, BudgetExhausted, as_budget
from edgesplit.coloring import UNCOLORED, EdgeColoring, validate
from edgesplit.colorizer import Outcome, color_exact, color_vizing, density_lower_bound
from edgesplit.multigraph import Multigraph


class OracleBudgetExhausted(BudgetExhausted):
    def __init__(self, message: str, bracket: tuple[int, int] | None = None) -> None:
        super().__init__(message)
        self.bracket = bracket


class ClassLabel(str, enum.Enum):
    CLASS_I = "CLASS_I"
    CLASS_II = "CLASS_II"


@dataclass(frozen=True)
class ChromaticIndex:
    chi: int
    certificate: EdgeColoring
    lower_bound: int
    upper_bound: int

    def label(self, g: Multigraph) -> tuple[ClassLabel, int]:
        k = self.chi - g.max_degree
        return (ClassLabel.CLASS_I if k == 0 else ClassLabel.CLASS_II), k


_chi_cache: dict[tuple[int, tuple[tuple[int, int], ...]], ChromaticIndex] = {}


def clear_cache() -> None:
    """Forget memoized chromatic indices (keeps node counts reproducible per run)."""
    _chi_cache.clear()


def shannon_bound(g: Multigraph) -> int:
    return 3 * g.max_degree // 2


def vizing_bound(g: Multigraph) -> int:
    return g.max_degree + g.multiplicity


def chromatic_index(g: Multigraph, budget: Budget | int | None = None) -> ChromaticIndex:
    key = (g.n, g.edges)
    hit = _chi_cache.get(key)
    if hit is not None:
        return ChromaticIndex(hit.chi, EdgeColoring(g, hit.chi, hit.certificate.colors),
                              hit.lower_bound, hit.upper_bound)
    budget = as_budget(budget)
    if g.m == 0:
        return ChromaticIndex(0, EdgeColoring.empty(g, 1), 0, 0)
    ub = min(shannon_bound(g), vizing_bound(g))
    lb = max(g.max_degree, density_lower_bound(g))
    found = None
    for k in range(lb, ub + 1):
        if k == vizing_bound(g):
            found = color_vizing(g)
            break
        res = color_exact(g, k, budget)
        if res.outcome is Outcome.FOUND:
            found = res.coloring
            break
        if res.outcome is Outcome.BUDGET_EXHAUSTED:
            raise OracleBudgetExhausted(f"chromatic index search exhausted budget at K={k}", (k, ub))
    assert found is not None, "Shannon/Vizing upper bound must be attainable"
    # every K below k was excluded (lower bound or exhaustive search)
    assert len(found.used_colors()) == k, f"{len(found.used_colors())}-coloring found below proven bound {k}"
    cert = _compact(found, k)
    result = ChromaticIndex(k, cert, lb, ub)
    _chi_cache[key] = result
    return result


def _compact(phi: EdgeColoring, palette: int) -> EdgeColoring:
    used = sorted(phi.used_colors())
    mapping = {c: i + 1 for i, c in enumerate(used)}
    return phi.permute(mapping, palette=palette)


def is_class_two(g: Multigraph, budget: Budget | int | None = None) -> bool:
    return chromatic_index(g, budget).chi > g.max_degree


def is_critical_edge(g: Multigraph, e: int, budget: Budget | int | None = None) -> bool:
    budget = as_budget(budget)
    chi = chromatic_index(g, budget).chi
    h, _ = g.remove_edges([e])
    chi_minus = chromatic_index(h, budget).chi
    assert chi - 1 <= chi_minus <= chi, "removing one edge changes the chromatic index by at most one"
    return chi_minus < chi


def critical_coloring(g: Multigraph, e: int, budget: Budget | int | None = None) -> EdgeColoring | None:
    """A (chi'(G)-1)-coloring of G with only ``e`` uncolored, or None if ``e`` is not critical."""
    budget = as_budget(budget)
    chi = chromatic_index(g, budget).chi
    h, emap = g.remove_edges([e])
    sub = chromatic_index(h, budget)
    if sub.chi == chi:
        return None
    cols = [UNCOLORED] * g.m
    for j, c in enumerate(sub.certificate.colors):
        cols[emap.new_to_old[j]] = c
    return EdgeColoring(g, chi - 1, tuple(cols))


# ---------------------------------------------------------------- max subgraph


@dataclass(frozen=True)
class MaxSubgraph:
    edges: tuple[int, ...]
    coloring: EdgeColoring  # palette Delta(G); edges outside the subgraph uncolored
    optimal: bool

    @property
    def size(self) -> int:
        return len(self.edges)


class _SubSearch:
    """Branch and bound: each edge gets a color in 1..k or is dropped."""

    DROP = -1

    def __init__(self, g: Multigraph, k: int, budget: Budget,
                 forced_in: set[int] = frozenset(), forced_out: set[int] = frozenset()) -> None:
        self.g = g
        self.k = k
        self.full = (1 << k) - 1
        self.budget = budget
        self.forced_in = set(forced_in)
        self.state = [0] * g.m
        self.used = [0] * g.n
        self.und = list(g.degrees)  # undecided edges per vertex
        self.kept = 0
        self.undecided = g.m
        for e in forced_out:
            self._decide(e, self.DROP)
        self.best = -1
        self.best_state: list[int] | None = None
        self.need: int | None = None

    def _decide(self, e: int, c: int) -> None:
        u, v = self.g.edges[e]
        self.state[e] = c
        self.und[u] -= 1
        self.und[v] -= 1
        self.undecided -= 1
        if c > 0:
            bit = 1 << (c - 1)
            self.used[u] |= bit
            self.used[v] |= bit
            self.kept += 1

    def _undo(self, e: int) -> None:
        u, v = self.g.edges[e]
        c = self.state[e]
        self.state[e] = 0
        self.und[u] += 1
        self.und[v] += 1
        self.undecided += 1
        if c > 0:
            bit = 1 << (c - 1)
            self.used[u] ^= bit
            self.used[v] ^= bit
            self.kept -= 1

    def _avail(self, e: int) -> int:
        u, v = self.g.edges[e]
        return self.full & ~(self.used[u] | self.used[v])

    def _upper(self) -> int:
        total = 0
        worst = 0
        for w in range(self.g.n):
            free = (self.full & ~self.used[w]).bit_count()
            ex = self.und[w] - free
            if ex > 0:
                total += ex
                worst = max(worst, ex)
        return self.kept + self.undecided - max(worst, (total + 1) // 2)

    def _target(self) -> int:
        return self.need if self.need is not None else self.best + 1

    def run(self, top: int = 0) -> bool:
        """Returns True to stop the whole search (satisfice mode hit)."""
        if self._upper() < self._target():
            return False
        # most constrained undecided edge
        pick = None
        for e, s in enumerate(self.state):
            if s:
                continue
            a = self._avail(e)
            key = (a.bit_count(), e not in self.forced_in, e)
            if pick is None or key < pick[0]:
                pick = (key, e, a)
        if pick is None:
            if self.kept >= self._target():
                self.best = self.kept
                self.best_state = list(self.state)
                return self.need is not None
            return False
        self.budget.tick()
        _, e, avail = pick
        avail &= (1 << min(top + 1, self.k)) - 1
        while avail:
            low = avail & -avail
            c = low.bit_length()
            avail ^= low
            self._decide(e, c)
            stop = self.run(max(top, c))
            self._undo(e)
            if stop:
                return True
        if e not in self.forced_in:
            self._decide(e, self.DROP)
            stop = self.run(top)
            self._undo(e)
            if stop:
                return True
        return False

    def coloring(self) -> EdgeColoring:
        assert self.best_state is not None
        cols = tuple(c if c > 0 else UNCOLORED for c in self.best_state)
        return EdgeColoring(self.g, self.k, cols)


def _static_upper(g: Multigraph, k: int) -> int:
    drop = 0
    if g.n <= 14:
        pairs = [frozenset(p) for p in g.edges]
        for size in range(3, g.n + 1, 2):
            for s in combinations(range(g.n), size):
                ss = set(s)
                inside = sum(1 for p in pairs if p <= ss)
                drop = max(drop, inside - k * (size // 2))
    return g.m - drop


def _seed(g: Multigraph, k: int, budget: Budget) -> EdgeColoring:
    """Keep the k largest classes of an optimal coloring."""
    cert = chromatic_index(g, budget).certificate
    sizes = sorted(((len(cert.color_class(c)), -c) for c in range(1, cert.palette + 1)), reverse=True)
    keep = [-c for _, c in sizes[:k]]
    mapping = {c: i + 1 for i, c in enumerate(keep)}
    cols = tuple(mapping.get(c, UNCOLORED) for c in cert.colors)
    return EdgeColoring(g, max(k, 1), cols)


def _find(g: Multigraph, k: int, budget: Budget, need: int,
          forced_in: set[int], forced_out: set[int]) -> EdgeColoring | None:
    s = _SubSearch(g, k, budget, forced_in, forced_out)
    s.need = need
    s.run()
    return s.coloring() if s.best_state is not None else None


def max_delta_colorable_subgraph_exact(g: Multigraph, budget: Budget | int | None = None) -> MaxSubgraph:
    """Largest edge set colorable with Delta(G) colors; lexicographically smallest among ties."""
    budget = as_budget(budget)
    k = g.max_degree
    if g.m == 0:
        return MaxSubgraph((), EdgeColoring.empty(g, 1), True)
    seed = _seed(g, k, budget)
    best = seed
    best_size = len(seed.colored_edges())
    ub = _static_upper(g, k)
    try:
        if best_size < ub:
            s = _SubSearch(g, k, budget)
            s.best = best_size
            s.run()
            if s.best_state is not None:
                best, best_size = s.coloring(), s.best
        # lexicographic refinement: fix edges in id order
        forced_in: set[int] = set()
        forced_out: set[int] = set()
        for e in range(g.m):
            if best.colors[e] != UNCOLORED:
                forced_in.add(e)
                continue
            alt = _find(g, k, budget, best_size, forced_in | {e}, forced_out)
            if alt is not None:
                best = alt
                forced_in.add(e)
            else:
                forced_out.add(e)
    except BudgetExhausted:
        return MaxSubgraph(tuple(best.colored_edges()), best, False)
    return MaxSubgraph(tuple(best.colored_edges()), best, True)


def max_delta_colorable_size(g: Multigraph, budget: Budget | int | None = None) -> int:
    """Size only; skips the lexicographic refinement."""
    budget = as_budget(budget)
    k = g.max_degree
    if g.m == 0:
        return 0
    seed = _seed(g, k, budget)
    best = len(seed.colored_edges())
    if best < _static_upper(g, k):
        s = _SubSearch(g, k, budget)
        s.best = best
        s.run()
        best = max(best, s.best)
    return best


def contains_colorable(g: Multigraph, k: int, size: int, forced_in: set[int], forced_out: set[int] = frozenset(),
                       budget: Budget | int | None = None) -> EdgeColoring | None:
    """A k-colorable edge set of at least ``size`` edges containing ``forced_in`` and avoiding ``forced_out``."""
    return _find(g, k, as_budget(budget), size, set(forced_in), set(forced_out))


# ---------------------------------------------------------------- probes


class ProbeOutcome(str, enum.Enum):
    VERIFIED = "verified"
    COUNTEREXAMPLE = "counterexample"
    BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass
class ProbeReport:
    conjecture: str
    instance: dict[str, Any]
    params: dict[str, Any]
    outcome: ProbeOutcome
    witness: dict[str, Any] | None = None
    dump: dict[str, Any] | None = None
    details: list[dict[str, Any]] = field(default_factory=list)
    nodes: int = 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "conjecture": self.conjecture,
            "instance": self.instance,
            "params": self.params,
            "outcome": self.outcome.value,
            "witness": self.witness,
            "dump": self.dump,
            "details": self.details,
            "nodes": self.nodes,
        }


def _instance(g: Multigraph) -> dict[str, Any]:
    from edgesplit.mgf import digest, serialize_mgf

    return {"name": g.name, "mgf": serialize_mgf(g), "digest": digest(g)}


class _PairSearch:
    """(p+q)-coloring whose first p colors all meet at u and last q colors all meet at v."""

    def __init__(self, g: Multigraph, p: int, q: int, u: int, v: int, budget: Budget) -> None:
        self.g, self.p, self.q, self.u, self.v = g, p, q, u, v
        self.k = p + q
        self.full = (1 << self.k) - 1
        self.mask_a = (1 << p) - 1
        self.mask_b = self.full ^ self.mask_a
        self.budget = budget
        self.used = [0] * g.n
        self.colors = [0] * g.m
        self.left = list(g.degrees)

    def _avail(self, e: int) -> int:
        a, b = self.g.edges[e]
        return self.full & ~(self.used[a] | self.used[b])

    def _ok(self) -> bool:
        need_u = (self.mask_a & ~self.used[self.u]).bit_count()
        need_v = (self.mask_b & ~self.used[self.v]).bit_count()
        return need_u <= self.left[self.u] and need_v <= self.left[self.v]

    def run(self, top_a: int = 0, top_b: int = 0) -> bool:
        pick = None
        for e, c in enumerate(self.colors):
            if c:
                continue
            a = self._avail(e)
            key = (a.bit_count(), e)
            if pick is None or key < pick[0]:
                pick = (key, e, a)
        if pick is None:
            return True
        self.budget.tick()
        _, e, avail = pick
        # symmetry breaking inside each color group
        allowed = ((1 << min(top_a + 1, self.p)) - 1) | (((1 << min(top_b + 1, self.q)) - 1) << self.p)
        avail &= allowed
        x, y = self.g.edges[e]
        while avail:
            low = avail & -avail
            avail ^= low
            c = low.bit_length()
            self.colors[e] = c
            self.used[x] |= low
            self.used[y] |= low
            self.left[x] -= 1
            self.left[y] -= 1
            if self._ok():
                ta, tb = (max(top_a, c), top_b) if c <= self.p else (top_a, max(top_b, c - self.p))
                if self.run(ta, tb):
                    return True
            self.left[x] += 1
            self.left[y] += 1
            self.used[x] ^= low
            self.used[y] ^= low
            self.colors[e] = 0
        return False


def split_search(g: Multigraph, p: int, q: int, budget: Budget | int | None = None) -> tuple[list[int], list[int], EdgeColoring] | None:
    """Exhaustive search for class I parts with maximum degrees p and q.

    Returns ``(part1, part2, coloring)`` where the coloring uses ``1..p`` on
    part1 and ``p+1..p+q`` on part2, or ``None`` if no such split exists.
    Raises :class:`BudgetExhausted`.
    """
    budget = as_budget(budget)
    degs = g.degrees
    us = sorted((w for w in range(g.n) if degs[w] >= p), key=lambda w: (-degs[w], w))
    vs = sorted((w for w in range(g.n) if degs[w] >= q), key=lambda w: (-degs[w], w))
    for u in us:
        for v in vs:
            if u == v:
                continue
            s = _PairSearch(g, p, q, u, v, budget)
            if s.run():
                phi = EdgeColoring(g, p + q, tuple(s.colors))
                part1 = [e for e, c in enumerate(s.colors) if c <= p]
                part2 = [e for e, c in enumerate(s.colors) if c > p]
                return part1, part2, phi
    return None


def probe_conjecture_pq(g: Multigraph, p: int, q: int, budget: Budget | int | None = None) -> ProbeReport:
    budget = as_budget(budget)
    start = budget.used
    ci = chromatic_index(g, budget)
    delta = g.max_degree
    k = ci.chi - delta
    params = {"p": p, "q": q, "Delta": delta, "k": k, "chi": ci.chi}
    if k < 1 or p + q != ci.chi or not (1 <= p <= delta and 1 <= q <= delta):
        raise ValueError(f"illegal split (p, q)=({p}, {q}) for Delta={delta}, chi={ci.chi}")
    try:
        found = split_search(g, p, q, budget)
    except BudgetExhausted:
        return ProbeReport("pq", _instance(g), params, ProbeOutcome.BUDGET_EXHAUSTED, nodes=budget.used - start)
    if found is None:
        dump = {"instance": _instance(g), "p": p, "q": q, "search": "exhaustive pair search", "seed": 0}
        return ProbeReport("pq", _instance(g), params, ProbeOutcome.COUNTEREXAMPLE, dump=dump,
                           nodes=budget.used - start)
    part1, part2, phi = found
    witness = {"part1": part1, "part2": part2, "coloring": phi.to_pairs()}
    return ProbeReport("pq", _instance(g), params, ProbeOutcome.VERIFIED, witness=witness,
                       nodes=budget.used - start)


def maximum_matchings(g: Multigraph) -> list[tuple[int, ...]]:
    """All maximum matchings as sorted edge-id tuples (parallel edges give distinct matchings)."""
    best: list[tuple[int, ...]] = []
    best_size = 0
    taken = [False] * g.n
    chosen: list[int] = []

    def rec(i: int) -> None:
        nonlocal best, best_size
        # cannot beat best_size even taking every remaining edge
        if len(chosen) + min(g.m - i, sum(1 for t in taken if not t) // 2) < best_size:
            return
        if i == g.m:
            if len(chosen) > best_size:
                best_size = len(chosen)
                best = []
            if len(chosen) == best_size:
                best.append(tuple(chosen))
            return
        u, v = g.edges[i]
        if not taken[u] and not taken[v]:
            taken[u] = taken[v] = True
            chosen.append(i)
            rec(i + 1)
            chosen.pop()
            taken[u] = taken[v] = False
        rec(i + 1)

    rec(0)
    return best


def matching_conjecture_id(g: Multigraph, budget: Budget | int | None = None) -> str:
    if g.is_simple:
        return "matching-simple"
    ci = chromatic_index(g, budget)
    if g.is_regular and ci.chi == g.max_degree + 1:
        return "matching-regular"
    raise ValueError("matching probe needs a simple graph or a regular graph with chi' = Delta + 1")


def probe_matching_cover(g: Multigraph, budget: Budget | int | None = None) -> ProbeReport:
    budget = as_budget(budget)
    start = budget.used
    conj = matching_conjecture_id(g, budget)
    k = g.max_degree
    try:
        size = max_delta_colorable_size(g, budget)
        details = []
        outcome = ProbeOutcome.VERIFIED
        for mt in maximum_matchings(g):
            rest = set(range(g.m)) - set(mt)
            phi = contains_colorable(g, k, size, rest, budget=budget)
            entry: dict[str, Any] = {"matching": list(mt), "found": phi is not None}
            if phi is not None:
                entry["subgraph"] = phi.colored_edges()
                entry["coloring"] = phi.to_pairs()
            else:
                outcome = ProbeOutcome.COUNTEREXAMPLE
            details.append(entry)
    except BudgetExhausted:
        return ProbeReport(conj, _instance(g), {"Delta": k}, ProbeOutcome.BUDGET_EXHAUSTED,
                           nodes=budget.used - start)
    params = {"Delta": k, "max_subgraph_size": size, "matchings": len(details)}
    dump = {"instance": _instance(g), "seed": 0} if outcome is ProbeOutcome.COUNTEREXAMPLE else None
    return ProbeReport(conj, _instance(g), params, outcome, details=details, dump=dump,
                       nodes=budget.used - start)


def check_certificate(g: Multigraph, phi: EdgeColoring) -> bool:
    return phi.graph == g and validate(phi) is None
