"""Splitting class II multigraphs into two structured parts.

Four constructions live here:

* :func:`split_by_missing_pair` -- cut an optimal coloring along the colors
  present at one vertex, when some other vertex misses none of its missing
  colors.  Both parts come out class I.
* :func:`split_minimal_class` -- shrink color class 1 until its edges have
  disjoint missing sets at their ends, then cut.
* :func:`normalize_max_subgraph` / :func:`eliminate_odd_cycles` -- exchange
  edges between a maximum Delta-colorable subgraph and its complement until
  the complement has maximum degree at most mu (and, when mu <= 2 and
  chi' = Delta + mu, has no odd cycle).
* :func:`decompose_class1_pair` -- the recursive split into class I parts
  of maximum degree Delta and k, using :func:`reduce_missing_overlap`.

Every descent measure is checked at runtime; a non-decreasing step raises
:class:`DescentError` because the underlying argument guarantees progress.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from edgesplit.budget import Budget, as_budget
from edgesplit.coloring import (
    UNCOLORED,
    EdgeColoring,
    kempe_chain,
    kempe_swap,
    partition_relative,
    validate,
)
from edgesplit.colorizer import Outcome, VizingFailure, _insert, color_exact, color_vizing
from edgesplit.fans import (
    ContractBreach,
    build_maximal_multifan,
    extract_linear_sequence,
    find_high_degree_fan_vertex,
    shift,
)
from edgesplit.multigraph import Multigraph
from edgesplit.oracle import MaxSubgraph, chromatic_index, max_delta_colorable_subgraph_exact, split_search


class DecompositionError(ValueError):
    """Precondition violated by the caller."""


class DescentError(AssertionError):
    """A descent measure failed to decrease; carries a trace."""

    def __init__(self, message: str, trace: Any = None) -> None:
        super().__init__(message)
        self.trace = trace


class StructureError(AssertionError):
    """A structural consequence of the recursive argument did not hold."""


@dataclass
class Decomposition:
    graph: Multigraph
    part1: tuple[int, ...]
    part2: tuple[int, ...]
    cert1: EdgeColoring  # colors part1 only
    cert2: EdgeColoring  # colors part2 only
    targets: tuple[int, int]
    method: str
    counters: dict[str, Any] = field(default_factory=dict)
    certified: bool = True

    def degrees(self, part: int) -> tuple[int, ...]:
        ids = self.part1 if part == 1 else self.part2
        deg = [0] * self.graph.n
        for e in ids:
            u, v = self.graph.edges[e]
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    def max_degree(self, part: int) -> int:
        return max(self.degrees(part), default=0)


def part_degrees(g: Multigraph, edges) -> list[int]:
    deg = [0] * g.n
    for e in edges:
        u, v = g.edges[e]
        deg[u] += 1
        deg[v] += 1
    return deg


def restrict(phi: EdgeColoring, edges, offset: int = 0, palette: int | None = None) -> EdgeColoring:
    keep = set(edges)
    cols = tuple((c - offset) if (e in keep and c != UNCOLORED) else UNCOLORED for e, c in enumerate(phi.colors))
    return EdgeColoring(phi.graph, palette if palette is not None else phi.palette, cols)


def _split_coloring(g: Multigraph, psi: EdgeColoring, d1: int, method: str, counters=None) -> Decomposition:
    """Cut a coloring whose colors 1..d1 form part 1 and the rest part 2."""
    d2 = psi.palette - d1
    part1 = tuple(e for e, c in enumerate(psi.colors) if 1 <= c <= d1)
    part2 = tuple(e for e, c in enumerate(psi.colors) if c > d1)
    return Decomposition(
        g, part1, part2,
        restrict(psi, part1, palette=max(d1, 1)),
        restrict(psi, part2, offset=d1, palette=max(d2, 1)),
        (d1, d2), method, dict(counters or {}),
    )


def _rename_for(phi: EdgeColoring, x: int) -> EdgeColoring:
    present = sorted(phi.present(x))
    absent = sorted(phi.missing(x))
    mapping = {c: i + 1 for i, c in enumerate(present + absent)}
    return phi.permute(mapping)


def split_by_missing_pair(g: Multigraph, phi: EdgeColoring, x: int, v: int) -> Decomposition:
    if not phi.is_total():
        raise DecompositionError("split_by_missing_pair needs a total coloring")
    bad = validate(phi)
    if bad is not None:
        raise DecompositionError(f"coloring is not proper: {bad}")
    shared = phi.missing(x) & phi.missing(v)
    if shared:
        raise DecompositionError(f"color {min(shared)} is missing at both {x} and {v}")
    psi = _rename_for(phi, x)
    return _split_coloring(g, psi, g.degrees[x], "split_by_missing_pair", {"x": x, "v": v})


# ---------------------------------------------------------------- minimal class


def _class_two(g: Multigraph, budget: Budget) -> tuple[EdgeColoring, int, int]:
    ci = chromatic_index(g, budget)
    delta = g.max_degree
    k = ci.chi - delta
    if k < 1:
        raise DecompositionError(f"graph is class I (chi' = Delta = {delta})")
    return ci.certificate, delta, k


def split_minimal_class(g: Multigraph, budget: Budget | int | None = None) -> Decomposition:
    budget = as_budget(budget)
    phi, _, _ = _class_two(g, budget)
    sizes = [len(phi.color_class(1))]
    while True:
        for e in sorted(phi.color_class(1)):
            u, v = g.edges[e]
            common = phi.missing(u) & phi.missing(v)
            if common:
                phi = phi.recolor({e: min(common)})
                break
        else:
            break
        sizes.append(len(phi.color_class(1)))
        if sizes[-1] >= sizes[-2]:
            raise DescentError("|E_1| did not decrease", sizes)
    if not sizes[-1]:
        raise DescentError("color class 1 emptied: the oracle's chromatic index is wrong", sizes)
    e = min(phi.color_class(1))
    u, v = g.edges[e]
    x, y = (u, v) if (g.degrees[u], -u) >= (g.degrees[v], -v) else (v, u)
    dec = split_by_missing_pair(g, phi, x, y)
    dec.method = "split_minimal_class"
    dec.counters.update({"E1_sizes": sizes, "edge": e})
    return dec


# ---------------------------------------------------------------- max subgraph descent


@dataclass
class DescentState:
    graph: Multigraph
    coloring: EdgeColoring  # palette Delta; colored edges form H1
    t_trace: list[int] = field(default_factory=list)
    odd_trace: list[int] = field(default_factory=list)
    exchanges: list[tuple[int, int]] = field(default_factory=list)
    certified: bool = True

    @property
    def h1(self) -> tuple[int, ...]:
        return tuple(self.coloring.colored_edges())

    @property
    def h2(self) -> tuple[int, ...]:
        return tuple(self.coloring.uncolored())

    @property
    def h2_degrees(self) -> list[int]:
        return part_degrees(self.graph, self.h2)

    @property
    def t(self) -> int:
        return potential(self.graph, self.h2)

    @property
    def odd_cycles(self) -> int:
        return len(odd_cycles(self.graph, self.h2))


def potential(g: Multigraph, h2) -> int:
    """Sum of remainder degrees over vertices whose remainder degree exceeds mu."""
    mu = g.multiplicity
    return sum(d for d in part_degrees(g, h2) if d > mu)


def _components(g: Multigraph, edges) -> list[tuple[set[int], list[int]]]:
    adj: dict[int, list[int]] = {}
    for e in edges:
        u, v = g.edges[e]
        adj.setdefault(u, []).append(e)
        adj.setdefault(v, []).append(e)
    seen: set[int] = set()
    out = []
    for s in sorted(adj):
        if s in seen:
            continue
        verts, comp_edges, stack = {s}, set(), [s]
        seen.add(s)
        while stack:
            w = stack.pop()
            for e in adj[w]:
                comp_edges.add(e)
                o = g.other(e, w)
                if o not in seen:
                    seen.add(o)
                    verts.add(o)
                    stack.append(o)
        out.append((verts, sorted(comp_edges)))
    return out


def odd_cycles(g: Multigraph, edges) -> list[list[int]]:
    """Odd cycle components of an edge set of maximum degree at most 2."""
    deg = part_degrees(g, edges)
    if max(deg, default=0) > 2:
        raise DecompositionError("odd cycle count is only defined for maximum degree <= 2")
    return [es for vs, es in _components(g, edges)
            if len(es) == len(vs) and len(es) % 2 == 1]


def _grow(gp: Multigraph, phip: EdgeColoring, ep: int, budget: Budget | None) -> EdgeColoring:
    # e is not critical in H1 + e, so H1 + e is Delta-colorable
    try:
        return _insert(gp, phip, ep)
    except VizingFailure:
        pass
    res = color_exact(gp, phip.palette, as_budget(budget))
    if res.outcome is not Outcome.FOUND:
        raise DescentError(f"H1 + edge is not {phip.palette}-colorable although no fan vertex qualifies ({res.outcome.value})")
    return res.coloring


def _exchange(g: Multigraph, phi: EdgeColoring, e: int, x: int, y: int, certified: bool,
              budget: Budget | None = None) -> tuple[EdgeColoring, int]:
    """Put remainder edge e=xy into H1 and move the last edge of a fan sequence out.

    Returns the new coloring and the edge that left H1 (``e`` itself if H1
    grew instead, which only happens for a non-maximum H1).
    """
    others = [f for f in phi.uncolored() if f != e]
    gp, emap = g.remove_edges(others)
    phip = EdgeColoring(gp, phi.palette, tuple(phi.colors[o] for o in emap.new_to_old))
    ep = emap.old_to_new[e]
    fan = build_maximal_multifan(gp, phip, x, ep)
    mx = phip.missing(x)
    fold_at = next((z for z in fan.vertices if phip.missing(z) & mx), None)
    if fold_at is not None:
        if certified:
            raise DescentError(f"H1 + edge {e} is Delta-colorable: H1 was not maximum")
        seq = extract_linear_sequence(fan, fold_at)
        phip = shift(gp, phip, seq)
        phip = phip.recolor({seq.edges[-1]: min(phip.missing(x) & phip.missing(fold_at))})
        out = None
    else:
        try:
            z = find_high_degree_fan_vertex(gp, phip, fan, phi.palette, y)
        except ContractBreach:
            if certified:
                raise
            z = None
        if z is None:
            phip = _grow(gp, phip, ep, budget)
            out = None
        else:
            seq = extract_linear_sequence(fan, z)
            phip = shift(gp, phip, seq)
            out = emap.new_to_old[seq.edges[-1]]
    cols = [UNCOLORED] * g.m
    for j, c in enumerate(phip.colors):
        cols[emap.new_to_old[j]] = c
    new = EdgeColoring(g, phi.palette, tuple(cols))
    bad = validate(new)
    if bad is not None:
        raise DescentError(f"exchange produced an improper coloring: {bad}")
    return new, (out if out is not None else e)


def heuristic_max_subgraph(g: Multigraph) -> EdgeColoring:
    """Delta largest classes of a Vizing coloring (not necessarily maximum)."""
    phi = color_vizing(g)
    k = g.max_degree
    sizes = sorted(((len(phi.color_class(c)), -c) for c in range(1, phi.palette + 1)), reverse=True)
    keep = [-c for _, c in sizes[:k]]
    mapping = {c: i + 1 for i, c in enumerate(keep)}
    return EdgeColoring(g, max(k, 1), tuple(mapping.get(c, UNCOLORED) for c in phi.colors))


def normalize_max_subgraph(g: Multigraph, h1: MaxSubgraph | EdgeColoring, certified: bool | None = None,
                           budget: Budget | int | None = None) -> DescentState:
    if isinstance(h1, MaxSubgraph):
        phi = h1.coloring
        certified = h1.optimal if certified is None else certified
    else:
        phi = h1
        certified = True if certified is None else certified
    if phi.palette != max(g.max_degree, 1) or validate(phi) is not None:
        raise DecompositionError("H1 must come with a proper Delta-coloring")
    state = DescentState(g, phi, certified=certified)
    mu = g.multiplicity
    state.t_trace.append(state.t)
    while state.t_trace[-1] > 0:
        deg = state.h2_degrees
        y = min(v for v in range(g.n) if deg[v] > mu)
        e = min(f for f in g.incidence[y] if state.coloring.colors[f] == UNCOLORED)
        x = g.other(e, y)
        state.coloring, out = _exchange(g, state.coloring, e, x, y, certified, budget)
        state.exchanges.append((e, out))
        t = state.t
        if t >= state.t_trace[-1]:
            raise DescentError(f"t(H2) did not decrease: {state.t_trace + [t]}", state.t_trace)
        state.t_trace.append(t)
    return state


def eliminate_odd_cycles(g: Multigraph, state: DescentState, chi: int | None = None,
                         budget: Budget | int | None = None) -> DescentState:
    mu = g.multiplicity
    delta = g.max_degree
    if chi is None:
        chi = chromatic_index(g).chi
    if mu > 2 or chi != delta + mu:
        raise DecompositionError(f"needs mu <= 2 and chi' = Delta + mu (mu={mu}, Delta={delta}, chi'={chi})")
    if state.t != 0:
        raise DecompositionError("remainder must already have maximum degree <= mu")
    state.odd_trace.append(state.odd_cycles)
    while state.odd_trace[-1] > 0:
        cyc = odd_cycles(g, state.h2)
        e = min(f for c in cyc for f in c)
        u, v = g.edges[e]
        y, x = min(u, v), max(u, v)
        state.coloring, out = _exchange(g, state.coloring, e, x, y, state.certified, budget)
        state.exchanges.append((e, out))
        count = state.odd_cycles
        if count >= state.odd_trace[-1] or state.t != 0:
            raise DescentError(f"odd cycle count did not decrease: {state.odd_trace + [count]}", state.odd_trace)
        state.odd_trace.append(count)
    return state


def remainder_coloring(g: Multigraph, edges, colors: int) -> EdgeColoring | None:
    """Color paths/even cycles/matchings of maximum degree <= 2 with ``colors`` colors."""
    cols = [UNCOLORED] * g.m
    for verts, es in _components(g, edges):
        if len(es) == 1:
            cols[es[0]] = 1
            continue
        # walk the component from an end vertex (or any vertex of a cycle)
        deg = {v: 0 for v in verts}
        for f in es:
            for w in g.edges[f]:
                deg[w] += 1
        if max(deg.values()) > colors:
            return None
        start = min((v for v in verts if deg[v] == 1), default=min(verts))
        left, cur, c = set(es), start, 1
        while left:
            f = min(f for f in left if cur in g.edges[f])
            cols[f] = c
            left.discard(f)
            cur = g.other(f, cur)
            c = 3 - c if colors == 2 else 1
    phi = EdgeColoring(g, max(colors, 1), tuple(cols))
    return phi if validate(phi) is None else None


def decompose_max_subgraph(g: Multigraph, budget: Budget | int | None = None, certified: bool = True) -> Decomposition:
    """Maximum Delta-colorable subgraph plus a remainder of maximum degree <= mu."""
    budget = as_budget(budget)
    ci = chromatic_index(g, budget)
    if ci.chi == g.max_degree:
        raise DecompositionError("graph is class I")
    if certified:
        h1 = max_delta_colorable_subgraph_exact(g, budget)
        if not h1.optimal:
            certified = False
        start: MaxSubgraph | EdgeColoring = h1
    else:
        start = heuristic_max_subgraph(g)
    state = normalize_max_subgraph(g, start, certified=certified, budget=budget)
    moreover = g.multiplicity <= 2 and ci.chi == g.max_degree + g.multiplicity
    if moreover:
        state = eliminate_odd_cycles(g, state, ci.chi, budget)
    h1e, h2e = state.h1, state.h2
    mu = g.multiplicity
    cert2 = remainder_coloring(g, h2e, mu) if moreover else None
    if cert2 is None:
        sub, emap = g.subgraph(h2e)
        c2 = chromatic_index(sub, budget).certificate
        cols = [UNCOLORED] * g.m
        for j, c in enumerate(c2.colors):
            cols[emap.new_to_old[j]] = c
        cert2 = EdgeColoring(g, c2.palette, tuple(cols))
    counters = {"t_trace": state.t_trace, "odd_cycle_trace": state.odd_trace,
                "exchanges": [list(p) for p in state.exchanges], "moreover": moreover}
    return Decomposition(g, h1e, h2e, state.coloring, cert2, (g.max_degree, mu),
                         "maxsub", counters, certified=certified)


# ---------------------------------------------------------------- missing-set overlap


@dataclass
class OverlapTrace:
    c1_sizes: list[int] = field(default_factory=list)
    aux_swaps: list[int] = field(default_factory=list)
    steps: list[str] = field(default_factory=list)


MAX_AUX_SWAPS = 3


def reduce_missing_overlap(g: Multigraph, phi: EdgeColoring, x: int, y: int, k: int,
                           trace: OverlapTrace | None = None) -> EdgeColoring:
    """One pass of Kempe changes that shrinks the set of colors missing at both x and y."""
    delta = g.max_degree
    if g.degrees[x] != delta or x == y:
        raise DecompositionError(f"x={x} must be a maximum-degree vertex distinct from y={y}")
    if phi.palette != delta + k or not phi.is_total() or validate(phi) is not None:
        raise DecompositionError("phi must be a total proper (Delta + k)-coloring")
    if g.degrees[y] < delta - 1:
        raise DecompositionError(f"y={y} must have degree at least Delta - 1")
    if len(g.edges_between(x, y)) >= g.degrees[y] - k + 1:
        raise DecompositionError(f"|E(x,y)| = {len(g.edges_between(x, y))} is not below d(y) - k + 1")
    c1 = partition_relative(phi, x, y)[0]
    if not c1:
        raise DecompositionError("no color is missing at both x and y")
    trace = trace if trace is not None else OverlapTrace()
    before = len(c1)
    aux = 0
    log: list[str] = []

    def fail(msg: str) -> DescentError:
        return DescentError(f"{msg} (x={x}, y={y}, steps={log}, coloring={list(phi.colors)})", log)

    def aux_swap(chain, label: str) -> None:
        nonlocal phi, aux
        if chain.contains(x) or chain.contains(y):
            raise fail(f"{label}: chain meets x or y")
        phi = kempe_swap(phi, chain)
        aux += 1
        log.append(label)
        if aux > MAX_AUX_SWAPS:
            raise fail("too many auxiliary swaps in one pass")

    while True:
        c1, c2, c3, c4 = partition_relative(phi, x, y)
        # step 1: a chain through y that misses x frees a common color
        for a in sorted(c1):
            for eta in sorted(c4):
                if not kempe_chain(phi, x, a, eta).contains(y):
                    phi = kempe_swap(phi, kempe_chain(phi, y, a, eta))
                    log.append(f"swap P_y({a},{eta})")
                    after = len(partition_relative(phi, x, y)[0])
                    if after >= before:
                        raise fail("common missing set did not shrink")
                    trace.c1_sizes.append(after)
                    trace.aux_swaps.append(aux)
                    trace.steps.append("; ".join(log))
                    return phi
        # step 2
        xy = set(g.edges_between(x, y))
        e1 = next((phi.edge_with(x, eta) for eta in sorted(c4) if phi.edge_with(x, eta) not in xy), None)
        if e1 is None:
            raise fail("no edge at x outside E(x,y) carries a color present at both")
        z1 = g.other(e1, x)
        m1 = phi.missing(z1)
        # step 3
        if m1 & c1:
            raise fail("z1 misses a common color but step 1 did not fire")
        if m1 & c4:
            aux_swap(kempe_chain(phi, z1, min(c1), min(m1 & c4)), "z1 frees a common color")
            continue
        # step 4
        if not m1 & c3:
            raise fail("z1 misses no color present only at x")
        g1 = min(m1 & c3)
        e2 = phi.edge_with(x, g1)
        z2 = g.other(e2, x)
        if z2 in (z1, y):
            raise fail(f"z2={z2} coincides with z1 or y")
        m2 = phi.missing(z2)
        # step 5
        if m2 & c1:
            aux_swap(kempe_chain(phi, z1, min(m2 & c1), g1), "z2 misses a common color; swap at z1")
            continue
        if m2 & c4:
            aux_swap(kempe_chain(phi, z2, min(c1), min(m2 & c4)), "z2 frees a common color")
            continue
        # step 6
        both = m1 & m2
        if not both:
            raise fail("z1 and z2 share no missing color")
        b, a = min(both), min(c1)
        for z in (z1, z2):
            chain = kempe_chain(phi, z, b, a)
            if not (chain.contains(x) or chain.contains(y)):
                aux_swap(chain, f"shared color at z1,z2; swap at {z}")
                break
        else:
            raise fail("both chains meet x or y")


# ---------------------------------------------------------------- class I pair


def _check_pair(g: Multigraph, psi: EdgeColoring, delta: int, k: int) -> None:
    if validate(psi) is not None or not psi.is_total() or psi.palette != delta + k:
        raise StructureError("pair coloring is not a total proper (Delta+k)-coloring")
    d1 = part_degrees(g, [e for e, c in enumerate(psi.colors) if c <= delta])
    d2 = part_degrees(g, [e for e, c in enumerate(psi.colors) if c > delta])
    if max(d1, default=0) != delta or max(d2, default=0) != k:
        raise StructureError(f"part degrees {max(d1, default=0)}, {max(d2, default=0)} != {delta}, {k}")


def _pair(g: Multigraph, phi: EdgeColoring, delta: int, k: int, log: list[dict[str, Any]],
          shortcut: bool = True) -> EdgeColoring:
    """A (Delta+k)-coloring whose colors 1..Delta form a class I part of maximum degree Delta
    and whose remaining k colors form a class I part of maximum degree k."""
    top = [v for v in range(g.n) if g.degrees[v] == delta]
    entry: dict[str, Any] = {"Delta": delta, "k": k}
    log.append(entry)
    if delta <= 2:
        x = top[0]
        v = next((v for v in range(g.n) if not phi.missing(x) & phi.missing(v)), None)
        if v is None:
            raise StructureError("optimal coloring has an empty color class")
        entry.update(step="base", x=x, v=v)
        return _rename_for(phi, x)
    for x in top if shortcut else ():
        for v in range(g.n):
            if v != x and not phi.missing(x) & phi.missing(v):
                entry.update(step="disjoint", x=x, v=v)
                return _rename_for(phi, x)
    x = top[0]
    for y in sorted(g.vertices_of_degree_at_least(delta - 1) - {x}):
        if len(g.edges_between(x, y)) < g.degrees[y] - k + 1:
            trace = OverlapTrace(c1_sizes=[len(partition_relative(phi, x, y)[0])])
            while trace.c1_sizes[-1]:
                phi = reduce_missing_overlap(g, phi, x, y, k, trace)
            entry.update(step="overlap", x=x, v=y, c1_sizes=trace.c1_sizes, aux_swaps=trace.aux_swaps)
            return _rename_for(phi, x)
    high = g.vertices_of_degree_at_least(delta - 1)
    nbrs = g.neighbors(x)
    if not high <= set(nbrs) | {x}:
        raise StructureError(f"high-degree vertex outside N({x}) + {x}")
    if len(high & set(nbrs)) > 1:
        raise StructureError(f"two (Delta-1)+ vertices in N({x})")
    y = max(nbrs, key=lambda z: (g.degrees[z], -z))
    e = min(g.edges_between(x, y))
    alpha = phi.colors[e]
    cls = sorted(phi.color_class(alpha))
    gp, emap = g.remove_edges(cls)
    if gp.max_degree != delta - 1:
        raise StructureError(f"removing color class {alpha} left Delta = {gp.max_degree}")
    shifted = tuple(c if c < alpha else c - 1 for c in (phi.colors[o] for o in emap.new_to_old))
    phip = EdgeColoring(gp, delta + k - 1, shifted)
    entry.update(step="recurse", x=x, y=y, edge=e, color=alpha, removed=cls)
    psip = _pair(gp, phip, delta - 1, k, log, shortcut)
    cols = [UNCOLORED] * g.m
    for e_old in cls:
        cols[e_old] = delta
    for j, c in enumerate(psip.colors):
        cols[emap.new_to_old[j]] = c if c <= delta - 1 else c + 1
    return EdgeColoring(g, delta + k, tuple(cols))


def decompose_class1_pair(g: Multigraph, budget: Budget | int | None = None, shortcut: bool = True) -> Decomposition:
    """Class I parts with maximum degrees Delta and k = chi' - Delta.

    With ``shortcut=False`` the initial check for an already-disjoint pair of
    missing sets is skipped, forcing the Kempe-change and recursive branches.
    """
    budget = as_budget(budget)
    phi, delta, k = _class_two(g, budget)
    log: list[dict[str, Any]] = []
    try:
        psi = _pair(g, phi, delta, k, log, shortcut)
        _check_pair(g, psi, delta, k)
        method = "class1_pair"
    except StructureError as exc:
        found = split_search(g, delta, k, budget)
        if found is None:
            raise DescentError(f"no split with degrees ({delta}, {k}) exists: {exc}", log) from exc
        psi = found[2]
        log.append({"step": "fallback", "reason": str(exc)})
        method = "class1_pair_fallback"
    dec = _split_coloring(g, psi, delta, method, {"levels": log})
    return dec


def verify_decomposition(g: Multigraph, dec: Decomposition, budget: Budget | int | None = None) -> dict[str, Any]:
    """Recompute every claim about a decomposition; ``problems`` lists violations."""
    budget = as_budget(budget)
    problems: list[str] = []
    p1, p2 = set(dec.part1), set(dec.part2)
    if p1 & p2:
        problems.append(f"parts overlap on edges {sorted(p1 & p2)}")
    if p1 | p2 != set(range(g.m)):
        problems.append(f"parts miss edges {sorted(set(range(g.m)) - p1 - p2)}")
    block: dict[str, Any] = {}
    for idx, part, cert in ((1, p1, dec.cert1), (2, p2, dec.cert2)):
        bad = validate(cert)
        if bad is not None:
            problems.append(f"certificate {idx} improper: {bad}")
        colored = set(cert.colored_edges())
        if colored != part:
            problems.append(f"certificate {idx} colors {sorted(colored ^ part)} inconsistently with part {idx}")
        delta_i = max(part_degrees(g, part), default=0)
        used = len(cert.used_colors())
        if delta_i and used == delta_i and colored == part and bad is None:
            chi_i = delta_i
        else:
            sub, _ = g.subgraph(part)
            chi_i = chromatic_index(sub, budget).chi
        block[f"part{idx}"] = {"size": len(part), "Delta": delta_i, "colors_used": used,
                               "chi": chi_i, "class_I": chi_i == delta_i}
    return {"ok": not problems, "problems": problems, **block}
