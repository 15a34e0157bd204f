from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from edgesplit.multigraph import Multigraph, build
from edgesplit.structures import complete_graph, make_shannon, petersen

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile("default")


@st.composite
def multigraphs(draw, max_n: int = 6, max_m: int = 12, max_mu: int = 3) -> Multigraph:
    """Loopless multigraphs with at most ``max_mu`` parallel edges per pair."""
    n = draw(st.integers(2, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mult = draw(st.lists(st.integers(0, max_mu), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, k in zip(pairs, mult) for _ in range(k)][:max_m]
    edges = draw(st.permutations(edges))
    return build(n, edges)


@pytest.fixture
def k3() -> Multigraph:
    return complete_graph(3)


@pytest.fixture
def s3() -> Multigraph:
    return make_shannon(3)


@pytest.fixture
def s4() -> Multigraph:
    return make_shannon(4)


@pytest.fixture
def pet() -> Multigraph:
    return petersen()
