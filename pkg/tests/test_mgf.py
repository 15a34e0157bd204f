from __future__ import annotations

import pytest
from hypothesis import given

from conftest import multigraphs
from edgesplit.mgf import MgfError, digest, parse_mgf, serialize_mgf
from edgesplit.structures import gen_corpus


def test_parse_triangle(k3):
    g = parse_mgf("mgf 3 3\n0 1\n1 2\n0 2\n")
    assert g.edges == ((0, 1), (1, 2), (0, 2)) and g.max_degree == 2


def test_parse_s3(s3):
    g = parse_mgf("mgf 3 4\n0 1\n1 2\n0 2\n0 2\n")
    assert g.edges == s3.edges


def test_comments_and_blank_lines():
    g = parse_mgf("# header follows\n\nmgf 2 2  # two vertices\n0 1\n# parallel\n1 0\n")
    assert g.edges == ((0, 1), (1, 0))


@pytest.mark.parametrize("text, line, fragment", [
    ("mgf 2 1\n0 0\n", 2, "loop"),
    ("mgf 2 1\n0 1 2\n", 2, "expected 'u v'"),
    ("mgf 2 1\n0 x\n", 2, "non-integer"),
    ("mgf 2 1\n0 5\n", 2, "out of range"),
    ("graph 2 1\n0 1\n", 1, "header"),
    ("mgf 2 2\n0 1\n", 0, "declares 2 edges"),
    ("# nothing\n", 0, "missing"),
])
def test_parse_errors(text, line, fragment):
    with pytest.raises(MgfError, match=fragment) as info:
        parse_mgf(text)
    assert info.value.line == line


def test_serialize_canonical(s3):
    assert serialize_mgf(s3) == "mgf 3 4\n0 1\n1 2\n0 2\n0 2\n"
    assert digest(s3).startswith("sha256:") and len(digest(s3)) == 71


def test_round_trip_corpus():
    for g in gen_corpus():
        assert parse_mgf(serialize_mgf(g)).edges == g.edges


@given(multigraphs())
def test_round_trip_random(g):
    h = parse_mgf(serialize_mgf(g))
    assert (h.n, h.edges) == (g.n, g.edges)
    assert serialize_mgf(h) == serialize_mgf(g)
