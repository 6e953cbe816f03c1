import json

import pytest

from orbit_atlas.exact_algebra import DomainError
from orbit_atlas.group_model import build_context
from orbit_atlas.order_graphs import (braid_length, build_graph, build_weak_graph,
                                      check_compatibility, korbit_census, minimal_nodes,
                                      op_duality_check, export, weak_closure)
from orbit_atlas.orbit_engine import RIGHT, get_engine
from orbit_atlas.standard_flags import parse_flag

from figures import FIGURES


def graph(family, n, order="standard"):
    return build_graph(get_engine(family, n), order)


@pytest.mark.parametrize("key", list(FIGURES))
def test_figure_edges(key):
    nodes, edges, green, profile = FIGURES[key]
    g = graph(*key)
    by = {q.flag.ascii(): q.flag for q in g.nodes}
    assert set(by) == set(nodes.values())
    have = {(e.src, e.dst, e.side, e.root, e.case) for e in g.weak_edges}
    drawn = {(by[nodes[s]], by[nodes[d]], side, root, case) for s, d, side, root, case in edges}
    assert drawn <= have
    # the figures draw every related pair, sometimes with one of several labels
    assert {(a, b) for a, b, *_ in have} == {(a, b) for a, b, *_ in drawn}
    assert g.green_pairs == {(by[nodes[s]], by[nodes[d]]) for s, d in green}


def test_green_examples():
    g = graph("A", 3)
    a, b = parse_flag("A", 3, "(e2<e1<e3)"), parse_flag("A", 3, "(h2<e1<e3)")
    assert (a, b) in g.standard_relation and (a, b) not in weak_closure(g)
    g = graph("B", 5)
    a, b = parse_flag("B", 2, "(e-1<e-2)"), parse_flag("B", 2, "(h1<e-2)")
    assert (a, b) in g.green_pairs


def test_minimal_examples():
    g = build_weak_graph(get_engine("A", 3))
    assert {F.ascii() for F in minimal_nodes(g)} == {"(e1<e2<e3)", "(e1<e3<e2)", "(e3<e1<e2)"}
    g = build_weak_graph(get_engine("B", 5))
    assert {F.ascii() for F in minimal_nodes(g)} == {"(e1<e2)", "(e1<e-2)"}
    g = build_weak_graph(get_engine("A", 3), sides=(RIGHT,))
    assert parse_flag("A", 3, "(e2<e3<e1)") in minimal_nodes(g)


@pytest.mark.parametrize("family,n", [("A", 3), ("A", 4), ("D", 4), ("B", 5), ("D", 6)])
def test_order_invariants(family, n):
    g = graph(family, n)
    rel = g.standard_relation
    for e in g.weak_edges:
        assert g.node(e.dst).dim == g.node(e.src).dim + 1
    assert weak_closure(g) <= rel
    flags = [q.flag for q in g.nodes]
    assert all((F, F) in rel for F in flags)
    for a, b in rel:
        if a != b:
            assert (b, a) not in rel
    for c in g.standard_covers:
        assert g.node(c.dst).length > g.node(c.src).length
    check_compatibility(g)


def test_braid_lengths():
    eng = get_engine("B", 5)
    assert braid_length(eng, ("Right", "a1"), ("Right", "a2")) == 4
    assert braid_length(eng, ("Left", "k1"), ("Left", "k2")) == 2
    assert braid_length(eng, ("Left", "k1"), ("Right", "a1")) == 2
    assert braid_length(get_engine("A", 4), ("Right", "a1"), ("Right", "a2")) == 3
    assert braid_length(get_engine("A", 4), ("Right", "a1"), ("Right", "a3")) == 2


@pytest.mark.parametrize("family,n", [("A", 2), ("A", 3), ("A", 5), ("D", 4), ("B", 3), ("B", 5)])
def test_korbit_census(family, n):
    census = korbit_census(get_engine(family, n))
    assert all(a == b for a, b in census.values())
    assert sum(a for a, _ in census.values()) == len(get_engine(family, n).nodes)


@pytest.mark.parametrize("big,small", [(("A", 3), ("A", 2)), (("A", 4), ("A", 3)),
                                       (("D", 4), ("B", 3)), (("B", 5), ("D", 4)),
                                       (("D", 6), ("B", 5))])
def test_op_duality(big, small):
    r = op_duality_check(get_engine(*big), get_engine(*small))
    assert r["orbits"] == len(get_engine(*small).nodes)
    assert len(set(r["mapping"].values())) == r["orbits"]


def test_op_duality_rejects_wrong_pair():
    with pytest.raises(DomainError):
        op_duality_check(get_engine("A", 3), get_engine("D", 4))


def test_export_dot():
    text = export(graph("A", 3), "dot")
    assert '"(e1<e2<e3)" -> "(e1<h2<e3)" [color=red,label="a2"];' in text
    assert '"(e2<e1<e3)" -> "(h2<e1<e3)" [color=green];' in text
    assert "style=dashed" in text
    assert text == export(build_graph(build_context("A", 3)), "dot")
    so4 = export(graph("D", 4), "dot")
    assert sum(1 for line in so4.splitlines() if "[dim=" in line) == 5


def test_export_json():
    g = graph("B", 5)
    data = json.loads(export(g, "json"))
    assert len(data["nodes"]) == 17 and len(data["weak_edges"]) == len(g.weak_edges)
    assert sum(c["green"] for c in data["standard_covers"]) == 6
    assert json.loads(json.dumps(data, sort_keys=True)) == data
    weak = json.loads(export(graph("B", 5, "weak"), "json", "weak"))
    assert weak["standard_covers"] == []
    with pytest.raises(DomainError):
        export(g, "svg")
    with pytest.raises(DomainError):
        build_graph(get_engine("A", 2), "bruhat")
