import pytest
from graph_strategies import complete, cycle

from hamgen_cycles import circuit_to_chain, make_circuit, parse_circuit
from hamgen_errors import CapacityError, GraphError, InapplicableError
from hamgen_families import build, build_graph
from hamgen_generated import (
    embed_chain,
    enumerate_circuits,
    in_bM,
    in_M,
    lift_edge,
    membership,
    realize,
    single_extra_circuit_suffices,
    span_report,
)
from hamgen_gf2 import combine, in_span
from hamgen_graph import add_edge, new_graph
from hamgen_hamilton import LengthSet
from hamgen_report import FINDING, PASS

H = LengthSet.hamilton()
DIAMOND = new_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])


def test_span_report_of_first_counterexample():
    span = span_report(build_graph("ce-i1"), H)
    assert span.ambient_dim == 6
    assert span.span_dim == 5
    assert span.codimension == 1
    assert span.generator_count == 6
    assert len(span.basis_witness) == 5
    assert span.to_dict()["codimension"] == 1


def test_graph_x_is_hamilton_generated():
    span = span_report(build_graph("x7"), H)
    assert span.ambient_dim == 8
    assert span.codimension == 0


def test_membership_in_codimension_class():
    g = build_graph("ce-i1")
    m = membership(g, H, 1)
    assert m.holds
    assert m.paths is not None and m.paths.holds
    assert in_M(g, H, 1)
    assert not in_M(g, H, 0)
    assert membership(g, H, 0).paths is None


def test_membership_rejects_codimension_out_of_range():
    with pytest.raises(ValueError):
        membership(complete(4), H, 4)
    with pytest.raises(ValueError):
        membership(complete(4), H, -1)


def test_bipartite_membership():
    assert in_bM(build_graph("pr", 4), H, 0)
    with pytest.raises(InapplicableError):
        in_bM(complete(5), H, 0)


def test_enumeration_cap_raises():
    with pytest.raises(CapacityError):
        enumerate_circuits(complete(6), H, cap=3)


def test_embed_chain_follows_edge_names():
    g = cycle(4)
    h = add_edge(g, (0, 2))
    v = circuit_to_chain(g, make_circuit(g, [0, 1, 2, 3]))
    embedded = embed_chain(g, h, v)
    assert embedded.width == h.f1
    assert sorted(h.edges[i] for i in embedded.support()) == sorted(g.edges)


def test_lift_edge_keeps_generatedness_on_dense_host():
    g = build_graph("cn2", 7)
    report = lift_edge(g, H, 0, (0, 3))
    assert report.status == PASS
    assert report.computed["path_found"]
    assert report.computed["ds1"]
    assert report.computed["ds2"]
    computed = report.computed
    assert computed["dim_cycle_space_after"] == computed["dim_cycle_space_before"] + 1


def test_lift_edge_in_bipartite_class():
    g = build_graph("pr", 4)
    report = lift_edge(g, H, 0, (0, 6), bipartite=True)
    assert report.status == PASS
    assert report.computed["member_after"]


def test_lift_edge_with_positive_codimension_is_not_a_failure():
    g = build_graph("cn2", 6)
    report = lift_edge(g, H, 1, (0, 3))
    assert report.status in (PASS, FINDING)
    assert report.computed["ds2"]


def test_lift_edge_preconditions():
    g = build_graph("cn2", 7)
    with pytest.raises(GraphError):
        lift_edge(g, H, 0, (0, 1))
    with pytest.raises(GraphError):
        lift_edge(g, H, 0, (0, 0))
    with pytest.raises(ValueError):
        lift_edge(build_graph("pr", 4), H, 0, (0, 2), bipartite=True)
    with pytest.raises(ValueError):
        lift_edge(g, H, 1, (0, 3))


def test_realize_triangle_in_graph_x():
    family = build("x7")
    g = family.graph
    target = parse_circuit(g, "v5,v6,v7", family.layout)
    picked = realize(g, target, H)
    assert picked is not None
    chains = [circuit_to_chain(g, c) for c in picked]
    assert combine(chains, [1] * len(chains), g.f1) == circuit_to_chain(g, target)


def test_realize_member_is_singleton():
    g = build_graph("x7")
    first = enumerate_circuits(g, H)[0]
    assert realize(g, first, H) == [first]


def test_realize_reports_absence():
    triangle = make_circuit(DIAMOND, [0, 1, 2])
    assert realize(DIAMOND, triangle, H) is None


def test_single_extra_circuit_closes_codimension_one():
    g = build_graph("pr-boxminus", 4)
    extra = single_extra_circuit_suffices(g)
    assert extra is not None
    assert len(extra) == g.n - 1
    hamilton = [circuit_to_chain(g, c) for c in enumerate_circuits(g, H)]
    assert in_span(circuit_to_chain(g, extra), hamilton) is None


def test_single_extra_circuit_needs_codimension_one():
    assert single_extra_circuit_suffices(build_graph("x7")) is None
