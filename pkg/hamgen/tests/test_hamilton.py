from itertools import combinations

import pytest
from graph_strategies import complete, cycle, graphs, path
from hypothesis import given, settings

from hamgen_errors import CapacityError, GraphError, InapplicableError
from hamgen_families import build, build_graph
from hamgen_graph import new_graph
from hamgen_hamilton import (
    LengthSet,
    circuits_with_lengths,
    edges_off_hamilton_circuits,
    every_edge_on_hamilton_circuit,
    find_path,
    hamilton_circuits,
    hamilton_path,
    has_circuit_of_length,
    is_hamilton_connected,
    is_hamilton_laceable,
    is_pancyclic,
)

PETERSEN = new_graph(
    10,
    [(i, (i + 1) % 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)],
)


def test_length_set_parse_and_label():
    near = LengthSet.parse("f0-1, f0")
    assert near == LengthSet.near_hamilton()
    assert near.label() == "{f0-1,f0}"
    assert LengthSet.parse("4,5").label() == "{4,5}"
    assert LengthSet.hamilton().minus_one().label() == "{f0}-1"
    for bad in ("", "f0x", "four"):
        with pytest.raises(ValueError):
            LengthSet.parse(bad)


def test_length_set_resolve():
    g = complete(7)
    assert LengthSet.near_hamilton().resolve(g) == {6, 7}
    assert LengthSet.of(2, 3, 9).resolve(g) == {3}
    assert LengthSet.hamilton().minus_one().resolve(g, paths=True) == {6}


@pytest.mark.parametrize(
    "g, count",
    [(complete(4), 3), (complete(5), 12), (cycle(6), 1), (path(4), 0), (PETERSEN, 0)],
)
def test_hamilton_circuit_counts(g, count):
    search = hamilton_circuits(g)
    assert len(search) == count
    assert not search.partial
    assert all(len(c) == g.n for c in search)


def test_circuits_of_given_lengths():
    assert len(circuits_with_lengths(complete(4), {3})) == 4
    assert len(circuits_with_lengths(complete(4), LengthSet.of(3, 4))) == 7
    assert len(circuits_with_lengths(PETERSEN, {5})) == 12


def test_hamilton_circuits_need_three_vertices():
    with pytest.raises(GraphError):
        hamilton_circuits(path(2))


def test_cap_marks_search_partial():
    search = hamilton_circuits(complete(5), limit=5)
    assert search.partial
    assert len(search) == 5
    with pytest.raises(CapacityError):
        search.require_complete()


def test_threads_do_not_change_output():
    g = build_graph("pr", 6)
    assert hamilton_circuits(g, threads=4).circuits == hamilton_circuits(g, threads=1).circuits


def test_hamilton_path():
    g = cycle(5)
    assert hamilton_path(g, 0, 1) == (0, 4, 3, 2, 1)
    assert hamilton_path(g, 0, 2) is None
    with pytest.raises(GraphError):
        hamilton_path(g, 1, 1)
    with pytest.raises(GraphError):
        hamilton_path(g, 0, 7)


def test_find_path_respects_lengths():
    g = cycle(5)
    assert find_path(g, 0, 1, {1}) == (0, 1)
    assert find_path(g, 0, 1, {4}) == (0, 4, 3, 2, 1)
    assert find_path(g, 0, 2, {3}) == (0, 4, 3, 2)
    assert find_path(g, 0, 2, {1}) is None
    assert find_path(g, 0, 2, set()) is None


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=7))
def test_hamilton_path_is_valid_when_found(g):
    for u, v in combinations(range(g.n), 2):
        found = hamilton_path(g, u, v)
        if found is None:
            continue
        assert found[0] == u and found[-1] == v
        assert sorted(found) == list(range(g.n))
        assert all(g.has_edge(a, b) for a, b in zip(found, found[1:]))


def test_hamilton_connectedness():
    assert is_hamilton_connected(complete(5))
    verdict = is_hamilton_connected(cycle(5))
    assert not verdict
    assert verdict.witness == (0, 2)
    assert is_hamilton_connected(build_graph("ce-i1"))


def test_hamilton_laceability():
    assert is_hamilton_laceable(build_graph("pr", 4))
    assert not is_hamilton_laceable(cycle(6))
    with pytest.raises(InapplicableError):
        is_hamilton_laceable(cycle(5))


def test_pancyclic():
    assert is_pancyclic(complete(5))
    assert not is_pancyclic(cycle(5))
    assert is_pancyclic(build_graph("ce-i1"))
    assert not is_pancyclic(path(2))


def test_circuit_existence_is_quiet(capsys):
    assert has_circuit_of_length(cycle(6), 6)
    assert not has_circuit_of_length(cycle(6), 4)
    assert not has_circuit_of_length(cycle(6), 7)
    assert has_circuit_of_length(complete(5), 3)
    assert is_pancyclic(build_graph("ce-i1"))
    assert "cap" not in capsys.readouterr().err


def test_edges_off_hamilton_circuits():
    ce = build("ce-i3")
    assert edges_off_hamilton_circuits(ce.graph) == [ce.edge("v1", "v9")]
    assert every_edge_on_hamilton_circuit(build_graph("ce-i1"))
    assert every_edge_on_hamilton_circuit(complete(5))
