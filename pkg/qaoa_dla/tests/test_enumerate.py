import pytest

from qaoa_dla.errors import UnsupportedSizeError
from qaoa_dla.graphs.base import Graph
from qaoa_dla.graphs.enumerate import are_isomorphic, automorphism_group, canonical_form, canonical_graph, enumerate_connected
from qaoa_dla.graphs.families import generate_family


def test_enumerate_small_counts() -> None:
    assert [len(enumerate_connected(n)) for n in (1, 2, 3, 4, 5)] == [1, 1, 2, 6, 21]


def test_enumerated_graphs_are_connected_and_distinct() -> None:
    graphs = enumerate_connected(5)
    assert all(g.is_connected() for g in graphs)
    assert len({canonical_form(g) for g in graphs}) == len(graphs)


@pytest.mark.slow
def test_enumerate_counts_six_and_seven() -> None:
    assert len(enumerate_connected(6)) == 112
    assert len(enumerate_connected(7)) == 853


def test_enumerate_guard() -> None:
    with pytest.raises(UnsupportedSizeError) as exc:
        enumerate_connected(8)
    assert exc.value.code == "UNSUPPORTED_SIZE"


def test_canonical_form_ignores_labelling() -> None:
    a = Graph(4, [(0, 1), (1, 2), (2, 3)])
    b = Graph(4, [(2, 0), (0, 3), (3, 1)])
    assert canonical_form(a) == canonical_form(b)
    assert are_isomorphic(a, b)
    assert canonical_graph(a) == canonical_graph(b)
    assert not are_isomorphic(a, generate_family("Star(3)"))


def test_automorphism_group_sizes() -> None:
    assert len(automorphism_group(generate_family("Cycle(4)"))) == 8
    assert automorphism_group(generate_family("Spider(1,2,3)")) == [tuple(range(7))]
    assert len(automorphism_group(generate_family("Complete(3)"))) == 6


def test_automorphisms_respect_weights() -> None:
    g = Graph(3, [(0, 1), (1, 2)], weights=[1.0, 2.0])
    assert automorphism_group(g) == [(0, 1, 2)]
