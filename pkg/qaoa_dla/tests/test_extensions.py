import pytest

from qaoa_dla.errors import HypothesisViolation, PreconditionError
from qaoa_dla.graphs.base import CERTIFIED_FREE, FREE, Graph
from qaoa_dla.graphs.extensions import ExtensionSpec, extend_free
from qaoa_dla.graphs.families import generate_family


def triangle_plus_isolated() -> Graph:
    return Graph(4, [(0, 1), (1, 2), (0, 2)])


def test_partition_extension_of_ladder() -> None:
    ladder = generate_family("ExtendedLadder(3,1)").with_tags(FREE)
    spec = ExtensionSpec("partition_case2", triangle_plus_isolated(), ((0, 0), (1, 1), (2, 2), (5, 3)))
    out = extend_free(ladder, spec)
    assert out.n == 11
    assert CERTIFIED_FREE in out.tags
    assert out.has_edge(5, 10)


def test_forest_extension() -> None:
    ladder = generate_family("ExtendedLadder(3,2)").with_tags(FREE)
    spec = ExtensionSpec("forest", generate_family("Star(3)"), ((1, 0), (4, 1), (5, 2), (7, 3)))
    out = extend_free(ladder, spec)
    assert out.n == 12
    assert CERTIFIED_FREE in out.tags


def test_forest_extension_rejects_cycle() -> None:
    ladder = generate_family("ExtendedLadder(3,2)").with_tags(FREE)
    spec = ExtensionSpec("forest", generate_family("Cycle(4)"), ((1, 0), (4, 1), (5, 2), (7, 3)))
    with pytest.raises(HypothesisViolation) as exc:
        extend_free(ladder, spec)
    assert exc.value.condition == "forest.acyclic"


def test_partition_extension_rejects_even_target() -> None:
    ladder = generate_family("ExtendedLadder(3,1)").with_tags(FREE)
    spec = ExtensionSpec("partition_case2", generate_family("Complete(3)"), ((0, 0), (1, 0), (2, 1), (5, 2)))
    with pytest.raises(HypothesisViolation) as exc:
        extend_free(ladder, spec)
    assert exc.value.condition == "partition_case2.to_even"
    assert "odd partition" in exc.value.reason
    assert exc.value.code == "HYPOTHESIS_VIOLATION"


def test_extension_requires_free_tag() -> None:
    spec = ExtensionSpec("partition_case2", triangle_plus_isolated(), ((0, 0), (1, 1), (2, 2), (5, 3)))
    with pytest.raises(PreconditionError):
        extend_free(generate_family("ExtendedLadder(3,1)"), spec)


def test_partition_extension_must_cover_v_o() -> None:
    ladder = generate_family("ExtendedLadder(3,1)").with_tags(FREE)
    spec = ExtensionSpec("partition_case2", triangle_plus_isolated(), ((0, 0), (1, 1), (2, 2)))
    with pytest.raises(HypothesisViolation) as exc:
        extend_free(ladder, spec)
    assert exc.value.condition == "partition_case2"
