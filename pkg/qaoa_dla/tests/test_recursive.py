import pytest

from qaoa_dla.errors import ParameterError, PreconditionError
from qaoa_dla.graphs.base import Graph
from qaoa_dla.graphs.families import generate_family
from qaoa_dla.graphs.sampling import sample_er
from qaoa_dla.splitting.partition import is_splittable
from qaoa_dla.splitting.recursive import brute_force_is_free, check_free_recursive


def test_cycle_fails_guard() -> None:
    assert check_free_recursive(generate_family("Cycle(12)"), 7) is False


def test_small_non_free_graph() -> None:
    assert brute_force_is_free(generate_family("Path(4)")) is False
    assert check_free_recursive(generate_family("Path(4)"), 7) is False


def test_cap_must_be_positive() -> None:
    with pytest.raises(ParameterError):
        check_free_recursive(generate_family("Path(4)"), 0)


@pytest.mark.slow
def test_free_seven_vertex_graph_via_base_case() -> None:
    g = Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (1, 6), (1, 3)])
    assert check_free_recursive(g, 7) is True



def test_weighted_input_is_rejected_by_oracle() -> None:
    g = Graph(3, [(0, 1), (0, 2), (1, 2)], weights=[1.0, 2.0, 4.0])
    with pytest.raises(PreconditionError) as exc:
        brute_force_is_free(g)
    assert exc.value.code == "PRECONDITION_FAILED"
    assert check_free_recursive(g, 7) is False


@pytest.mark.slow
def test_recursive_check_agrees_with_splitting_on_larger_graphs() -> None:
    for seed in range(20):
        g = sample_er(24, 0.5, seed)
        if check_free_recursive(g, 7):
            assert is_splittable(g)[0], seed
