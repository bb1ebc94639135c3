import pytest

from qaoa_dla.classify.multiangle import DlaDimension, classify_multiangle, dimension_lower_bound
from qaoa_dla.classify.orbits import orbit_fixed_dimension, orbit_ratio_report
from qaoa_dla.classify.weighted import signed_sums, weighted_freeness_check
from qaoa_dla.errors import PreconditionError, UnsupportedSizeError
from qaoa_dla.graphs.base import Graph, VertexPartition
from qaoa_dla.graphs.enumerate import automorphism_group, enumerate_connected
from qaoa_dla.graphs.families import generate_family
from qaoa_dla.graphs.sampling import make_rng, sample_er
from qaoa_dla.pauli.closure import lie_closure, multiangle_generators, qaoa_generators


def triangle(weights: list[float]) -> Graph:
    return Graph(3, [(0, 1), (0, 2), (1, 2)], weights=weights)


@pytest.mark.parametrize(
    ("spec", "label", "dimension"),
    [
        ("Path(4)", "So2n", 28),
        ("Cycle(4)", "So2nPlusSo2n", 56),
        ("Complete(4)", "SuPlusSu", 126),
        ("Star(3)", "SpPlusSp", 72),
        ("Spider(1,2,3)", "Su", 4095),
    ],
)
def test_classify_multiangle(spec: str, label: str, dimension: int) -> None:
    cls, dim = classify_multiangle(generate_family(spec))
    assert cls.label == label
    assert cls.component_count == 1
    assert dim.exact == dimension


def test_classify_bipartite_with_even_sides() -> None:
    tree = Graph(6, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)])
    cls, dim = classify_multiangle(tree)
    assert cls.label == "SoPlusSo"
    assert dim.exact == 2**10 - 2**5


def test_classify_components_add_up() -> None:
    g = Graph(7, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 6), (3, 6)])
    cls, dim = classify_multiangle(g)
    assert cls.label == "DirectSumOfComponents"
    assert cls.component_count == 2
    assert dim.exact == (2 * 9 - 3) + (4 * 16 - 8)


def test_classify_rejects_weighted_and_handles_empty() -> None:
    with pytest.raises(PreconditionError):
        classify_multiangle(triangle([1.0, 2.0, 3.0]))
    cls, dim = classify_multiangle(Graph(0))
    assert dim == DlaDimension(0)
    assert cls.component_count == 0


def test_dimension_helpers() -> None:
    dim = DlaDimension(2**300 - 1)
    assert dim.at_least_power(299)
    assert not dim.at_least_power(300)
    assert dim.log2 == pytest.approx(300.0)
    assert DlaDimension(0).log2 == float("-inf")


def test_classification_matches_closure_for_small_graphs() -> None:
    for n in range(2, 5):
        for g in enumerate_connected(n):
            expected = classify_multiangle(g)[1].exact
            assert lie_closure(multiangle_generators(g)).dimension == expected


@pytest.mark.slow
def test_classification_matches_closure_up_to_six() -> None:
    for n in range(1, 7):
        for g in enumerate_connected(n):
            expected = classify_multiangle(g)[1].exact
            assert lie_closure(multiangle_generators(g)).dimension == expected


def test_lower_bound_cases() -> None:
    spider = generate_family("Spider(1,2,3)")
    assert dimension_lower_bound(spider, VertexPartition.of([u] for u in range(7))).exact == 4095
    assert dimension_lower_bound(spider, VertexPartition.trivial(7)).exact == 0
    k6 = generate_family("Complete(6)")
    assert dimension_lower_bound(k6, VertexPartition.of([[0], [1], [2], [3], [4, 5]])).exact == 2**7 - 2


def test_signed_sums() -> None:
    assert signed_sums([1, 2]) == {3, 1, -1, -3}
    assert signed_sums([]) == {0}


def test_weighted_freeness_check() -> None:
    assert weighted_freeness_check(triangle([1.0, 2.0, 4.0])) is False
    assert weighted_freeness_check(triangle([1.0, 2.0, 3.5])) is True
    assert weighted_freeness_check(triangle([0.0, 2.0, 3.5])) is False


def test_weighted_check_degree_guard() -> None:
    g = generate_family("Star(21)").with_weights([float(i + 1) for i in range(21)])
    with pytest.raises(UnsupportedSizeError):
        weighted_freeness_check(g)


def test_random_weights_pass_the_check() -> None:
    rng = make_rng(8)
    passed = 0
    total = 0
    seed = 0
    while total < 50:
        g = sample_er(6, 0.6, seed)
        seed += 1
        if not g.is_connected():
            continue
        total += 1
        weights = [float(w) for w in rng.uniform(0.0, 1.0, size=g.m)]
        passed += weighted_freeness_check(g.with_weights(weights))
    assert passed >= 49


def weighted_cases(n: int, count: int, seed: int) -> list[Graph]:
    rng = make_rng(seed)
    graphs: list[Graph] = []
    draw = 0
    while len(graphs) < count:
        g = sample_er(n, 0.6, draw)
        draw += 1
        if g.is_connected():
            graphs.append(g.with_weights([float(w) for w in rng.uniform(0.0, 1.0, size=g.m)]))
    return graphs


def test_passing_weights_reach_the_multiangle_algebra() -> None:
    checked = 0
    for g in weighted_cases(5, 10, 3):
        if weighted_freeness_check(g):
            checked += 1
            expected = classify_multiangle(g.unweighted())[1].exact
            assert lie_closure(qaoa_generators(g)).dimension == expected
    assert checked >= 8


@pytest.mark.slow
def test_passing_weights_reach_the_multiangle_algebra_on_six_vertices() -> None:
    passed = 0
    for g in weighted_cases(6, 50, 8):
        if weighted_freeness_check(g):
            passed += 1
            expected = classify_multiangle(g.unweighted())[1].exact
            assert lie_closure(qaoa_generators(g)).dimension == expected
    assert passed >= 49


def test_orbit_count_for_cycle() -> None:
    study = orbit_ratio_report([generate_family("Cycle(4)")])
    (row,) = study.rows
    assert row.dimension == 11
    assert row.orbits >= row.dimension
    assert study.lower_inequality_holds()
    assert 0 < study.max_ratio


def test_orbit_guard() -> None:
    with pytest.raises(UnsupportedSizeError):
        orbit_fixed_dimension(generate_family("Path(8)"))


@pytest.mark.slow
def test_trivial_automorphism_orbits_equal_dimension() -> None:
    asymmetric = [g for g in enumerate_connected(6) if len(automorphism_group(g)) == 1]
    assert len(asymmetric) == 8
    for g in asymmetric:
        assert orbit_fixed_dimension(g) == classify_multiangle(g)[1].exact


@pytest.mark.slow
def test_orbit_lower_inequality_up_to_six() -> None:
    graphs = [g for n in range(3, 7) for g in enumerate_connected(n)]
    assert orbit_ratio_report(graphs).lower_inequality_holds()
