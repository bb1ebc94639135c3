import pytest

from qaoa_dla.classify import pipeline
from qaoa_dla.classify.pipeline import AnalysisOptions, analyze
from qaoa_dla.errors import CertificateError
from qaoa_dla.graphs.base import FREE, Graph
from qaoa_dla.graphs.enumerate import automorphism_group, enumerate_connected
from qaoa_dla.graphs.extensions import ExtensionSpec, extend_free
from qaoa_dla.graphs.families import generate_family
from qaoa_dla.graphs.sampling import sample_er
from qaoa_dla.graphs.subdivision import reduce_to_subdivision
from qaoa_dla.pauli.closure import lie_closure, qaoa_generators
from qaoa_dla.schemas import DlaReportOut


def seven_vertex_graph() -> Graph:
    return Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (1, 6), (1, 3)])


def test_spider_is_splittable() -> None:
    report = analyze(generate_family("Spider(1,2,3)"), instance_id="spider")
    assert report.freeness == "Splittable"
    assert report.is_free
    assert report.ma_dimension.exact == 4095
    assert report.dimension is not None and report.dimension.exact == 4095
    assert report.lower_bound.exact == 4095
    assert report.method_trail == ["bfs_splitting"]
    assert "classify" in report.timings_ms


def test_cycle_is_brute_forced_not_free() -> None:
    report = analyze(generate_family("Cycle(5)"))
    assert report.freeness == "BruteForcedNotFree"
    assert report.dimension is not None and report.dimension.exact == 14
    assert not report.is_free
    assert report.method_trail[-1] == "brute_force"
    assert "certify_subdivision:base_size" in report.method_trail


def test_brute_force_can_be_disabled() -> None:
    report = analyze(generate_family("Cycle(5)"), AnalysisOptions(brute_force=False))
    assert report.freeness == "Undetermined"
    assert report.dimension is None
    assert report.lower_bound.exact == 0


def test_closure_cap_leaves_large_graphs_undetermined() -> None:
    report = analyze(generate_family("Cycle(12)"))
    assert report.freeness == "Undetermined"
    assert "brute_force" not in report.method_trail


def test_uniform_weights_use_unweighted_pipeline() -> None:
    g = generate_family("Spider(1,2,3)").with_weights([3.0] * 6)
    report = analyze(g)
    assert report.method_trail[0] == "uniform_weights"
    assert report.freeness == "Splittable"
    assert report.weighted is False


def test_weighted_graph_certified() -> None:
    g = Graph(3, [(0, 1), (0, 2), (1, 2)], weights=[1.0, 2.0, 3.5])
    report = analyze(g)
    assert report.freeness == "CertifiedWeighted"
    assert report.weighted
    assert report.dimension is not None and report.dimension.exact == 30


def test_weighted_graph_failing_check_falls_back() -> None:
    g = Graph(3, [(0, 1), (0, 2), (1, 2)], weights=[1.0, 2.0, 4.0])
    report = analyze(g)
    assert report.method_trail == ["weighted_check", "brute_force"]
    assert report.freeness == "BruteForcedFree"
    assert report.dimension is not None and report.dimension.exact == 30


def test_extension_tag_is_honoured() -> None:
    ladder = generate_family("ExtendedLadder(3,1)").with_tags(FREE)
    other = Graph(4, [(0, 1), (1, 2), (0, 2)])
    g = extend_free(ladder, ExtensionSpec("partition_case2", other, ((0, 0), (1, 1), (2, 2), (5, 3))))
    report = analyze(g, AnalysisOptions(brute_force=False))
    assert report.freeness in ("Splittable", "CertifiedExtension")
    assert report.is_free


def test_reduced_graph_is_free() -> None:
    g = reduce_to_subdivision(generate_family("Complete(3)")).subdivided
    report = analyze(g, AnalysisOptions(brute_force=False))
    assert report.freeness in ("Splittable", "CertifiedSubdivision")
    assert report.ma_class.label == "SuPlusSu"


def test_report_schema() -> None:
    report = analyze(generate_family("Spider(1,2,3)"), instance_id="spider")
    out = DlaReportOut.from_report(report, prng_id="fixed")
    assert out.ma_dim_exact == "4095"
    assert out.partition_block_sizes == [1] * 7
    assert out.lower_bound_bits == 11
    assert out.prng_id == "fixed"
    assert DlaReportOut.from_report(report, include_timings=False).timings_ms == {}


def test_small_graphs_are_never_free() -> None:
    for n in range(2, 6):
        for g in enumerate_connected(n):
            assert not analyze(g).is_free


@pytest.mark.slow
def test_six_vertex_graphs_are_never_free() -> None:
    for g in enumerate_connected(6):
        assert not analyze(g).is_free


@pytest.mark.slow
def test_seven_vertex_graph_is_brute_forced_free() -> None:
    report = analyze(seven_vertex_graph())
    assert len(report.partition) == 4
    assert report.freeness == "BruteForcedFree"
    assert report.dimension is not None and report.dimension.exact == 8190


def test_certificate_construction_failure_falls_through(monkeypatch: pytest.MonkeyPatch) -> None:
    def refuse(_g: Graph) -> None:
        raise CertificateError("could not isolate the ends of a segment")

    monkeypatch.setattr(pipeline, "certify_asym_subdivision", refuse)
    report = analyze(generate_family("Cycle(5)"))
    assert "certify_subdivision:construction" in report.method_trail
    assert report.freeness == "BruteForcedNotFree"
    assert report.dimension is not None and report.dimension.exact == 14


def test_free_graphs_have_no_symmetry() -> None:
    found = 0
    for seed in range(40):
        g = sample_er(9, 0.5, seed)
        if analyze(g, AnalysisOptions(brute_force=False)).is_free:
            found += 1
            assert automorphism_group(g) == [tuple(range(9))]
    assert found > 0


@pytest.mark.slow
def test_splittable_spider_matches_its_closure() -> None:
    g = generate_family("Spider(1,2,3)")
    report = analyze(g, AnalysisOptions(brute_force=False))
    assert report.freeness == "Splittable"
    assert lie_closure(qaoa_generators(g)).dimension == report.ma_dimension.exact


@pytest.mark.slow
def test_free_seven_vertex_graphs_are_sound_and_asymmetric() -> None:
    free = [g for g in enumerate_connected(7) if analyze(g, AnalysisOptions(brute_force=False)).is_free]
    assert free
    for g in free:
        assert len(automorphism_group(g)) == 1
    for g in free[:10]:
        report = analyze(g, AnalysisOptions(brute_force=False))
        assert lie_closure(qaoa_generators(g)).dimension == report.ma_dimension.exact
