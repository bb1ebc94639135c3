import time

import numpy as np
import pytest

from qaoa_dla.classify.multiangle import dimension_lower_bound
from qaoa_dla.graphs.base import Graph, VertexPartition
from qaoa_dla.graphs.enumerate import enumerate_connected
from qaoa_dla.graphs.families import generate_family
from qaoa_dla.graphs.sampling import sample_er, sample_gnm
from qaoa_dla.splitting.partition import (
    bfs_splitting,
    bfs_splitting_trace,
    is_splittable,
    random_schedule_splitting,
    split_edges,
    split_generators,
    split_vertices_external,
    split_vertices_internal,
)

SEVEN_VERTEX_PARTITION = {frozenset({0}), frozenset({1, 5}), frozenset({2, 4}), frozenset({3, 6})}


def seven_vertex_graph() -> Graph:
    return Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (1, 6), (1, 3)])


def test_internal_split_path() -> None:
    assert split_vertices_internal(generate_family("Path(3)")).as_sets() == {frozenset({0, 2}), frozenset({1})}


def test_internal_split_keeps_regular_graph_whole() -> None:
    assert split_vertices_internal(generate_family("Cycle(4)")).as_sets() == {frozenset(range(4))}


def test_external_split_path_is_stable() -> None:
    g = generate_family("Path(3)")
    p = VertexPartition.of([[0, 2], [1]])
    assert split_vertices_external(g, p) == p


def test_external_split_of_discrete_partition_is_identity() -> None:
    g = generate_family("Complete(4)")
    p = VertexPartition.of([[u] for u in range(4)])
    assert split_vertices_external(g, p) == p


def test_seven_vertex_graph_pipeline() -> None:
    g = seven_vertex_graph()
    internal = split_vertices_internal(g)
    assert split_vertices_external(g, internal).as_sets() == SEVEN_VERTEX_PARTITION
    assert bfs_splitting(g).as_sets() == SEVEN_VERTEX_PARTITION
    splittable, partition = is_splittable(g)
    assert not splittable
    assert len(partition) == 4


def test_split_edges_blocks() -> None:
    path = generate_family("Path(3)")
    assert split_edges(path, VertexPartition.of([[0, 2], [1]])).as_sets() == {frozenset({(0, 1), (1, 2)})}
    tri = generate_family("Complete(3)")
    assert split_edges(tri, VertexPartition.trivial(3)).as_sets() == {frozenset(tri.edges)}
    singles = split_edges(tri, VertexPartition.of([[0], [1], [2]]))
    assert len(singles) == 3


def test_bfs_splitting_cycles_stay_whole() -> None:
    for n in range(3, 9):
        partition, rounds = bfs_splitting_trace(generate_family(f"Cycle({n})"))
        assert len(partition) == 1
        assert rounds == 1


def test_spider_is_splittable() -> None:
    splittable, partition = is_splittable(generate_family("Spider(1,2,3)"))
    assert splittable
    assert partition.is_discrete


def test_no_small_graph_is_splittable() -> None:
    for n in range(1, 6):
        for g in enumerate_connected(n):
            if g.n > 1:
                assert not is_splittable(g)[0]


def test_dense_random_graphs_split() -> None:
    hits = sum(1 for seed in range(200) if is_splittable(sample_er(30, 0.5, seed))[0])
    assert hits >= 190


def test_schedules_reach_the_same_partition() -> None:
    rng = np.random.default_rng(11)
    for seed in range(10):
        g = sample_er(12, 0.5, seed)
        expected = bfs_splitting(g)
        for _ in range(10):
            assert random_schedule_splitting(g, rng) == expected


@pytest.mark.slow
def test_schedules_reach_the_same_partition_at_scale() -> None:
    rng = np.random.default_rng(12)
    for seed in range(50):
        g = sample_er(12, 0.5, seed)
        expected = bfs_splitting(g)
        for _ in range(100):
            assert random_schedule_splitting(g, rng) == expected


def test_split_generators_carry_weights() -> None:
    g = Graph(3, [(0, 1), (1, 2)], weights=[2.0, 3.0])
    generators = split_generators(g, VertexPartition.trivial(3))
    assert len(generators) == 2
    assert {c for _, c in generators[1]} == {2.0, 3.0}


@pytest.mark.slow
def test_bfs_splitting_throughput() -> None:
    g = sample_gnm(50_000, 150_000, 5)
    started = time.perf_counter()
    partition = bfs_splitting(g)
    dimension_lower_bound(g, partition)
    assert time.perf_counter() - started < 10


def test_bfs_rounds_stay_below_vertex_count() -> None:
    for seed in range(60):
        n = 2 + seed % 29
        g = sample_er(n, (seed % 9 + 1) / 10, seed)
        _, rounds = bfs_splitting_trace(g)
        assert rounds <= n - 1
