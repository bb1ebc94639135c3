from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Union

import networkx as nx

from qaoa_dla.errors import ParameterError

Edge = tuple[int, int]
Weight = Union[float, Fraction]

CERTIFIED_FREE = "certified-free"
FREE = "free"


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1, optionally edge-weighted.

    Edges are stored sorted; `weights`, when present, is aligned with `edges`.
    Tags are annotations (e.g. certified-free) and take no part in equality.
    """

    n: int
    edges: tuple[Edge, ...] = ()
    weights: tuple[Weight, ...] | None = None
    tags: frozenset[str] = field(default=frozenset(), compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ParameterError(f"vertex count must be non-negative, got {self.n}")
        raw_edges = list(self.edges)
        raw_weights = _align_weights(raw_edges, self.weights)
        pairs: dict[Edge, Weight] = {}
        for (u, v), w in zip(raw_edges, raw_weights):
            u, v = int(u), int(v)
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}", context={"edge": (u, v)})
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ParameterError(f"edge ({u}, {v}) out of range for n={self.n}", context={"edge": (u, v)})
            key = canonical_edge(u, v)
            if key in pairs:
                raise ParameterError(f"duplicate edge {key}", context={"edge": key})
            pairs[key] = w
        ordered = sorted(pairs)
        object.__setattr__(self, "edges", tuple(ordered))
        if self.weights is None:
            object.__setattr__(self, "weights", None)
        else:
            object.__setattr__(self, "weights", tuple(pairs[e] for e in ordered))
        object.__setattr__(self, "tags", frozenset(self.tags))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def weighted(self) -> bool:
        return self.weights is not None

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(s) for s in adj)

    @cached_property
    def weight_map(self) -> dict[Edge, Weight]:
        if self.weights is None:
            return {e: 1 for e in self.edges}
        return dict(zip(self.edges, self.weights))

    def neighbors(self, u: int) -> frozenset[int]:
        return self.adjacency[u]

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adjacency]

    def weight(self, u: int, v: int) -> Weight:
        return self.weight_map[canonical_edge(u, v)]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def unweighted(self) -> "Graph":
        return Graph(self.n, self.edges, tags=self.tags)

    def without_uniform_weights(self) -> "Graph":
        # a common nonzero weight only rescales H_p and leaves the generated algebra unchanged
        if self.weights and len(set(self.weights)) == 1 and self.weights[0] != 0:
            return self.unweighted()
        return self

    def with_weights(self, weights: Mapping[Edge, Weight] | Sequence[Weight]) -> "Graph":
        return Graph(self.n, self.edges, weights=_align_weights(list(self.edges), weights), tags=self.tags)

    def with_tags(self, *tags: str) -> "Graph":
        return Graph(self.n, self.edges, self.weights, tags=self.tags | set(tags))

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled 0..k-1; also returns new-index -> old-vertex."""
        order = sorted(set(vertices))
        index = {v: i for i, v in enumerate(order)}
        edges: list[Edge] = []
        weights: list[Weight] = []
        for e, w in self.weight_map.items():
            u, v = e
            if u in index and v in index:
                edges.append((index[u], index[v]))
                weights.append(w)
        return Graph(len(order), edges, weights if self.weighted else None), order

    def components(self) -> list[list[int]]:
        comps = [sorted(c) for c in nx.connected_components(self.to_networkx())]
        return sorted(comps)

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def to_networkx(self) -> nx.Graph:
        nxg = nx.Graph()
        nxg.add_nodes_from(range(self.n))
        for (u, v), w in self.weight_map.items():
            nxg.add_edge(u, v, weight=w)
        return nxg


def _align_weights(
    edges: list[Edge],
    weights: Mapping[Edge, Weight] | Sequence[Weight] | None,
) -> list[Weight]:
    if weights is None:
        return [1] * len(edges)
    if isinstance(weights, Mapping):
        aligned: list[Weight] = []
        for u, v in edges:
            key = canonical_edge(u, v)
            if key in weights:
                aligned.append(weights[key])
            elif (v, u) in weights:
                aligned.append(weights[(v, u)])
            else:
                raise ParameterError(f"missing weight for edge {key}", context={"edge": key})
        if len(weights) != len(edges):
            raise ParameterError("weights must have exactly one entry per edge")
        return aligned
    aligned = list(weights)
    if len(aligned) != len(edges):
        raise ParameterError(f"expected {len(edges)} weights, got {len(aligned)}")
    return aligned


@dataclass(frozen=True)
class VertexPartition:
    universe: frozenset[int]
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        blocks = [tuple(sorted(set(b))) for b in self.blocks]
        seen: set[int] = set()
        for block in blocks:
            if not block:
                raise ParameterError("partition blocks must be non-empty")
            overlap = seen.intersection(block)
            if overlap:
                raise ParameterError(f"partition blocks overlap on {sorted(overlap)}")
            seen.update(block)
        universe = frozenset(self.universe)
        if seen != universe:
            raise ParameterError("partition blocks must cover the universe exactly")
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "blocks", tuple(sorted(blocks)))

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]]) -> "VertexPartition":
        materialized = [tuple(b) for b in blocks]
        return cls(frozenset(v for b in materialized for v in b), tuple(materialized))

    @classmethod
    def trivial(cls, n: int) -> "VertexPartition":
        return cls.of([range(n)] if n else [])

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def is_discrete(self) -> bool:
        return len(self.blocks) == len(self.universe)

    def singletons(self) -> list[int]:
        return [b[0] for b in self.blocks if len(b) == 1]

    def block_sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]

    def as_sets(self) -> set[frozenset[int]]:
        return {frozenset(b) for b in self.blocks}

    def refines(self, other: "VertexPartition") -> bool:
        owner = {v: i for i, b in enumerate(other.blocks) for v in b}
        return all(len({owner[v] for v in b}) == 1 for b in self.blocks)

    def shifted(self, offset: int) -> "VertexPartition":
        return VertexPartition.of([[v + offset for v in b] for b in self.blocks])


@dataclass(frozen=True)
class CutAssignment:
    side: tuple[int, ...]
    value: Weight


def cut_value(g: Graph, side: Sequence[int]) -> Weight:
    total: Weight = 0
    for (u, v), w in g.weight_map.items():
        if side[u] != side[v]:
            total += w
    return total


@dataclass(frozen=True)
class SubdivisionMap:
    """Result of the MaxCut-preserving reduction.

    `path_of` maps every edge of the intermediate odd graph (original edges and
    pendant edges, first endpoint first) to its inserted vertices in path order.
    """

    original: Graph
    subdivided: Graph
    path_of: dict[Edge, tuple[int, ...]]
    added_pendants: tuple[tuple[int, int], ...] = ()

    @property
    def vertex_delta(self) -> int:
        return self.subdivided.n - self.original.n
