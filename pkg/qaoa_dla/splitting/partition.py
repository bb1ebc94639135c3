import logging
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from qaoa_dla.errors import ParameterError
from qaoa_dla.graphs.base import Edge, Graph, VertexPartition
from qaoa_dla.pauli.terms import PauliSum, x_on, zz_on

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EdgePartition:
    blocks: tuple[tuple[Edge, ...], ...]

    def __post_init__(self) -> None:
        blocks = [tuple(sorted(b)) for b in self.blocks if b]
        seen: set[Edge] = set()
        for block in blocks:
            overlap = seen.intersection(block)
            if overlap:
                raise ParameterError(f"edge blocks overlap on {sorted(overlap)}")
            seen.update(block)
        object.__setattr__(self, "blocks", tuple(sorted(blocks)))

    def __len__(self) -> int:
        return len(self.blocks)

    def as_sets(self) -> set[frozenset[Edge]]:
        return {frozenset(b) for b in self.blocks}


def _check_universe(g: Graph, p: VertexPartition) -> None:
    if p.universe != frozenset(range(g.n)):
        raise ParameterError("partition does not cover the graph's vertex set", context={"n": g.n})


def _parity_parts(g: Graph, block: Iterable[int], target: Iterable[int]) -> tuple[list[int], list[int]]:
    """(odd, even) members of block by the parity of their neighbour count in target."""
    inside = set(target)
    odd, even = [], []
    for u in block:
        (odd if len(g.adjacency[u] & inside) % 2 else even).append(u)
    return odd, even


def split_vertices_internal(g: Graph) -> VertexPartition:
    blocks: list[list[int]] = []
    stack = [list(range(g.n))] if g.n else []
    while stack:
        block = stack.pop()
        odd, even = _parity_parts(g, block, block)
        if odd and even:
            stack.extend([even, odd])
        else:
            blocks.append(block)
    return VertexPartition.of(blocks)


def _ordered(blocks: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    return sorted(blocks, key=lambda b: (len(b), b[0]))


def split_vertices_external(g: Graph, p: VertexPartition) -> VertexPartition:
    """Split blocks by neighbour-count parity toward other blocks until stable."""
    _check_universe(g, p)
    blocks = _ordered(p.blocks)
    changed = True
    while changed:
        changed = False
        for i, s in enumerate(blocks):
            if len(s) < 2:
                continue
            for j, t in enumerate(blocks):
                if i == j:
                    continue
                odd, even = _parity_parts(g, s, t)
                if odd and even:
                    blocks = _ordered(blocks[:i] + blocks[i + 1 :] + [tuple(odd), tuple(even)])
                    changed = True
                    break
            if changed:
                break
    return VertexPartition.of(blocks)


def split_edges(g: Graph, p: VertexPartition) -> EdgePartition:
    """E(S, T) for each pair of distinct blocks plus the union of within-block edges."""
    _check_universe(g, p)
    owner = {u: i for i, block in enumerate(p.blocks) for u in block}
    cross: dict[tuple[int, int], list[Edge]] = {}
    within: list[Edge] = []
    for u, v in g.edges:
        a, b = owner[u], owner[v]
        if a == b:
            within.append((u, v))
        else:
            cross.setdefault((min(a, b), max(a, b)), []).append((u, v))
    return EdgePartition(tuple(tuple(b) for b in cross.values()) + (tuple(within),))


def _refine_once(g: Graph, colors: list[int]) -> list[int]:
    keys = []
    for u in range(g.n):
        odd: set[int] = set()
        for v in g.adjacency[u]:
            odd ^= {colors[v]}
        keys.append((colors[u], tuple(sorted(odd))))
    palette = {key: i for i, key in enumerate(sorted(set(keys)))}
    return [palette[key] for key in keys]


def bfs_splitting_trace(g: Graph) -> tuple[VertexPartition, int]:
    """Simultaneous parity refinement to the fixpoint; returns the partition and round count."""
    colors = [0] * g.n
    classes = 1 if g.n else 0
    rounds = 0
    while classes < g.n:
        refined = _refine_once(g, colors)
        rounds += 1
        count = max(refined) + 1
        if count == classes:
            break
        colors, classes = refined, count
    cells: dict[int, list[int]] = {}
    for u, c in enumerate(colors):
        cells.setdefault(c, []).append(u)
    logger.debug("bfs splitting reached fixpoint", extra={"stage": "split", "n": g.n, "rounds": rounds, "blocks": len(cells)})
    return VertexPartition.of(cells.values()), rounds


def bfs_splitting(g: Graph) -> VertexPartition:
    return bfs_splitting_trace(g)[0]


def is_splittable(g: Graph) -> tuple[bool, VertexPartition]:
    p = bfs_splitting(g)
    return p.is_discrete, p


def random_schedule_splitting(g: Graph, rng: np.random.Generator) -> VertexPartition:
    """Apply internal or external parity splits in a random order until none applies."""
    blocks = [tuple(range(g.n))] if g.n else []
    while True:
        moves: list[tuple[int, list[int], list[int]]] = []
        for i, s in enumerate(blocks):
            if len(s) < 2:
                continue
            for t in blocks:
                odd, even = _parity_parts(g, s, t)
                if odd and even:
                    moves.append((i, odd, even))
        if not moves:
            return VertexPartition.of(blocks)
        i, odd, even = moves[int(rng.integers(len(moves)))]
        blocks = blocks[:i] + blocks[i + 1 :] + [tuple(odd), tuple(even)]


def split_generators(g: Graph, p: VertexPartition, q: EdgePartition | None = None) -> list[PauliSum]:
    """X_S for every vertex block and ZZ_E' for every edge block, carrying edge weights."""
    q = split_edges(g, p) if q is None else q
    weights = g.weight_map if g.weighted else None
    return [x_on(g.n, block) for block in p.blocks] + [zz_on(g.n, block, weights) for block in q.blocks]
