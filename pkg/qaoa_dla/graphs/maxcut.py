"""Exact MaxCut oracle.

Colourings of the branch vertices (degree other than 2, plus one vertex on each
component that is a bare cycle) are enumerated with numpy; every chain of
degree-2 vertices between two branch vertices is solved by a two-state dynamic
programme, so subdivided graphs stay cheap. The last branch vertex is pinned to
side 0, halving the enumeration.
"""

from dataclasses import dataclass

import numpy as np

from qaoa_dla.errors import UnsupportedSizeError
from qaoa_dla.graphs.base import CutAssignment, Graph, Weight, cut_value

MAX_BRANCH_VERTICES = 28
_CHUNK = 1 << 20


@dataclass
class _Chain:
    start: int
    end: int
    inner: list[int]
    weights: list[Weight]

    def table(self) -> list[list[Weight]]:
        return [[self._solve(ca, cb)[0] for cb in (0, 1)] for ca in (0, 1)]

    def _solve(self, ca: int, cb: int) -> tuple[Weight, list[int]]:
        best = [self.weights[0] * (ca != c) for c in (0, 1)]
        choices: list[list[int]] = []
        for w in self.weights[1:-1]:
            step, nxt = [], []
            for c in (0, 1):
                options = [best[p] + w * (p != c) for p in (0, 1)]
                p = 0 if options[0] >= options[1] else 1
                step.append(p)
                nxt.append(options[p])
            choices.append(step)
            best = nxt
        last = self.weights[-1]
        finals = [best[p] + last * (p != cb) for p in (0, 1)]
        c = 0 if finals[0] >= finals[1] else 1
        colors = [c]
        for step in reversed(choices):
            c = step[c]
            colors.append(c)
        colors.reverse()
        return finals[colors[-1]], colors

    def colors(self, ca: int, cb: int) -> list[int]:
        return self._solve(ca, cb)[1]


def _decompose(g: Graph) -> tuple[list[int], list[tuple[int, int, Weight]], list[_Chain]]:
    degrees = g.degrees()
    branch = {u for u in range(g.n) if degrees[u] not in (0, 2)}
    for component in g.components():
        if all(degrees[u] == 2 for u in component):
            branch.add(component[0])
    direct: list[tuple[int, int, Weight]] = []
    chains: list[_Chain] = []
    seen_edges: set[tuple[int, int]] = set()
    for a in sorted(branch):
        for first in sorted(g.adjacency[a]):
            edge = (min(a, first), max(a, first))
            if edge in seen_edges:
                continue
            seen_edges.add(edge)
            if first in branch:
                direct.append((a, first, g.weight(a, first)))
                continue
            inner, weights = [first], [g.weight(a, first)]
            prev, cur = a, first
            while cur not in branch:
                nxt = next(v for v in g.adjacency[cur] if v != prev)
                seen_edges.add((min(cur, nxt), max(cur, nxt)))
                weights.append(g.weight(cur, nxt))
                prev, cur = cur, nxt
                if cur not in branch:
                    inner.append(cur)
            chains.append(_Chain(a, cur, inner, weights))
    return sorted(branch), direct, chains


def brute_maxcut(g: Graph) -> CutAssignment:
    if g.n == 0:
        return CutAssignment((), 0)
    branch, direct, chains = _decompose(g)
    if len(branch) > MAX_BRANCH_VERTICES:
        raise UnsupportedSizeError(
            f"MaxCut enumeration is limited to {MAX_BRANCH_VERTICES} branch vertices",
            context={"branch_vertices": len(branch), "n": g.n},
        )
    position = {u: i for i, u in enumerate(branch)}
    free_bits = max(len(branch) - 1, 0)
    integral = all(isinstance(w, int) for w in g.weight_map.values())
    dtype = np.int64 if integral else np.float64
    tables = [np.array(chain.table(), dtype=dtype) for chain in chains]

    best_value = None
    best_index = 0
    total_states = 1 << free_bits
    for start in range(0, total_states, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total_states), dtype=np.int64)

        def bit(u: int) -> np.ndarray:
            pos = position[u]
            if pos >= free_bits:
                return np.zeros_like(idx)
            return (idx >> pos) & 1

        values = np.zeros(idx.shape, dtype=dtype)
        for a, b, w in direct:
            values += (bit(a) ^ bit(b)).astype(dtype) * dtype(w)
        for chain, table in zip(chains, tables):
            values += table[bit(chain.start), bit(chain.end)]
        local = int(np.argmax(values))
        if best_value is None or values[local] > best_value:
            best_value, best_index = values[local], int(idx[local])

    side = [0] * g.n
    for u, pos in position.items():
        side[u] = (best_index >> pos) & 1 if pos < free_bits else 0
    for chain in chains:
        for v, c in zip(chain.inner, chain.colors(side[chain.start], side[chain.end])):
            side[v] = c
    return CutAssignment(tuple(side), cut_value(g, side))
