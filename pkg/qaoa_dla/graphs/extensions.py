"""Freeness-preserving graph extensions.

A set of edges between disjoint S and T is a partition of S by T when every
vertex of S has exactly one edge and every vertex of T at least one; it is an
odd (even) partition when every vertex of T has odd (even) degree in it.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Literal

import networkx as nx

from qaoa_dla.errors import HypothesisViolation, ParameterError, PreconditionError
from qaoa_dla.graphs.base import CERTIFIED_FREE, FREE, Edge, Graph

ExtensionKind = Literal[
    "partition_case1",
    "partition_case2",
    "even_odd_case1",
    "even_odd_case2",
    "even_odd_case3",
    "even_odd_case4",
    "forest",
    "combine",
]


@dataclass(frozen=True)
class ExtensionSpec:
    """`edges` pairs a vertex of the free graph with a local vertex of `other`."""

    kind: ExtensionKind
    other: Graph
    edges: tuple[Edge, ...]


def is_tagged_free(g: Graph) -> bool:
    return bool(g.tags & {FREE, CERTIFIED_FREE})


def _parity_split(g: Graph, vertices: list[int]) -> tuple[list[int], list[int]]:
    inside = set(vertices)
    even, odd = [], []
    for u in vertices:
        d = len(g.adjacency[u] & inside)
        (odd if d % 2 else even).append(u)
    return even, odd


def _check_partition(
    condition: str,
    pairs: list[Edge],
    sources: set[int],
    targets: set[int],
    parity: int,
) -> None:
    """pairs are (source, target); parity 1 asks for an odd partition, 0 for even."""
    kind = "odd" if parity else "even"
    out_degree = Counter(s for s, _ in pairs)
    for s, t in pairs:
        if s not in sources:
            raise HypothesisViolation(condition, f"edge endpoint {s} is outside the partitioned set")
        if t not in targets:
            raise HypothesisViolation(condition, f"edge endpoint {t} is outside the target set")
    missing = sorted(sources - set(out_degree))
    if missing:
        raise HypothesisViolation(condition, f"vertices {missing} have no partition edge")
    doubled = sorted(s for s, c in out_degree.items() if c > 1)
    if doubled:
        raise HypothesisViolation(condition, f"vertices {doubled} have more than one partition edge")
    in_degree = Counter(t for _, t in pairs)
    uncovered = sorted(targets - set(in_degree))
    if uncovered:
        raise HypothesisViolation(condition, f"partition is not surjective; {uncovered} not covered")
    wrong = sorted(t for t, c in in_degree.items() if c % 2 != parity)
    if wrong:
        raise HypothesisViolation(condition, f"not an {kind} partition; vertices {wrong} have {'even' if parity else 'odd'} degree")


def _require_all(condition: str, g: Graph, vertices: list[int], parity: int) -> None:
    inside = set(vertices)
    bad = [u for u in vertices if len(g.adjacency[u] & inside) % 2 != parity]
    if bad:
        kind = "odd" if parity else "even"
        raise HypothesisViolation(condition, f"vertices {bad} do not have {kind} degree")


def extend_free(g: Graph, attachment: ExtensionSpec) -> Graph:
    if not is_tagged_free(g):
        raise PreconditionError("extend_free requires a graph tagged free", context={"tags": sorted(g.tags)})
    other = attachment.other
    if g.weighted or other.weighted:
        raise PreconditionError("extensions are defined for unweighted graphs")
    for u, w in attachment.edges:
        if not (0 <= u < g.n and 0 <= w < other.n):
            raise ParameterError(f"connecting edge ({u}, {w}) out of range")

    all_g = list(range(g.n))
    all_o = list(range(other.n))
    v_e, v_o = _parity_split(g, all_g)
    o_e, o_o = _parity_split(other, all_o)
    pairs = list(attachment.edges)
    kind = attachment.kind

    if kind in ("partition_case1", "partition_case2"):
        covered = v_e if kind == "partition_case1" else v_o
        to_odd = [(u, w) for u, w in pairs if w in set(o_o)]
        to_even = [(u, w) for u, w in pairs if w in set(o_e)]
        sources_odd = {u for u, _ in to_odd}
        sources_even = {u for u, _ in to_even}
        if sources_odd & sources_even or (sources_odd | sources_even) != set(covered):
            label = "V_e" if kind == "partition_case1" else "V_o"
            raise HypothesisViolation(kind, f"connecting edges must partition all of {label} exactly once")
        odd_parity = 1 if kind == "partition_case1" else 0
        _check_partition(f"{kind}.to_odd", to_odd, sources_odd, set(o_o), odd_parity)
        _check_partition(f"{kind}.to_even", to_even, sources_even, set(o_e), 1 - odd_parity)
    elif kind.startswith("even_odd_case"):
        v_ee, v_eo = _parity_split(g, v_e)
        v_oe, v_oo = _parity_split(g, v_o)
        case = int(kind[-1])
        table = {
            1: (v_ee, 0, 1, v_eo, 1),
            2: (v_eo, 1, 0, v_ee, 0),
            3: (v_oe, 0, 1, v_oo, 0),
            4: (v_oo, 1, 0, v_oe, 1),
        }
        inner, inner_parity, other_parity, sources, parity = table[case]
        _require_all(f"{kind}.base", g, inner, inner_parity)
        _require_all(f"{kind}.other", other, all_o, other_parity)
        _check_partition(f"{kind}.edges", pairs, set(sources), set(all_o), parity)
    elif kind == "forest":
        if not nx.is_forest(other.to_networkx()):
            raise HypothesisViolation("forest.acyclic", "attached graph contains a cycle")
        flipped = [(w, u) for u, w in pairs]
        _check_partition("forest.edges", flipped, set(o_o), set(v_e), 1)
    elif kind == "combine":
        if not is_tagged_free(other):
            raise PreconditionError("combine requires the second graph to be tagged free")
        for u, w in pairs:
            if u not in set(v_o) or w not in set(o_e):
                raise HypothesisViolation("combine.edges", f"edge ({u}, {w}) must join V_o to W_e")
        deg_g = Counter(u for u, _ in pairs)
        deg_o = Counter(w for _, w in pairs)
        bad = [u for u in v_o if deg_g[u] % 2 == 0] + [g.n + w for w in o_e if deg_o[w] % 2 == 0]
        if bad:
            raise HypothesisViolation("combine.odd_bipartite", f"vertices {bad} have even degree in the bipartite join")
    else:
        raise ParameterError(f"unknown extension kind {kind!r}")

    offset = g.n
    edges = list(g.edges)
    edges += [(u + offset, v + offset) for u, v in other.edges]
    edges += [(u, w + offset) for u, w in pairs]
    return Graph(g.n + other.n, edges, tags={CERTIFIED_FREE})
