"""Closed-form classification of the multi-angle algebra, one connected component at a time.

Dimensions are exact Python integers; a 50,000-vertex instance yields a number
with tens of thousands of digits, so reports carry log2 alongside.
"""

import math
from dataclasses import dataclass
from typing import Literal

import networkx as nx

from qaoa_dla.errors import PreconditionError
from qaoa_dla.graphs.base import Graph, VertexPartition

DlaLabel = Literal[
    "So2n",
    "So2nPlusSo2n",
    "SuPlusSu",
    "SpPlusSp",
    "SoPlusSo",
    "Su",
    "DirectSumOfComponents",
    "ComputedRaw",
    "Unknown",
]


@dataclass(frozen=True, order=True)
class DlaDimension:
    exact: int

    @property
    def log2(self) -> float:
        return math.log2(self.exact) if self.exact > 0 else float("-inf")

    def __add__(self, other: "DlaDimension") -> "DlaDimension":
        return DlaDimension(self.exact + other.exact)

    def at_least_power(self, bits: int) -> bool:
        return self.exact >= 1 << bits


@dataclass(frozen=True)
class DlaClass:
    label: DlaLabel
    component_count: int | None = None


def is_path(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and max(g.degrees(), default=0) <= 2 and g.is_connected()


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and g.m == g.n and all(d == 2 for d in g.degrees()) and g.is_connected()


def classify_connected(g: Graph) -> tuple[DlaLabel, int]:
    n = g.n
    if is_path(g):
        return "So2n", 2 * n * n - n
    if is_cycle(g):
        return "So2nPlusSo2n", 4 * n * n - 2 * n
    nxg = g.to_networkx()
    if not nx.is_bipartite(nxg):
        return "SuPlusSu", 2 ** (2 * n - 1) - 2
    if n % 2:
        return "Su", 2 ** (2 * n - 2) - 1
    left, _ = nx.bipartite.sets(nxg)
    if len(left) % 2:
        return "SpPlusSp", 2 ** (2 * n - 2) + 2 ** (n - 1)
    return "SoPlusSo", 2 ** (2 * n - 2) - 2 ** (n - 1)


def classify_multiangle(g: Graph) -> tuple[DlaClass, DlaDimension]:
    if g.weighted:
        raise PreconditionError("multi-angle classification takes an unweighted graph")
    components = g.components()
    if not components:
        return DlaClass("DirectSumOfComponents", 0), DlaDimension(0)
    total = 0
    label: DlaLabel = "Unknown"
    for component in components:
        sub, _ = g.induced(component)
        label, dim = classify_connected(sub)
        total += dim
    if len(components) > 1:
        return DlaClass("DirectSumOfComponents", len(components)), DlaDimension(total)
    return DlaClass(label, 1), DlaDimension(total)


def dimension_lower_bound(g: Graph, p: VertexPartition) -> DlaDimension:
    """Multi-angle dimension of the subgraph induced by the singleton blocks."""
    isolated = p.singletons()
    if not isolated:
        return DlaDimension(0)
    sub, _ = g.induced(isolated)
    return classify_multiangle(sub.unweighted())[1]
