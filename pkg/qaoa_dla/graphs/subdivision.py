import logging

from qaoa_dla.errors import PreconditionError
from qaoa_dla.graphs.base import CutAssignment, Edge, Graph, SubdivisionMap, cut_value

logger = logging.getLogger(__name__)

# Single-edge base case: 3-armed spider on the edge (0, 1) with arms of 1, 2 and 4 vertices.
_SINGLE_EDGE_ARMS = (2, 4)


def reduce_to_subdivision(g: Graph) -> SubdivisionMap:
    """MaxCut-preserving reduction to an asymmetric subdivision of an odd graph.

    MaxCut(G') - MaxCut(G) == |V'| - |V|; `lift_cut` maps optimal cuts across.
    """
    if g.weighted:
        raise PreconditionError("reduction requires an unweighted graph")
    if g.n < 2 or not g.is_connected():
        raise PreconditionError(
            "reduction requires a connected graph with at least 2 vertices",
            context={"n": g.n, "components": len(g.components())},
        )
    if g.n == 2:
        return _single_edge(g)

    even = [u for u, d in enumerate(g.degrees()) if d % 2 == 0]
    pendants = tuple((u, g.n + i) for i, u in enumerate(even))
    plan: list[Edge] = list(pendants) + list(g.edges)
    next_label = g.n + len(pendants)
    edges: list[Edge] = []
    path_of: dict[Edge, tuple[int, ...]] = {}
    for i, (u, v) in enumerate(plan, start=1):
        inner = tuple(range(next_label, next_label + 2 * i))
        next_label += 2 * i
        chain = [u, *inner, v]
        edges.extend(zip(chain, chain[1:]))
        path_of[(u, v)] = inner
    subdivided = Graph(next_label, edges)
    logger.info(
        "reduced graph to subdivision",
        extra={"stage": "reduce", "n": g.n, "n_subdivided": subdivided.n, "pendants": len(pendants)},
    )
    return SubdivisionMap(g, subdivided, path_of, pendants)


def _single_edge(g: Graph) -> SubdivisionMap:
    edges: list[Edge] = [(0, 1)]
    path_of: dict[Edge, tuple[int, ...]] = {(0, 1): ()}
    pendants: list[tuple[int, int]] = []
    next_label = 2 + len(_SINGLE_EDGE_ARMS)
    for i, arm in enumerate(_SINGLE_EDGE_ARMS):
        pendant = 2 + i
        inner = tuple(range(next_label, next_label + arm - 1))
        next_label += arm - 1
        chain = [0, *inner, pendant]
        edges.extend(zip(chain, chain[1:]))
        path_of[(0, pendant)] = inner
        pendants.append((0, pendant))
    return SubdivisionMap(g, Graph(next_label, edges), path_of, tuple(pendants))


def lift_cut(sub: SubdivisionMap, cut: CutAssignment) -> CutAssignment:
    """Extend a cut of the original graph to the subdivided graph, alternating along paths."""
    side = [0] * sub.subdivided.n
    for u in range(sub.original.n):
        side[u] = cut.side[u]
    pendant_of = {p: u for u, p in sub.added_pendants}
    for (u, v), inner in sub.path_of.items():
        for j, w in enumerate(inner, start=1):
            side[w] = side[u] if j % 2 == 0 else 1 - side[u]
        if v in pendant_of:
            side[v] = 1 - (side[inner[-1]] if inner else side[u])
    return CutAssignment(tuple(side), cut_value(sub.subdivided, side))
