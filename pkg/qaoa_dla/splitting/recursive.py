import logging

from qaoa_dla.classify.multiangle import classify_multiangle
from qaoa_dla.config import get_settings
from qaoa_dla.errors import ClosureOverflow, ParameterError, PreconditionError
from qaoa_dla.graphs.base import Graph
from qaoa_dla.pauli.closure import lie_closure
from qaoa_dla.splitting.partition import bfs_splitting, split_generators

logger = logging.getLogger(__name__)


def brute_force_is_free(g: Graph, *, max_qubits: int | None = None) -> bool:
    """Closure of the split generators has the multi-angle dimension."""
    if g.weighted:
        raise PreconditionError("the split-generator oracle takes an unweighted graph", context={"n": g.n})
    expected = classify_multiangle(g)[1].exact
    generators = split_generators(g, bfs_splitting(g))
    try:
        basis = lie_closure(generators, expected, max_qubits=max_qubits)
    except ClosureOverflow:
        return False
    return basis.dimension == expected


def _distinct_traces(g: Graph, vertices: list[int], target: set[int]) -> bool:
    traces = [g.adjacency[u] & target for u in vertices]
    return len(set(traces)) == len(traces)


def check_free_recursive(g: Graph, cap: int | None = None) -> bool:
    """True means free; False means not sure."""
    cap = get_settings().recursive_cap if cap is None else cap
    if cap < 1:
        raise ParameterError(f"cap must be >= 1, got {cap}")
    if g.weighted:
        logger.debug("recursive check skips weighted input", extra={"stage": "check_free", "n": g.n})
        return False
    if g.n <= cap:
        return brute_force_is_free(g, max_qubits=max(cap, get_settings().max_closure_qubits))

    v_e = [u for u in range(g.n) if g.degree(u) % 2 == 0]
    v_o = [u for u in range(g.n) if g.degree(u) % 2 == 1]
    if len(v_o) < 4 or len(v_e) < 4:
        logger.debug("recursive check stopped on small side", extra={"stage": "check_free", "n": g.n})
        return False

    odd_sub, _ = g.induced(v_o)
    if check_free_recursive(odd_sub, cap):
        return _distinct_traces(g, v_e, set(v_o))
    even_sub, _ = g.induced(v_e)
    if check_free_recursive(even_sub, cap):
        return _distinct_traces(g, v_o, set(v_e))
    return False
