"""Random graph samplers and degree-parity utilities.

Every sampler draws from numpy's counter-based Philox4x64 bit generator keyed by
the caller's seed, consuming one uniform double per candidate edge in
row-major (u < v) order. The same (parameters, seed) gives the same graph on
every platform; `PRNG_ID` names the scheme in reports.
"""

from math import comb

import numpy as np

from qaoa_dla.errors import ParameterError
from qaoa_dla.graphs.base import Edge, Graph

PRNG_ID = "numpy-philox4x64/row-major-uniform/v1"
MAX_SEED = 2**64 - 1


def make_rng(seed: int) -> np.random.Generator:
    if not 0 <= int(seed) <= MAX_SEED:
        raise ParameterError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return np.random.Generator(np.random.Philox(int(seed)))


def _check_probability(p: float) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"edge probability must lie in [0, 1], got {p}", context={"p": p})
    return p


def sample_er(n: int, p: float, seed: int) -> Graph:
    if n < 0:
        raise ParameterError(f"vertex count must be non-negative, got {n}")
    p = _check_probability(p)
    rng = make_rng(seed)
    edges: list[Edge] = []
    for u in range(n - 1):
        draws = rng.random(n - u - 1)
        for offset in np.flatnonzero(draws < p):
            edges.append((u, u + 1 + int(offset)))
    return Graph(n, edges)


def sample_bipartite_er(n1: int, n2: int, p: float, seed: int) -> Graph:
    if n1 < 0 or n2 < 0:
        raise ParameterError("side sizes must be non-negative", context={"n1": n1, "n2": n2})
    p = _check_probability(p)
    rng = make_rng(seed)
    edges: list[Edge] = []
    for u in range(n1):
        draws = rng.random(n2)
        for offset in np.flatnonzero(draws < p):
            edges.append((u, n1 + int(offset)))
    return Graph(n1 + n2, edges)


def sample_gnm(n: int, m: int, seed: int) -> Graph:
    """Uniform graph with exactly m edges; used for large sparse smoke inputs."""
    if n < 0 or not 0 <= m <= comb(n, 2):
        raise ParameterError("need 0 <= m <= C(n, 2)", context={"n": n, "m": m})
    rng = make_rng(seed)
    chosen: set[Edge] = set()
    while len(chosen) < m:
        batch = rng.integers(0, n, size=(2 * (m - len(chosen)) + 16, 2))
        for u, v in batch:
            if u != v:
                chosen.add((int(min(u, v)), int(max(u, v))))
                if len(chosen) == m:
                    break
    return Graph(n, sorted(chosen))


def degree_parity_vector(g: Graph) -> list[int]:
    return [d & 1 for d in g.degrees()]


def odd_vertices(g: Graph) -> list[int]:
    return [u for u, d in enumerate(g.degrees()) if d & 1]


def parity_map_rank(n: int) -> int:
    """GF(2) rank of the map sending an edge indicator of K_n to its degree parities."""
    if n < 0:
        raise ParameterError(f"vertex count must be non-negative, got {n}")
    basis: dict[int, int] = {}
    for u in range(n):
        for v in range(u + 1, n):
            vec = (1 << u) | (1 << v)
            while vec:
                top = vec.bit_length() - 1
                if top not in basis:
                    basis[top] = vec
                    break
                vec ^= basis[top]
    return len(basis)


def parity_map_kernel_dimension(n: int) -> int:
    return comb(n, 2) - parity_map_rank(n)
